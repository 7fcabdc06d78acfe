#pragma once
// Gamma factors of the degree-4 symmetric-cube L-function and the degree-16
// Rankin-Selberg pairing, the approximate-functional-equation weight, the
// smoothed central value, and windowed Dirichlet polynomials.

#include <complex>

#include "spectral3/coeffs.hpp"
#include "spectral3/window.hpp"

namespace spectral3 {

// gamma(s) = pi^{-2s} prod_{+-} Gamma((s +- 3 i t)/2) Gamma((s +- i t)/2).
// Throws std::domain_error at Gamma poles.
cplx gamma_factor_sym3(cplx s, double t_phi);

// log of gamma_factor_sym3 (avoids under/overflow at large |t|).
cplx log_gamma_factor_sym3(cplx s, double t_phi);

// Degree-16 pairing factor pi^{-8s} prod over the 16 shift combinations
// (+-3it1 +-3it2, +-3it1 +-it2, +-it1 +-3it2, +-it1 +-it2).
cplx gamma_factor_rs16(cplx s, double t1, double t2);
cplx log_gamma_factor_rs16(cplx s, double t1, double t2);

struct ConductorRatio {
  double ratio;     // |gamma(1+eps+it) / gamma(-eps-it)|
  double envelope;  // (T^12 Delta^4)^{1/2}, T = min(t1,t2), Delta = |t1-t2|+1
};

// Exact pairing-factor ratio magnitude against its analytic-conductor
// envelope; requires |t| <= 10 and min(t1, t2) >= 10.
ConductorRatio conductor_ratio(double t1, double t2, double eps, double t);

// Analytic conductor heuristic: product of (1 + |shift|) over the four
// gamma shifts of the symmetric cube.
double sym3_conductor(double t_phi);

// V(y, t) = (1/2 pi i) int (gamma(1/2+s)/gamma(1/2))^power e^{s^2} y^{-s} ds/s
// on the vertical line Re s = abscissa (default 1/log of the power-adjusted
// conductor). power in {1, 4, 5}. V -> 1 as y -> 0, decays super-polynomially
// beyond the conductor scale.
cplx afe_weight(double y, double t_phi, int power, double abscissa = 0.0);

struct CentralValue {
  double value;       // smoothed estimate of L(1/2)^4 via the 4-fold expansion
  double tail_bound;  // heuristic envelope for the discarded tail
  double truncation;  // the index cutoff actually used
};

// Smoothed 4th-power central value: 2 sum over d^4 m1^3 m2^2 m3 <= truncation
// of lambda(m1,m2,m3) tau3(m1,m2,m3) y^{-1/2} V(y, t) with power-4 weight.
CentralValue central_sym3(const MaassFormData& form, double truncation);

// Windowed Dirichlet polynomial.
// twist == nullptr: sum_n A_kind(n,1,1) n^{-s} W(n/N)  (plain degree-4 series)
// twist != nullptr: sum_m sum_n A_kind(n,m,1) lambda_twist(n) (m^2 n)^{-s}
//                   W(m^2 n / N)  (the moment-experiment double tower)
cplx dirichlet_partial(CoeffKind kind, const MaassFormData* form,
                       const MaassFormData* twist, cplx s,
                       const SmoothWindow& window, double N);

}  // namespace spectral3
