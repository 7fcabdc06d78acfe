#pragma once
// Complex Gamma, zeta, completed zeta, Hurwitz zeta, K-Bessel (imaginary and
// general complex order) and the Stirling-form approximations used by the
// gamma-factor asymptotics.

#include <complex>
#include <cstdint>

#include "spectral3/arith.hpp"

namespace spectral3 {

// Principal-branch log Gamma: upward recursion into |z| >= 12 followed by the
// Bernoulli asymptotic series; reflection for Re z < 1/2.
// Throws std::domain_error at non-positive integers.
cplx log_gamma(cplx z);

cplx gamma_c(cplx z);  // exp(log_gamma(z))

// Riemann zeta via Euler-Maclaurin (N = max(20, 2|Im s|), Bernoulli order 12),
// reflection formula for Re s < 0. Throws std::domain_error at s = 1.
cplx zeta(cplx s);

// Completed zeta xi(s) = pi^{-s/2} Gamma(s/2) zeta(s).
// Throws std::domain_error at s = 0 or 1.
cplx xi(cplx s);

// zeta_H(s, x) = sum_{n >= 0} (n + x)^{-s}, x > 0, Euler-Maclaurin continuation.
cplx hurwitz_zeta_x(cplx s, double x);

// sum over n = a mod c, n >= 1, of n^{-s}  ==  c^{-s} zeta_H(s, a/c).
cplx hurwitz_zeta(cplx s, int64 a, int64 c);

// Modified Bessel K_nu(y) for complex order, y > 0.
// Production path is the cosh-integral int_0^infty e^{-y cosh u} cosh(nu u) du
// on a trapezoid grid (spectrally accurate); for strongly oscillatory order
// (|Im nu| > 5) at small y the power-series form via I_{+-nu} is used instead
// to preserve relative accuracy through the exponential cancellation.
cplx k_bessel_nu(cplx nu, double y);

// K_{it}(y), real-valued and even in t.
double k_bessel_it(double t, double y);

struct StirlingResult {
  cplx value;             // approximation of Gamma(sn + it) / Gamma(sd + it)
  double error_estimate;  // first-omitted-term bound, scales like |t|^{-J}
};

// Stirling-form approximation of Gamma(sigma_num + it)/Gamma(sigma_den + it),
// truncation order J; requires |t| >= 10.
StirlingResult stirling_ratio(double sigma_num, double sigma_den, double t, int J);

}  // namespace spectral3
