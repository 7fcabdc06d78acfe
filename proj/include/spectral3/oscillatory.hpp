#pragma once
// Oscillatory-integral toolkit: an oscillation-resolving adaptive quadrature,
// integration-by-parts envelopes, first-order stationary phase, the quartic
// stationary-point equation with its power series, the phase-constant table
// of the dual-kernel asymptotic, and the inner-product kernel built from two
// dual-kernel asymptotics.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "spectral3/arith.hpp"
#include "spectral3/window.hpp"

namespace spectral3 {

// A smooth phase with derivative oracles (convention: integrand e^{i h(x)},
// h in radians) plus the scale metadata the envelope bounds consume:
// |w^(j)| <= X V^-j on [sup_lo, sup_hi], |h'| >= R, |h^(j)| <= Y Q^-j (j>=2).
struct PhaseSpec {
  std::function<double(double)> h;
  std::function<double(double)> dh;
  std::function<double(double)> d2h;
  double sup_lo = 0.0;
  double sup_hi = 1.0;
  double X = 1.0;
  double V = 1.0;
  double R = 1.0;
  double Y = 1.0;
  double Q = 1.0;

  // Finite-difference consistency of the derivative oracles at sampled
  // points; throws std::invalid_argument when they disagree beyond 1e-6
  // relative.
  void check_consistency(int samples = 24, std::uint64_t seed = 7) const;
};

enum class OscRegime { Direct, Stationary, NonStationary, Ambiguous };

struct OscResult {
  cplx value = 0.0;
  double error_estimate = 0.0;
  OscRegime regime = OscRegime::Direct;
  long panels = 0;
};

// int w(x) e^{i h(x)} dx by adaptive 16-point Gauss-Legendre panels whose
// initial size never exceeds 2 pi / (|h'| + 1), subdivided until the
// two-half refinement agrees. Throws std::runtime_error when the panel
// budget is exhausted (unresolved oscillation).
OscResult oscillatory_quad(const PhaseSpec& phase, const SmoothWindow& amplitude);

// The repeated-integration-by-parts envelope
//   (beta - alpha) X [ (Q R / sqrt(Y))^-A + (R V)^-A ]
// from the phase metadata; A = 0 gives twice the trivial bound.
double ibp_envelope(const PhaseSpec& phase, int A);

// Leading-order stationary phase: w(t0) sqrt(2 pi/|h''(t0)|)
// e^{i(h(t0) + sgn(h'') pi/4)}, with a finite-difference estimate of the
// next-order correction as error_estimate. Throws std::domain_error naming
// ibp_envelope when no stationary point lies in the support, and when h''
// changes sign there.
OscResult stationary_phase(const PhaseSpec& phase, const SmoothWindow& amplitude);

// The real root xi0 ~ alpha^{1/3} of (xi0^2 - gamma^2)^2 = alpha xi0
// (the normalized stationary-point quartic of the dual-kernel phase).
struct StationaryPoint {
  double xi0 = 0.0;
  double alpha = 1.0;
  double gamma = 0.0;
  double residual = 0.0;  // |(xi0^2-gamma^2)^2/(alpha xi0) - 1|
  int iterations = 0;
};

// Newton from xi0 = alpha^{1/3}; requires alpha in [0.1, 10], |gamma| <= 0.3;
// residual below 1e-13 or std::runtime_error after 50 steps.
StationaryPoint xi0_solve(double alpha, double gamma);

// Coefficients s_0..s_J of xi0/alpha^{1/3} = sum_k s_k (gamma/alpha^{1/3})^{2k},
// generated by Newton iteration on the power series; the low-order values are
// 1, 2/3, -1/3, 28/81, -110/243, 2/3.
std::vector<double> xi0_series_coeffs(int J);

// Truncated series for the ratio xi0/alpha^{1/3} through order
// (gamma/alpha^{1/3})^{2J}; requires |gamma/alpha^{1/3}| <= 0.3.
double xi0_series(double alpha, double gamma, int J);

// Phase constants {c1_j, c2_j} of the stationary-value expansion
//   3 xi0 - 2 gamma log((xi0-gamma)/(xi0+gamma))
//     = sum_j (c1_j alpha^{-(2j-2)/3} + c2_j alpha^{-(2j-1)/3}) gamma^{2j};
// low orders: c1 = {0, 4, -4/3, 56/45, ...}, c2 = {3, 2, -1, 28/27, ...}.
std::vector<std::array<double, 2>> phase_constants(int J);

// Parameter vector of the second-moment analysis: dyadic block center N,
// u-scale U, spectral scale T, GL(2) spectral parameter t_phi, and the
// modulus data (m, d1, d2) fixing X(n, r) = n m^2/(r^4 d1 d2^2) and
// Y(r) = r d1 d2 / m.
struct OscSetup {
  double N = 1.0e4;
  double U = 1.0;
  double T = 1.0e3;
  double t_phi = 0.0;
  int64 m = 1;
  int64 d1 = 1;
  int64 d2 = 1;

  double x_of(double n, double r) const;
  double y_of(double r) const;
  double alpha_of(double X, double Y, double v) const;  // (YT/(pi N|U|))^4 NX/v
  double gamma_of(double Y) const;                      // t_phi Y T/(2 pi N U)
};

// f_J(n, r, v) = (NU/YT) sum_{j<=J} (c1_j a^{-(2j-2)/3} + c2_j a^{-(2j-1)/3})
// gamma^{2j} in cycles (argument of e(.)); the full series equals the
// negative of the exact stationary phase value h1(xi0).
double phase_series_fJ(double n, double r, double v, const OscSetup& p, int J);

// Exact stationary value (NU/YT)(-3 xi0 + 2 gamma log((xi0-gamma)/(xi0+gamma)))
// in cycles, via xi0_solve; phase_series_fJ converges to its negative.
double phase_exact_h1(double alpha, double gamma, double nu_over_yt);

struct WPlusReport {
  cplx value = 0.0;          // asymptotic value (0 in the decaying regime)
  cplx exact = 0.0;          // contour evaluation, filled when flagged
  double error_estimate = 0.0;
  OscRegime regime = OscRegime::NonStationary;
  double x_resonant = 0.0;   // |U|^4 N^3 / (Y^4 T^4)
  bool flagged = false;      // X within a factor 4 of the resonance band
};

// Leading asymptotic of the dual-kernel transform of the oscillating window
// shape(x/N) e(u x/(Y T)): two chained stationary-phase evaluations on the
// Re s = 1/2 contour. `shape` supplies the profile; its scale is read as N.
WPlusReport w_plus_asymptotic(double X, double u, double Y, const OscSetup& p,
                              const SmoothWindow& shape);

struct FrakJResult {
  cplx value = 0.0;          // series-phase evaluation
  cplx exact = 0.0;          // direct contour product integral (exact mode)
  double error_estimate = 0.0;
  OscRegime regime = OscRegime::Stationary;
  double x1 = 0.0, x2 = 0.0, x_resonant = 0.0;
  bool in_window = true;     // |X1-X2| within the near-diagonal band
  double w5_phase_drift = 0.0;  // sup variation of the residual inert phase
};

// The u-averaged product of two dual-kernel transforms
//   int g1(u/U) W(X1; u, Y) conj(W(X2; u, Y)) du,
// evaluated with asymptotic amplitudes and the series phase difference
// f_J(n2) - f_J(n1) (exact_mode additionally computes the direct contour
// product on a Simpson grid with `nodes` points).
FrakJResult frakJ(double n1, double n2, double r, const OscSetup& p,
                  const SmoothWindow& g1, const SmoothWindow& shape, int J,
                  bool exact_mode = false, int nodes = 97);

}  // namespace spectral3
