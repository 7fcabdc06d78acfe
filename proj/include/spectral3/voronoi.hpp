#pragma once
// Degree-4 balanced Voronoi summation: the dual-side gamma-factor ratios, the
// Hankel-type transforms of a smooth window, the singular part of the
// additively twisted divisor series, the residue term at s = 1, and a
// two-sided numerical verification of the summation formula.

#include <complex>

#include "spectral3/arith.hpp"
#include "spectral3/coeffs.hpp"
#include "spectral3/window.hpp"

namespace spectral3 {

struct VoronoiCase {
  CoeffKind kind = CoeffKind::E4;
  const MaassFormData* form = nullptr;  // required when kind == Phi
  int64 m = 1;
  int64 c = 1;
  int64 a = 1;  // gcd(a, c) = 1
  SmoothWindow window;
};

// G_{sign}(s) for the functional equation of the degree-4 pair:
//   G_{+,Phi} = pi^{4s-2} (prod_pm Gamma((1-s pm i t)/2) /
//                          prod_pm Gamma((s pm i t)/2))^2,
//   G_{-,Phi} the same with (2-s pm i t)/(1+s pm i t),
//   kind E4 uses the single shift 0 with multiplicity four (t_phi ignored).
// sign is +1 or -1. Throws std::domain_error on a numerator Gamma pole;
// returns 0 at denominator poles.
cplx g_factor(CoeffKind kind, int sign, cplx s, double t_phi);

// W_{sign}(x) = (1/2 pi i) int_(abscissa) W~(s) G_sign(s) x^s ds for x > 0.
// Any abscissa < 1 is admissible; the window must be compactly supported.
cplx w_transform(CoeffKind kind, int sign, double x, const SmoothWindow& window,
                 double t_phi, double abscissa = -1.5);

// w_transform at several arguments sharing one contour table (the table
// build dominates the cost, so batching is much cheaper than repeated
// single-point calls).
std::vector<cplx> w_transform_batch(CoeffKind kind, int sign,
                                    const std::vector<double>& xs,
                                    const SmoothWindow& window, double t_phi,
                                    double abscissa = -1.5);

// The combined dual kernel: W_F(x) = W_+(x) - W_-(x) for x > 0 and
// W_F(x) = W_+(-x) + W_-(-x) for x < 0.
cplx w_kernel(CoeffKind kind, double x, const SmoothWindow& window,
              double t_phi, double abscissa = -1.5);

// The singular (polar) part L(s; m, c) of sum_n tau(n,m,1) e(abar n / c) n^{-s}:
// zeta(s)^4 times finite Moebius/divisor sums and a truncated Euler product.
// Requires Re s > 0, s != 1; independent of the residue a.
cplx singular_part(cplx s, int64 m, int64 c);

// Res_{s=1} W~(s) L(s; m, c) by an M-point trapezoid on |s-1| = radius.
// Requires 0 < radius < 1 (no other singularity inside).
cplx residue_term(const SmoothWindow& window, int64 m, int64 c,
                  double radius = 0.05, int points = 256);

// The analytic envelope (N/R) (u N / (R T))^{-A} dominating the residue term
// in the oscillating regime.
double residue_envelope(double u, double R, double T, double N, int A = 3);

struct VoronoiReport {
  cplx lhs = 0.0;       // direct twisted sum over the window support
  cplx rhs = 0.0;       // residue term plus the dual hyper-Kloosterman sum
  cplx residue = 0.0;   // the residue contribution alone (zero for Phi)
  double rel_error = 0.0;
  double tail_bound = 0.0;  // envelope for the truncated dual tail
  int64 dual_terms = 0;
  bool pass = false;
};

// Evaluates both sides of the degree-4 Voronoi identity for the given case
// and window; desk scale: c <= 12, m <= 4, window scale <= 1e3.
VoronoiReport verify_voronoi(const VoronoiCase& vc, double tolerance = 1e-5);

}  // namespace spectral3
