#pragma once
// Smooth test windows in log scale: a truncated log-Gaussian bump, a
// cosine-tapered log-Gaussian bump, and an erfc low-pass cutoff, with an
// optional linear-phase oscillation factor e(u x / (Y T)). All shapes have
// closed-form envelopes; Mellin transforms are evaluated by doubling Simpson
// quadrature.

#include <complex>

#include "spectral3/arith.hpp"

namespace spectral3 {

enum class WindowShape { Gauss, Cos, Lowpass };

struct SmoothWindow {
  WindowShape shape = WindowShape::Gauss;
  double scale = 1.0;      // center (Gauss/Cos) or cutoff (Lowpass) scale N
  double width = 0.35;     // log-space width
  double cut = 8.0;        // support half-width in units of `width`
  double amplitude = 1.0;
  bool oscillating = false;
  double osc_u = 0.0;
  double osc_Y = 1.0;
  double osc_T = 1.0;

  // support endpoints in x; Lowpass support_hi is where the envelope drops
  // below 1e-300 for practical purposes
  double support_lo() const;
  double support_hi() const;

  double eval_envelope(double x) const;  // real envelope, no oscillation
  cplx eval(double x) const;             // envelope times e(u x/(Y T))

  // sup-norm estimate of the j-th derivative of the envelope (numeric
  // sampling with a safety factor), 0 <= j <= 6
  double derivative_bound(int j) const;
};

SmoothWindow make_window(WindowShape shape, double scale, double width);

// W~(s) = int_0^infty W(x) x^{s-1} dx, including the oscillation factor.
// Doubling composite Simpson in log x; relative accuracy ~1e-12.
cplx mellin(const SmoothWindow& w, cplx s);

}  // namespace spectral3
