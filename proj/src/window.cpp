#include "spectral3/window.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spectral3 {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

double SmoothWindow::support_lo() const {
  if (shape == WindowShape::Lowpass) return 0.0;
  return scale * std::exp(-cut * width);
}

double SmoothWindow::support_hi() const {
  if (shape == WindowShape::Lowpass) {
    // erfc(l/sqrt(2)) < 1e-300 around l = 37
    return scale * std::exp(38.0 * width);
  }
  return scale * std::exp(cut * width);
}

double SmoothWindow::eval_envelope(double x) const {
  if (x <= 0.0) return 0.0;
  double l = std::log(x / scale) / width;
  switch (shape) {
    case WindowShape::Gauss:
      if (std::abs(l) >= cut) return 0.0;
      return amplitude * std::exp(-0.5 * l * l);
    case WindowShape::Cos: {
      if (std::abs(l) >= cut) return 0.0;
      double taper = std::cos(kPi * l / (2.0 * cut));
      return amplitude * std::exp(-0.5 * l * l) * taper * taper;
    }
    case WindowShape::Lowpass:
      return amplitude * 0.5 * std::erfc(l / std::sqrt(2.0));
  }
  return 0.0;
}

cplx SmoothWindow::eval(double x) const {
  double env = eval_envelope(x);
  if (env == 0.0 || !oscillating) return cplx(env);
  return env * e_of(osc_u * x / (osc_Y * osc_T));
}

double SmoothWindow::derivative_bound(int j) const {
  if (j < 0 || j > 6)
    throw std::invalid_argument("derivative_bound: need 0 <= j <= 6");
  if (j == 0) return amplitude;
  // numeric sup over a log-spaced sample, central differences of order j
  double lo = (shape == WindowShape::Lowpass) ? scale * std::exp(-6.0 * width)
                                              : support_lo() * 1.0000001;
  double hi = (shape == WindowShape::Lowpass) ? scale * std::exp(8.0 * width)
                                              : support_hi() * 0.9999999;
  const int samples = 2000;
  double worst = 0.0;
  // binomial coefficients for the j-th central difference
  std::vector<double> binom(j + 1);
  binom[0] = 1.0;
  for (int i = 1; i <= j; ++i) binom[i] = binom[i - 1] * (j - i + 1) / i;
  for (int k = 0; k <= samples; ++k) {
    double x = lo * std::pow(hi / lo, static_cast<double>(k) / samples);
    double h = std::max(1e-4, 0.02 * x * width / j);
    double acc = 0.0;
    for (int i = 0; i <= j; ++i) {
      double sgn = (i % 2 == 0) ? 1.0 : -1.0;
      acc += sgn * binom[i] * eval_envelope(x + (0.5 * j - i) * h);
    }
    worst = std::max(worst, std::abs(acc) / std::pow(h, j));
  }
  return 2.0 * worst;  // safety margin over the sampled sup
}

SmoothWindow make_window(WindowShape shape, double scale, double width) {
  if (scale <= 0.0 || width <= 0.0)
    throw std::invalid_argument("make_window: scale and width must be positive");
  SmoothWindow w;
  w.shape = shape;
  w.scale = scale;
  w.width = width;
  w.cut = (shape == WindowShape::Cos) ? 5.0 : 8.0;
  return w;
}

cplx mellin(const SmoothWindow& w, cplx s) {
  // integrate in l = log x over the support; for Lowpass require Re s > 0
  double llo, lhi;
  if (w.shape == WindowShape::Lowpass) {
    if (s.real() <= 0.0)
      throw std::invalid_argument("mellin: lowpass window needs Re s > 0");
    llo = std::log(w.scale) - 40.0 / s.real() - 6.0 * w.width;
    lhi = std::log(w.scale) + 38.0 * w.width;
  } else {
    llo = std::log(w.support_lo());
    lhi = std::log(w.support_hi());
  }
  // oscillation shrinks the usable panel size; scale the initial grid with
  // the largest phase gradient over the support
  double phase_scale = 1.0;
  if (w.oscillating)
    phase_scale += std::abs(w.osc_u) * w.support_hi() / (w.osc_Y * w.osc_T);
  phase_scale += 0.1 * std::abs(s.imag()) * (lhi - llo);

  auto integrand = [&](double l) -> cplx {
    double x = std::exp(l);
    return w.eval(x) * std::exp(s * l);
  };
  int n = 64;
  while (static_cast<double>(n) < 16.0 * phase_scale && n < (1 << 20)) n *= 2;
  cplx prev(0.0);
  for (int iter = 0; iter < 14; ++iter, n *= 2) {
    double h = (lhi - llo) / n;
    cplx sum = integrand(llo) + integrand(lhi);
    double mass = std::abs(sum);
    for (int k = 1; k < n; ++k) {
      cplx v = integrand(llo + k * h);
      sum += ((k % 2) ? 4.0 : 2.0) * v;
      mass += 2.0 * std::abs(v);
    }
    cplx val = sum * (h / 3.0);
    mass *= h;
    // oscillation can cancel the integral far below the integrand scale;
    // stop once the change is negligible against that scale too
    if (iter > 0 &&
        std::abs(val - prev) <= 1e-13 * (std::abs(val) + 1e-30) + 1e-15 * mass)
      return val;
    prev = val;
  }
  return prev;
}

}  // namespace spectral3
