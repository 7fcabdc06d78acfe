#include "spectral3/lfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spectral3/specfun.hpp"

namespace spectral3 {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

cplx log_gamma_factor_sym3(cplx s, double t_phi) {
  cplx lg = -2.0 * s * std::log(kPi);
  for (double sh : {3.0 * t_phi, -3.0 * t_phi, t_phi, -t_phi})
    lg += log_gamma((s + cplx(0.0, sh)) / 2.0);
  return lg;
}

cplx gamma_factor_sym3(cplx s, double t_phi) {
  return std::exp(log_gamma_factor_sym3(s, t_phi));
}

cplx log_gamma_factor_rs16(cplx s, double t1, double t2) {
  cplx lg = -8.0 * s * std::log(kPi);
  for (double a : {3.0 * t1, -3.0 * t1, t1, -t1})
    for (double b : {3.0 * t2, -3.0 * t2, t2, -t2})
      lg += log_gamma((s + cplx(0.0, a + b)) / 2.0);
  return lg;
}

cplx gamma_factor_rs16(cplx s, double t1, double t2) {
  return std::exp(log_gamma_factor_rs16(s, t1, t2));
}

ConductorRatio conductor_ratio(double t1, double t2, double eps, double t) {
  if (std::abs(t) > 10.0)
    throw std::invalid_argument("conductor_ratio: requires |t| <= 10");
  double T = std::min(t1, t2);
  if (T < 10.0)
    throw std::invalid_argument("conductor_ratio: requires min(t1,t2) >= 10");
  cplx num = log_gamma_factor_rs16(cplx(1.0 + eps, t), t1, t2);
  cplx den = log_gamma_factor_rs16(cplx(-eps, -t), t1, t2);
  double delta = std::abs(t1 - t2) + 1.0;
  return {std::exp(num.real() - den.real()),
          std::sqrt(std::pow(T, 12.0) * std::pow(delta, 4.0))};
}

double sym3_conductor(double t_phi) {
  double a = 1.0 + 3.0 * std::abs(t_phi);
  double b = 1.0 + std::abs(t_phi);
  return a * a * b * b;
}

namespace {

// Precomputed integrand of the AFE contour integral on a uniform tau grid:
// (gamma(1/2+s)/gamma(1/2))^power e^{s^2} / s at s = c + i tau.
struct AfeWeightTable {
  double c;
  double dtau;
  std::vector<cplx> g;   // integrand values, tau = -tau_max + k dtau
  double tau_max;

  AfeWeightTable(double t_phi, int power, double abscissa) {
    double cond = std::pow(sym3_conductor(t_phi), power);
    c = (abscissa != 0.0) ? abscissa : 1.0 / std::log(std::max(cond, 10.0));
    // e^{s^2} kills the integrand like e^{-tau^2}; 9.5 is far below any
    // double-precision contribution (e^{-90}).
    tau_max = 9.5;
    dtau = 0.02;
    cplx base = log_gamma_factor_sym3(cplx(0.5), t_phi);
    int n = static_cast<int>(std::round(2.0 * tau_max / dtau));
    g.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      cplx s(c, -tau_max + k * dtau);
      cplx lr = static_cast<double>(power) *
                (log_gamma_factor_sym3(0.5 + s, t_phi) - base);
      // the 1/s pole is handled in closed form in eval(); store only the
      // regular part (F(s) - 1) e^{s^2} / s, which is analytic across s = 0,
      // so the trapezoid grid stays accurate for small abscissae
      g[k] = (std::exp(lr) - 1.0) * std::exp(s * s) / s;
    }
  }

  cplx eval(double y) const {
    // (1/2 pi) sum g_k y^{-s_k} dtau  +  pole term
    // (1/2 pi i) int e^{s^2} y^{-s} ds/s = erfc(log(y)/2)/2 for Re s > 0
    cplx sum = 0.0;
    double ly = std::log(y);
    cplx ph = std::exp(cplx(-c * ly, tau_max * ly));
    cplx rot = std::exp(cplx(0.0, -dtau * ly));
    for (std::size_t k = 0; k < g.size(); ++k) {
      double w = (k == 0 || k + 1 == g.size()) ? 0.5 : 1.0;
      sum += w * g[k] * ph;
      ph *= rot;
    }
    return sum * (dtau / (2.0 * kPi)) + 0.5 * std::erfc(0.5 * ly);
  }
};

}  // namespace

cplx afe_weight(double y, double t_phi, int power, double abscissa) {
  if (y <= 0.0) throw std::invalid_argument("afe_weight: y must be positive");
  if (power != 1 && power != 4 && power != 5)
    throw std::invalid_argument("afe_weight: power must be 1, 4 or 5");
  AfeWeightTable table(t_phi, power, abscissa);
  return table.eval(y);
}

CentralValue central_sym3(const MaassFormData& form, double truncation) {
  if (truncation < 1.0)
    throw std::invalid_argument("central_sym3: truncation must be >= 1");
  int64 X = static_cast<int64>(truncation);
  AfeWeightTable table(form.t, 4, 0.0);
  // V is smooth on a unit log scale; tabulate on a fine log grid and
  // cubic-interpolate (absolute error ~1e-9, far below the tail envelope)
  const double h = 0.005;
  double lmax = std::log(static_cast<double>(X)) + 2.0 * h;
  int grid_n = static_cast<int>(std::ceil(lmax / h)) + 2;
  std::vector<double> vgrid(grid_n + 1);
  for (int k = 0; k <= grid_n; ++k) vgrid[k] = table.eval(std::exp(k * h)).real();
  auto v_interp = [&](double y) -> double {
    double l = std::log(y) / h;
    int k = static_cast<int>(l);
    if (k < 1) k = 1;
    if (k > grid_n - 3) k = grid_n - 3;
    double u = l - k;
    // Catmull-Rom through vgrid[k-1..k+2]
    double a = vgrid[k - 1], b = vgrid[k], c = vgrid[k + 1], d = vgrid[k + 2];
    return b + 0.5 * u * (c - a +
           u * (2.0 * a - 5.0 * b + 4.0 * c - d +
                u * (3.0 * (b - c) + d - a)));
  };
  CoefficientTable cache;
  cache.kind = "sym3";
  cache.form_label = form.label;
  double value = 0.0;
  for (int64 d = 1; d * d * d * d <= X; ++d)
    for (int64 m1 = 1; d * d * d * d * m1 * m1 * m1 <= X; ++m1)
      for (int64 m2 = 1; d * d * d * d * m1 * m1 * m1 * m2 * m2 <= X; ++m2) {
        int64 base = d * d * d * d * m1 * m1 * m1 * m2 * m2;
        for (int64 m3 = 1; base * m3 <= X; ++m3) {
          int64 y = base * m3;
          double lam = lambda_sym3_cached(cache, form, m1, m2, m3);
          if (lam == 0.0) continue;
          double t3 = static_cast<double>(tau3_fast(m1, m2, m3));
          value += 2.0 * lam * t3 * v_interp(static_cast<double>(y)) /
                   std::sqrt(static_cast<double>(y));
        }
      }
  // heuristic tail envelope: |V| at the cutoff times a divisor-sum factor
  double vX = std::abs(table.eval(static_cast<double>(X)));
  CentralValue cv;
  cv.value = value;
  cv.tail_bound = 2.0 * vX * std::sqrt(static_cast<double>(X)) *
                  std::pow(std::log(static_cast<double>(X) + 2.0), 3.0);
  cv.truncation = static_cast<double>(X);
  return cv;
}

cplx dirichlet_partial(CoeffKind kind, const MaassFormData* form,
                       const MaassFormData* twist, cplx s,
                       const SmoothWindow& window, double N) {
  if (N <= 0.0) throw std::invalid_argument("dirichlet_partial: N must be > 0");
  if (kind == CoeffKind::Phi && form == nullptr)
    throw std::invalid_argument("dirichlet_partial: Phi requires form data");
  auto weight = [&](double x) -> cplx { return window.eval(x / N); };
  double lo = window.support_lo() * N, hi = window.support_hi() * N;
  // effective summation endpoint: the lowpass envelope is already below the
  // 1e-12 break threshold well before its formal support end
  double hi_eff = hi;
  if (window.shape == WindowShape::Lowpass)
    hi_eff = std::min(hi, N * window.scale * std::exp(7.2 * window.width));
  // for long plain d4 ranges, per-n trial division dominates; sieve instead
  std::vector<int> d4_sieve;
  if (twist == nullptr && kind == CoeffKind::E4 && hi_eff > 5e4 && hi_eff < 5e8) {
    int64 H = static_cast<int64>(hi_eff) + 1;
    // d4 = 1*1*1*1 by repeated convolution with the constant-1 function
    std::vector<int> dk(H + 1, 1);
    dk[0] = 0;
    for (int pass = 0; pass < 3; ++pass) {
      std::vector<int> next(H + 1, 0);
      for (int64 i = 1; i <= H; ++i) {
        int di = dk[i];
        for (int64 j = i; j <= H; j += i) next[j] += di;
      }
      dk.swap(next);
    }
    d4_sieve = std::move(dk);
  }
  auto coeff1 = [&](int64 n) -> double {
    if (kind != CoeffKind::E4) return a_phi(*form, n, 1);
    if (!d4_sieve.empty() && n < static_cast<int64>(d4_sieve.size()))
      return static_cast<double>(d4_sieve[n]);
    return static_cast<double>(divisor_fn(4, n));
  };
  cplx sum = 0.0;
  if (twist == nullptr) {
    int64 n0 = std::max<int64>(1, static_cast<int64>(std::ceil(lo)));
    for (int64 n = n0;; ++n) {
      double x = static_cast<double>(n);
      if (x > hi) break;
      cplx w = weight(x);
      // lowpass windows extend far past the scale; stop once the envelope is
      // monotonically negligible
      if (window.shape == WindowShape::Lowpass && x > N &&
          std::abs(w) < 1e-12 * window.amplitude)
        break;
      if (w == cplx(0.0)) continue;
      sum += coeff1(n) * w * std::exp(-s * std::log(x));
    }
    return sum;
  }
  for (int64 m = 1; static_cast<double>(m) * m <= hi; ++m) {
    int64 mm = m * m;
    int64 n0 = std::max<int64>(1, static_cast<int64>(std::ceil(lo / mm)));
    for (int64 n = n0;; ++n) {
      double x = static_cast<double>(mm) * n;
      if (x > hi) break;
      cplx w = weight(x);
      if (window.shape == WindowShape::Lowpass && x > N &&
          std::abs(w) < 1e-12 * window.amplitude)
        break;
      if (w == cplx(0.0)) continue;
      double c = (kind == CoeffKind::E4) ? static_cast<double>(tau_e4(n, m))
                                         : a_phi(*form, n, m);
      sum += c * lambda_gl2(*twist, n) * w * std::exp(-s * std::log(x));
    }
  }
  return sum;
}

}  // namespace spectral3
