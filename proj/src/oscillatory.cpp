#include "spectral3/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "spectral3/voronoi.hpp"

namespace spectral3 {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// 16-point Gauss-Legendre rule on [-1, 1] (positive half; nodes symmetric)
constexpr double kGlX[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double kGlW[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

}  // namespace

void PhaseSpec::check_consistency(int samples, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  double span = sup_hi - sup_lo;
  if (!(span > 0.0))
    throw std::invalid_argument("PhaseSpec: empty support");
  double step = 1e-5 * span;
  for (int k = 0; k < samples; ++k) {
    double x = sup_lo + span * unit(rng);
    double fd1 = (h(x + step) - h(x - step)) / (2.0 * step);
    double fd2 = (dh(x + step) - dh(x - step)) / (2.0 * step);
    double s1 = std::abs(dh(x)) + std::abs(fd1) + 1.0;
    double s2 = std::abs(d2h(x)) + std::abs(fd2) + 1.0;
    if (std::abs(fd1 - dh(x)) > 1e-6 * s1 * (1.0 + 1e-4 * std::abs(d2h(x)) * span))
      throw std::invalid_argument("PhaseSpec: dh inconsistent with h");
    if (std::abs(fd2 - d2h(x)) > 1e-5 * s2)
      throw std::invalid_argument("PhaseSpec: d2h inconsistent with dh");
  }
}

namespace {

cplx gl16(const PhaseSpec& ph, const SmoothWindow& amp, double lo, double hi) {
  double c = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
  cplx acc = 0.0;
  for (int j = 0; j < 8; ++j) {
    for (int sgn : {-1, +1}) {
      double x = c + sgn * hw * kGlX[j];
      acc += kGlW[j] * amp.eval(x) * e_of(ph.h(x) / (2.0 * kPi));
    }
  }
  return acc * hw;
}

}  // namespace

OscResult oscillatory_quad(const PhaseSpec& phase, const SmoothWindow& amplitude) {
  double a = std::max(phase.sup_lo, amplitude.support_lo());
  double b = std::min(phase.sup_hi, amplitude.support_hi());
  OscResult out;
  out.regime = OscRegime::Direct;
  if (!(b > a)) return out;

  const long cap = 3000000;
  double env_sup = amplitude.derivative_bound(0);
  double tol = 1e-13 * (1.0 + env_sup);
  long panels = 0;
  double err = 0.0;

  std::function<cplx(double, double, cplx, int)> refine =
      [&](double lo, double hi, cplx whole, int depth) -> cplx {
    double mid = 0.5 * (lo + hi);
    cplx left = gl16(phase, amplitude, lo, mid);
    cplx right = gl16(phase, amplitude, mid, hi);
    panels += 2;
    if (panels > cap)
      throw std::runtime_error(
          "oscillatory_quad: unresolved oscillation (panel budget exhausted)");
    cplx sum = left + right;
    double dev = std::abs(sum - whole);
    if (dev < tol * (hi - lo) || depth >= 42) {
      err += dev;
      return sum;
    }
    return refine(lo, mid, left, depth + 1) + refine(mid, hi, right, depth + 1);
  };

  cplx total = 0.0;
  double x = a;
  while (x < b) {
    double freq = std::abs(phase.dh(x)) + 1.0;
    double w = std::min(b - x, 2.0 * kPi / freq);
    // probe the right edge too: |h'| may grow across the panel
    double freq2 = std::abs(phase.dh(std::min(b, x + w))) + 1.0;
    w = std::min(w, 2.0 * kPi / freq2 * 1.5);
    double hi = std::min(b, x + w);
    cplx whole = gl16(phase, amplitude, x, hi);
    ++panels;
    total += refine(x, hi, whole, 0);
    x = hi;
  }
  out.value = total;
  out.error_estimate = std::max(err, tol * (b - a));
  out.panels = panels;
  return out;
}

double ibp_envelope(const PhaseSpec& phase, int A) {
  if (A < 0) throw std::invalid_argument("ibp_envelope: A must be >= 0");
  double len = phase.sup_hi - phase.sup_lo;
  double t1 = phase.Q * phase.R / std::sqrt(phase.Y);
  double t2 = phase.R * phase.V;
  return len * phase.X *
         (std::pow(t1, -static_cast<double>(A)) +
          std::pow(t2, -static_cast<double>(A)));
}

OscResult stationary_phase(const PhaseSpec& phase, const SmoothWindow& amplitude) {
  double a = std::max(phase.sup_lo, amplitude.support_lo());
  double b = std::min(phase.sup_hi, amplitude.support_hi());
  if (!(b > a))
    throw std::domain_error("stationary_phase: empty support");

  // locate a sign change of h' on a scan grid
  const int grid = 256;
  double t0 = std::numeric_limits<double>::quiet_NaN();
  double prev_x = a, prev_d = phase.dh(a);
  for (int j = 1; j <= grid; ++j) {
    double x = a + (b - a) * j / grid;
    double d = phase.dh(x);
    if (prev_d == 0.0) { t0 = prev_x; break; }
    if ((prev_d < 0.0) != (d < 0.0)) {
      // bisection + Newton polish
      double lo = prev_x, hi = x;
      for (int it = 0; it < 200; ++it) {
        double midp = 0.5 * (lo + hi);
        double dm = phase.dh(midp);
        double curv = phase.d2h(midp);
        if (std::abs(curv) > 0.0) {
          double nx = midp - dm / curv;
          if (nx > lo && nx < hi && std::abs(phase.dh(nx)) < std::abs(dm))
            midp = nx, dm = phase.dh(midp);
        }
        if ((phase.dh(lo) < 0.0) != (dm < 0.0)) hi = midp; else lo = midp;
        if (hi - lo < 1e-15 * (1.0 + std::abs(midp))) break;
      }
      t0 = 0.5 * (lo + hi);
      break;
    }
    prev_x = x;
    prev_d = d;
  }
  if (!(t0 == t0))
    throw std::domain_error(
        "stationary_phase: no stationary point in the support; use "
        "ibp_envelope for this regime");

  double h2 = phase.d2h(t0);
  // the second derivative must keep one sign across the support
  for (int j = 0; j <= 16; ++j) {
    double x = a + (b - a) * j / 16.0;
    if ((phase.d2h(x) < 0.0) != (h2 < 0.0))
      throw std::domain_error("stationary_phase: h'' changes sign on support");
  }

  double sgn = (h2 > 0.0) ? 1.0 : -1.0;
  cplx lead = amplitude.eval(t0) * std::sqrt(2.0 * kPi / std::abs(h2)) *
              e_of((phase.h(t0) + sgn * kPi / 4.0) / (2.0 * kPi));

  // next-order magnitude from finite differences of the amplitude envelope
  // and the phase oracles
  double d = (b - a) / 256.0;
  auto env = [&](double x) { return amplitude.eval_envelope(x); };
  double w0 = env(t0);
  double w1 = (env(t0 + d) - env(t0 - d)) / (2.0 * d);
  double w2 = (env(t0 + d) - 2.0 * w0 + env(t0 - d)) / (d * d);
  double h3 = (phase.d2h(t0 + d) - phase.d2h(t0 - d)) / (2.0 * d);
  double h4 =
      (phase.d2h(t0 + d) - 2.0 * h2 + phase.d2h(t0 - d)) / (d * d);
  double corr = std::abs(w2) / (2.0 * std::abs(h2)) +
                std::abs(w1 * h3) / (2.0 * h2 * h2) +
                std::abs(w0) * (std::abs(h4) / (8.0 * h2 * h2) +
                                5.0 * h3 * h3 / (24.0 * std::pow(std::abs(h2), 3.0)));

  OscResult out;
  out.value = lead;
  out.error_estimate = 3.0 * std::sqrt(2.0 * kPi / std::abs(h2)) * corr +
                       1e-12 * std::abs(lead);
  out.regime = OscRegime::Stationary;
  return out;
}

StationaryPoint xi0_solve(double alpha, double gamma) {
  if (!(alpha >= 0.1 && alpha <= 10.0))
    throw std::invalid_argument("xi0_solve: alpha must lie in [0.1, 10]");
  if (!(std::abs(gamma) <= 0.3))
    throw std::invalid_argument("xi0_solve: |gamma| must be <= 0.3");
  StationaryPoint sp;
  sp.alpha = alpha;
  sp.gamma = gamma;
  double y = std::cbrt(alpha);
  int it = 0;
  for (; it < 50; ++it) {
    double q = y * y - gamma * gamma;
    double f = q * q - alpha * y;
    double fp = 4.0 * y * q - alpha;
    double step = f / fp;
    y -= step;
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(y))) break;
  }
  double q = y * y - gamma * gamma;
  sp.xi0 = y;
  sp.residual = std::abs(q * q / (alpha * y) - 1.0);
  sp.iterations = it + 1;
  if (!(sp.residual < 1e-13))
    throw std::runtime_error("xi0_solve: Newton failed to converge");
  return sp;
}

namespace {

// truncated power series in u = (gamma/alpha^{1/3})^2
using Series = std::vector<double>;

Series ser_mul(const Series& A, const Series& B, std::size_t n) {
  Series C(n, 0.0);
  for (std::size_t i = 0; i < n && i < A.size(); ++i)
    for (std::size_t j = 0; i + j < n && j < B.size(); ++j)
      C[i + j] += A[i] * B[j];
  return C;
}

// A / B with B[0] != 0
Series ser_div(const Series& A, const Series& B, std::size_t n) {
  Series Q(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double s = (k < A.size()) ? A[k] : 0.0;
    for (std::size_t j = 1; j <= k && j < B.size(); ++j)
      s -= B[j] * Q[k - j];
    Q[k] = s / B[0];
  }
  return Q;
}

// S(u) with (S^2 - u)^2 = S, S(0) = 1, by series Newton iteration
Series xi0_ratio_series(std::size_t n) {
  Series S(n, 0.0);
  S[0] = 1.0;
  Series u(n, 0.0);
  if (n > 1) u[1] = 1.0;
  for (std::size_t pass = 0; (1u << pass) < 2 * n + 2; ++pass) {
    Series S2 = ser_mul(S, S, n);
    Series q(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) q[k] = S2[k] - u[k];
    Series F = ser_mul(q, q, n);
    for (std::size_t k = 0; k < n; ++k) F[k] -= S[k];
    Series Fp = ser_mul(S, q, n);
    for (std::size_t k = 0; k < n; ++k) Fp[k] *= 4.0;
    Fp[0] -= 1.0;
    Series step = ser_div(F, Fp, n);
    for (std::size_t k = 0; k < n; ++k) S[k] -= step[k];
  }
  return S;
}

}  // namespace

std::vector<double> xi0_series_coeffs(int J) {
  if (J < 0) throw std::invalid_argument("xi0_series_coeffs: J must be >= 0");
  return xi0_ratio_series(static_cast<std::size_t>(J) + 1);
}

double xi0_series(double alpha, double gamma, int J) {
  double a3 = std::cbrt(alpha);
  double g = gamma / a3;
  if (!(std::abs(g) <= 0.3))
    throw std::invalid_argument("xi0_series: |gamma/alpha^{1/3}| must be <= 0.3");
  Series s = xi0_ratio_series(static_cast<std::size_t>(J) + 1);
  double u = g * g, acc = 0.0, pw = 1.0;
  for (double c : s) {
    acc += c * pw;
    pw *= u;
  }
  return acc;
}

std::vector<std::array<double, 2>> phase_constants(int J) {
  if (J < 0) throw std::invalid_argument("phase_constants: J must be >= 0");
  std::size_t n = static_cast<std::size_t>(J) + 1;
  Series S = xi0_ratio_series(n);
  // c2_j: coefficients of 3 S(u)
  // c1_j: coefficients of 4 sum_{k>=0} u^{k+1} / ((2k+1) S^{2k+1})
  Series one(n, 0.0);
  one[0] = 1.0;
  Series invS = ser_div(one, S, n);
  Series invS2 = ser_mul(invS, invS, n);
  Series B(n, 0.0);
  Series pw = invS;  // S^{-(2k+1)}
  for (std::size_t k = 0; k + 1 < n + 1; ++k) {
    if (k + 1 >= n) break;
    for (std::size_t j = 0; j + k + 1 < n; ++j)
      B[j + k + 1] += 4.0 / (2.0 * k + 1.0) * pw[j];
    pw = ser_mul(pw, invS2, n);
  }
  std::vector<std::array<double, 2>> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = {B[j], 3.0 * S[j]};
  return out;
}

double OscSetup::x_of(double n, double r) const {
  double dd = static_cast<double>(d1) * d2 * d2;
  return n * m * m / (r * r * r * r * dd);
}

double OscSetup::y_of(double r) const {
  return r * static_cast<double>(d1) * d2 / static_cast<double>(m);
}

double OscSetup::alpha_of(double X, double Y, double v) const {
  double base = Y * T / (kPi * N * std::abs(U));
  return base * base * base * base * N * X / v;
}

double OscSetup::gamma_of(double Y) const {
  return t_phi * Y * T / (2.0 * kPi * N * U);
}

double phase_series_fJ(double n, double r, double v, const OscSetup& p, int J) {
  double X = p.x_of(n, r), Y = p.y_of(r);
  double alpha = p.alpha_of(X, Y, v);
  double gamma = p.gamma_of(Y);
  auto cs = phase_constants(J);
  double a3 = std::cbrt(alpha);
  double acc = 0.0, g2 = gamma * gamma, gp = 1.0;
  for (int j = 0; j <= J; ++j) {
    // alpha^{-(2j-2)/3} = a3^{2-2j}, alpha^{-(2j-1)/3} = a3^{1-2j}
    double a_pow1 = std::pow(a3, 2.0 - 2.0 * j);
    double a_pow2 = std::pow(a3, 1.0 - 2.0 * j);
    acc += (cs[j][0] * a_pow1 + cs[j][1] * a_pow2) * gp;
    gp *= g2;
  }
  return p.N * p.U / (Y * p.T) * acc;
}

double phase_exact_h1(double alpha, double gamma, double nu_over_yt) {
  StationaryPoint sp = xi0_solve(alpha, gamma);
  double logterm = (gamma == 0.0)
                       ? 0.0
                       : std::log((sp.xi0 - gamma) / (sp.xi0 + gamma));
  return nu_over_yt * (-3.0 * sp.xi0 + 2.0 * gamma * logterm);
}

namespace {

// phase derivative of the gamma-factor ratio along Re s = 1/2, by a short
// centered difference of the argument (the step keeps the increment well
// inside one branch)
double arg_g_prime(double tau, double t_phi, double step) {
  cplx a = g_factor(CoeffKind::Phi, +1, cplx(0.5, tau + step), t_phi);
  cplx b = g_factor(CoeffKind::Phi, +1, cplx(0.5, tau - step), t_phi);
  return std::arg(a / b) / (2.0 * step);
}

}  // namespace

namespace {

// fill_exact controls whether a flagged (regime-ambiguous) report also runs
// the contour evaluation; the inner-product kernel skips it because it only
// consumes the asymptotic amplitude and phase
WPlusReport w_plus_impl(double X, double u, double Y, const OscSetup& p,
                        const SmoothWindow& shape, bool fill_exact) {
  if (!(X > 0.0) || !(Y > 0.0))
    throw std::invalid_argument("w_plus_asymptotic: X, Y must be positive");
  if (u == 0.0)
    throw std::invalid_argument("w_plus_asymptotic: u must be nonzero");
  double N = shape.scale;

  WPlusReport rep;
  double au = std::abs(u);
  // the outer phase psi(tau) = phi(x0(tau)) + arg G(1/2+i tau) + tau log X
  // has psi' = log(x0 X) - 2 log((tau^2-t^2)/(2 pi)^2) + o(1), so with
  // xi = x0/N the stationary point solves (xi^2 - g^2)^2 = a xi for
  // a = X (Y T)^4/(N^3 u^4), g = t_phi Y T/(2 pi N |u|); resonance (xi near
  // the window center, a of size one) sits at X = |u|^4 N^3/(Y T)^4
  rep.x_resonant = std::pow(au, 4.0) * N * N * N / std::pow(Y * p.T, 4.0);
  double ratio = X / rep.x_resonant;

  SmoothWindow win = shape;
  win.oscillating = true;
  win.osc_u = u;
  win.osc_Y = Y;
  win.osc_T = p.T;

  rep.flagged = (ratio >= 0.125 && ratio < 0.25) || (ratio > 4.0 && ratio <= 8.0);
  bool resonant = (ratio >= 0.25 && ratio <= 4.0);
  if (!resonant && !rep.flagged) {
    rep.regime = OscRegime::NonStationary;
    rep.value = 0.0;
    // decay certificate: the IBP envelope of the tau-integral with the
    // off-resonance phase-derivative margin |log(x0 X) + arg G'|
    double margin = std::abs(std::log(ratio)) + 1.0;
    rep.error_estimate =
        std::sqrt(N * X) * std::pow(margin, -6.0);
    return rep;
  }
  rep.regime = rep.flagged ? OscRegime::Ambiguous : OscRegime::Stationary;

  // stationary tau of the outer contour integral: d/dtau [phi(x0(tau)) +
  // arg G + tau log X] = log(x0 X) + arg G' = 0, seeded by the quartic root
  double tau_seed;
  {
    double a_cl = std::min(10.0, std::max(0.1, ratio));
    double g_cl = std::min(0.3, p.t_phi * Y * p.T / (2.0 * kPi * N * au));
    double xi0 = xi0_solve(a_cl, g_cl).xi0;
    tau_seed = -2.0 * kPi * N * u * xi0 / (Y * p.T);
  }

  const double dstep = 2e-3;
  auto dpsi = [&](double tau) {
    double x0 = -tau * Y * p.T / (2.0 * kPi * u);  // stationary x of step one
    return std::log(x0 * X) + arg_g_prime(tau, p.t_phi, dstep);
  };
  // secant refinement of dpsi = 0
  double ta = tau_seed, tb = tau_seed * 1.02;
  double fa = dpsi(ta), fb = dpsi(tb);
  for (int it = 0; it < 80 && std::abs(fb) > 1e-11; ++it) {
    double tn = tb - fb * (tb - ta) / (fb - fa);
    if (!(tn == tn) || std::abs(tn - tb) > 0.5 * std::abs(tb))
      tn = 0.5 * (ta + tb);
    ta = tb; fa = fb;
    tb = tn; fb = dpsi(tb);
  }
  double tau_star = tb;
  if (std::abs(fb) > 1e-6)
    throw std::runtime_error("w_plus_asymptotic: stationary tau not found");

  // inner stationary phase: W~(1/2+i tau) at x0
  double x0 = -tau_star * Y * p.T / (2.0 * kPi * u);
  double env = win.eval_envelope(x0);
  double inner_sgn = (-tau_star / (x0 * x0) > 0.0) ? 1.0 : -1.0;
  double inner_amp = env * std::sqrt(x0 * x0 * 2.0 * kPi / std::abs(tau_star));
  double inner_phase = 2.0 * kPi * u * x0 / (Y * p.T) + tau_star * std::log(x0) +
                       inner_sgn * kPi / 4.0;

  // outer stationary phase over tau
  cplx gval = g_factor(CoeffKind::Phi, +1, cplx(0.5, tau_star), p.t_phi);
  double psi2 = 1.0 / tau_star +
                (arg_g_prime(tau_star + dstep, p.t_phi, dstep) -
                 arg_g_prime(tau_star - dstep, p.t_phi, dstep)) /
                    (2.0 * dstep);
  double outer_sgn = (psi2 > 0.0) ? 1.0 : -1.0;
  double amp = inner_amp * std::pow(x0, -0.5) * std::abs(gval) * std::sqrt(X) /
               (2.0 * kPi) * std::sqrt(2.0 * kPi / std::abs(psi2));
  double total_phase = inner_phase + std::arg(gval) + tau_star * std::log(X) +
                       outer_sgn * kPi / 4.0;
  rep.value = amp * e_of(total_phase / (2.0 * kPi));
  // both stationary phases contribute first-order corrections ~ 1/|tau*|
  rep.error_estimate = std::abs(rep.value) * 6.0 / std::abs(tau_star);

  if (rep.flagged && fill_exact)
    rep.exact = w_transform(CoeffKind::Phi, +1, X, win, p.t_phi, 0.5);
  return rep;
}

}  // namespace

WPlusReport w_plus_asymptotic(double X, double u, double Y, const OscSetup& p,
                              const SmoothWindow& shape) {
  return w_plus_impl(X, u, Y, p, shape, true);
}

FrakJResult frakJ(double n1, double n2, double r, const OscSetup& p,
                  const SmoothWindow& g1, const SmoothWindow& shape, int J,
                  bool exact_mode, int nodes) {
  if (nodes < 9) throw std::invalid_argument("frakJ: need at least 9 nodes");
  if (nodes % 2 == 0) ++nodes;
  FrakJResult out;
  out.x1 = p.x_of(n1, r);
  out.x2 = p.x_of(n2, r);
  double Y = p.y_of(r);
  double au = std::abs(p.U);
  out.x_resonant =
      au * au * au * au * p.N * p.N * p.N / std::pow(Y * p.T, 4.0);
  // near-diagonal band of the product kernel
  double band = p.N * p.N * au * au * au / std::pow(Y * p.T, 3.0);
  out.in_window = std::abs(out.x1 - out.x2) < 10.0 * band;

  double vlo = g1.support_lo(), vhi = g1.support_hi();
  double hstep = (vhi - vlo) / (nodes - 1);

  cplx ser = 0.0, exa = 0.0;
  double drift_lo = 1e300, drift_hi = -1e300;
  for (int k = 0; k < nodes; ++k) {
    double v = vlo + k * hstep;
    double wt = (k == 0 || k == nodes - 1) ? 1.0 : ((k % 2) ? 4.0 : 2.0);
    double gv = g1.eval_envelope(v);
    if (gv == 0.0) continue;
    double uu = p.U * v;

    WPlusReport w1 = w_plus_impl(out.x1, uu, Y, p, shape, false);
    WPlusReport w2 = w_plus_impl(out.x2, uu, Y, p, shape, false);
    double f1 = phase_series_fJ(n1, r, v, p, J);
    double f2 = phase_series_fJ(n2, r, v, p, J);
    // residual inert phase of the first kernel (drift diagnostic)
    if (std::abs(w1.value) > 0.0) {
      double resid = std::arg(w1.value * e_of(f1));
      drift_lo = std::min(drift_lo, resid);
      drift_hi = std::max(drift_hi, resid);
    }
    cplx cross = std::abs(w1.value) * std::abs(w2.value) *
                 e_of(std::arg(w1.value * e_of(f1)) / (2.0 * kPi) -
                      std::arg(w2.value * e_of(f2)) / (2.0 * kPi) + f2 - f1);
    ser += wt * gv * cross;

    if (exact_mode) {
      SmoothWindow win = shape;
      win.oscillating = true;
      win.osc_u = uu;
      win.osc_Y = Y;
      win.osc_T = p.T;
      std::vector<cplx> ev = w_transform_batch(CoeffKind::Phi, +1,
                                               {out.x1, out.x2}, win, p.t_phi,
                                               0.5);
      exa += wt * gv * ev[0] * std::conj(ev[1]);
    }
  }
  double simpson = hstep / 3.0 * p.U;
  out.value = ser * simpson;
  out.exact = exa * simpson;
  out.w5_phase_drift = (drift_hi > drift_lo) ? (drift_hi - drift_lo) : 0.0;
  out.error_estimate =
      std::abs(out.value) * (out.w5_phase_drift + 1.0 / (1.0 + std::abs(p.N * p.U / (Y * p.T))));
  out.regime = out.in_window ? OscRegime::Stationary : OscRegime::NonStationary;
  return out;
}

}  // namespace spectral3
