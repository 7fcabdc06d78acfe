#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "spectral3/lfun.hpp"
#include "spectral3/specfun.hpp"

using namespace spectral3;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Test-local Stirling evaluation: 3-term Bernoulli series after shifting to
// |z| >= 15; independent of the library's deeper expansion.
cplx stirling7(cplx z) {
  cplx shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  return shift + z * std::log(z) - z + 0.5 * std::log(2.0 * kPi / z) +
         1.0 / (12.0 * z) - 1.0 / (360.0 * z * z * z) +
         1.0 / (1260.0 * z * z * z * z * z);
}

MaassFormData degenerate_form(int64 prime_bound) {
  MaassFormData f;
  f.t = 0.0;
  f.parity = Parity::Even;
  f.l_sym2_at_1 = 1.0;
  f.label = "degenerate-ones";
  for (int64 p = 2; p <= prime_bound; ++p) {
    bool prime = true;
    for (int64 d = 2; d * d <= p; ++d)
      if (p % d == 0) { prime = false; break; }
    if (prime) f.satake.push_back({p, cplx(1.0), cplx(1.0)});
  }
  return f;
}

}  // namespace

TEST_CASE("gamma_factor_sym3: trivial value, conjugation, Stirling magnitude") {
  CHECK(std::abs(gamma_factor_sym3(cplx(2.0), 0.0) - cplx(std::pow(kPi, -4.0))) <
        1e-14);
  for (double t : {0.0, 3.0, 9.5}) {
    cplx s(0.7, 1.3);
    CHECK(std::abs(gamma_factor_sym3(std::conj(s), t) -
                   std::conj(gamma_factor_sym3(s, t))) <
          1e-12 * std::abs(gamma_factor_sym3(s, t)));
  }
  // critical-line ratio finite and unimodular-symmetric
  for (double tau : {0.3, 1.7}) {
    cplx s(0.5, tau);
    cplx ratio = std::exp(log_gamma_factor_sym3(s, 4.0) -
                          log_gamma_factor_sym3(1.0 - s, 4.0));
    CHECK(std::isfinite(std::abs(ratio)));
    CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-10);
  }
  // |gamma(1/2)| at t_phi = 10 against |Gamma(1/4+iT)|^2 = 2 pi T^{-1/2} e^{-pi T}
  double t_phi = 10.0;
  double predicted = std::pow(kPi, -1.0) *
                     (2.0 * kPi * std::pow(15.0, -0.5) * std::exp(-kPi * 15.0)) *
                     (2.0 * kPi * std::pow(5.0, -0.5) * std::exp(-kPi * 5.0));
  double actual = std::exp(log_gamma_factor_sym3(cplx(0.5), t_phi).real());
  CHECK(std::abs(actual / predicted - 1.0) < 0.01);
}

TEST_CASE("gamma_factor_rs16: trivial value, symmetry, independent Stirling sum") {
  CHECK(std::abs(gamma_factor_rs16(cplx(2.0), 0.0, 0.0) -
                 cplx(std::pow(kPi, -16.0))) < 1e-14);
  cplx s(1.2, 0.4);
  CHECK(std::abs(gamma_factor_rs16(s, 7.0, 3.0) - gamma_factor_rs16(s, -7.0, 3.0)) <
        1e-12 * std::abs(gamma_factor_rs16(s, 7.0, 3.0)));

  // independent 16-term Stirling evaluation
  double t1 = 12.0, t2 = 12.5;
  cplx sp(1.0, 0.3);
  cplx expected = -8.0 * sp * std::log(kPi);
  for (double a : {3.0 * t1, -3.0 * t1, t1, -t1})
    for (double b : {3.0 * t2, -3.0 * t2, t2, -t2})
      expected += stirling7((sp + cplx(0.0, a + b)) / 2.0);
  cplx got = log_gamma_factor_rs16(sp, t1, t2);
  CHECK(std::abs(got - expected) < 1e-6);
}

TEST_CASE("conductor_ratio: evenness, growth in Delta, envelope comparison") {
  auto r0 = conductor_ratio(50.0, 50.0, 0.01, 0.0);
  CHECK(r0.envelope == doctest::Approx(std::pow(50.0, 6.0)).epsilon(1e-12));
  CHECK(r0.ratio <= 1e3 * r0.envelope);
  CHECK(r0.ratio > 0.0);
  MESSAGE("ratio at T=50, Delta=1: ", r0.ratio, " envelope: ", r0.envelope);

  for (double t : {0.5, 2.0, 7.0}) {
    auto rp = conductor_ratio(30.0, 35.0, 0.01, t);
    auto rm = conductor_ratio(30.0, 35.0, 0.01, -t);
    CHECK(rp.ratio == doctest::Approx(rm.ratio).epsilon(1e-10));
  }

  double prev = 0.0;
  for (double dd : {0.0, 1.0, 3.0, 7.0}) {
    auto r = conductor_ratio(50.0, 50.0 + dd, 0.01, 0.0);
    CHECK(r.ratio > prev);
    prev = r.ratio;
  }
  CHECK_THROWS_AS(conductor_ratio(50.0, 50.0, 0.01, 11.0), std::invalid_argument);
  CHECK_THROWS_AS(conductor_ratio(5.0, 50.0, 0.01, 0.0), std::invalid_argument);
}

TEST_CASE("afe_weight: unit limit, decay beyond the conductor scale, realness") {
  double t_phi = 5.0;
  double y_small = sym3_conductor(t_phi) * 1e-8;
  cplx v0 = afe_weight(y_small, t_phi, 4);
  CHECK(std::abs(v0 - cplx(1.0)) < 1e-6);
  CHECK(std::abs(v0.imag()) < 1e-10);

  double y_big = 2.0 * std::pow(t_phi, 8.0);
  CHECK(std::abs(afe_weight(y_big, t_phi, 4)) < 1e-3);

  // contour-abscissa independence
  cplx a1 = afe_weight(10.0, t_phi, 4);
  cplx a2 = afe_weight(10.0, t_phi, 4, 0.2);
  cplx a3 = afe_weight(10.0, t_phi, 4, 0.3);
  CHECK(std::abs(a1 - a2) < 1e-8);
  CHECK(std::abs(a2 - a3) < 1e-8);

  // first-power template behaves the same way qualitatively
  CHECK(std::abs(afe_weight(1e-6, t_phi, 1) - cplx(1.0)) < 1e-6);
  CHECK_THROWS_AS(afe_weight(-1.0, t_phi, 4), std::invalid_argument);
  CHECK_THROWS_AS(afe_weight(1.0, t_phi, 3), std::invalid_argument);
}

TEST_CASE("tau3_fast agrees with the divisor-sum definition") {
  for (int64 a = 1; a <= 10; ++a)
    for (int64 b = 1; b <= 10; ++b)
      for (int64 c = 1; c <= 10; ++c) CHECK(tau3_fast(a, b, c) == tau3(a, b, c));
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    int64 a = 1 + rng() % 400, b = 1 + rng() % 400, c = 1 + rng() % 400;
    CHECK(tau3_fast(a, b, c) == tau3(a, b, c));
  }
}

TEST_CASE("central_sym3: zeta^16 contour oracle in the degeneration") {
  // all Satake parameters 1: the 4-fold coefficient tower aggregates to the
  // d16 Dirichlet series, so the smoothed sum must equal the single contour
  // integral 2 (1/2 pi i) int zeta(1/2+s)^16 G(s) e^{s^2} ds/s at Re s = 3,
  // where the series converges absolutely and the grid trapezoid is exact to
  // machine precision
  auto form = degenerate_form(400000);
  form.t = 5.0;
  auto cv = central_sym3(form, 4e5);

  double t = 5.0;
  cplx base = log_gamma_factor_sym3(cplx(0.5), t);
  double c = 3.0, dtau = 0.01, tmax = 9.5;
  int n = static_cast<int>(std::round(2.0 * tmax / dtau));
  cplx sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    cplx s(c, -tmax + k * dtau);
    cplx lr = 4.0 * (log_gamma_factor_sym3(0.5 + s, t) - base);
    cplx z = zeta(0.5 + s);
    double w = (k == 0 || k == n) ? 0.5 : 1.0;
    sum += w * std::exp(lr + 16.0 * std::log(z) + s * s) / s;
  }
  double oracle = 2.0 * (sum * (dtau / (2.0 * kPi))).real();
  MESSAGE("central value: ", cv.value, " oracle: ", oracle,
          " tail bound: ", cv.tail_bound);
  CHECK(std::abs(cv.value - oracle) < 1e-5 * std::abs(oracle));
  CHECK(cv.tail_bound > 0.0);

  auto cv2 = central_sym3(form, 2e5);
  CHECK(std::abs(cv.value - cv2.value) < 1e-5 * std::abs(cv.value));
  CHECK_THROWS_AS(central_sym3(form, 0.5), std::invalid_argument);
}

TEST_CASE("dirichlet_partial: zero window, zeta oracle, conjugation, tower identity") {
  auto zero_win = make_window(WindowShape::Gauss, 1.0, 0.3);
  zero_win.amplitude = 0.0;
  CHECK(std::abs(dirichlet_partial(CoeffKind::E4, nullptr, nullptr, cplx(2.0),
                                   zero_win, 100.0)) == 0.0);

  // low-pass window rising to 1 pointwise (cutoff placed a factor 20 above
  // the nominal scale so the n^{-2} tail beyond the transition is < 1e-3):
  // converges to zeta(2)^4
  auto lp = make_window(WindowShape::Lowpass, 20.0, 0.15);
  cplx val = dirichlet_partial(CoeffKind::E4, nullptr, nullptr, cplx(2.0), lp, 1e5);
  double z4 = std::pow(kPi * kPi / 6.0, 4.0);
  CHECK(std::abs(val - cplx(z4)) < 1e-3);
  cplx val_small = dirichlet_partial(CoeffKind::E4, nullptr, nullptr, cplx(2.0),
                                     lp, 1e4);
  CHECK(std::abs(val - cplx(z4)) < 0.2 * std::abs(val_small - cplx(z4)));

  // conjugation for real coefficients
  auto bump = make_window(WindowShape::Gauss, 1.0, 0.3);
  cplx s(1.5, 2.0);
  cplx a = dirichlet_partial(CoeffKind::E4, nullptr, nullptr, s, bump, 500.0);
  cplx b = dirichlet_partial(CoeffKind::E4, nullptr, nullptr, std::conj(s), bump,
                             500.0);
  CHECK(std::abs(b - std::conj(a)) < 1e-12 * (1.0 + std::abs(a)));

  // double-tower mode equals the aggregated 4-fold convolution (the
  // coefficient identity behind the moment setup)
  auto tw = synthetic_form(404, 4000);
  cplx tower = dirichlet_partial(CoeffKind::E4, nullptr, &tw, cplx(0.8, 1.1),
                                 bump, 300.0);
  // aggregate: sum_k (lambda * lambda * lambda * lambda)(k) k^{-s} W(k/N)
  int64 kmax = static_cast<int64>(bump.support_hi() * 300.0) + 1;
  std::vector<double> g(kmax + 1, 0.0), conv(kmax + 1, 0.0);
  for (int64 n = 1; n <= kmax; ++n) g[n] = lambda_gl2(tw, n);
  std::vector<double> g2(kmax + 1, 0.0);
  for (int64 i = 1; i <= kmax; ++i)
    for (int64 j = 1; i * j <= kmax; ++j) g2[i * j] += g[i] * g[j];
  for (int64 i = 1; i <= kmax; ++i)
    for (int64 j = 1; i * j <= kmax; ++j) conv[i * j] += g2[i] * g2[j];
  cplx agg = 0.0;
  for (int64 k = 1; k <= kmax; ++k) {
    cplx w = bump.eval(static_cast<double>(k) / 300.0);
    if (w == cplx(0.0)) continue;
    agg += conv[k] * w * std::exp(-cplx(0.8, 1.1) * std::log((double)k));
  }
  CHECK(std::abs(tower - agg) < 1e-8 * (1.0 + std::abs(agg)));
}

TEST_CASE("smooth windows: shapes, Mellin decay, derivative bounds") {
  auto g = make_window(WindowShape::Gauss, 10.0, 0.3);
  CHECK(g.eval_envelope(10.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g.eval_envelope(g.support_lo() * 0.99) == 0.0);
  CHECK(g.eval_envelope(g.support_hi() * 1.01) == 0.0);

  // mellin at s=1 is the window mass: direct Riemann-sum oracle
  for (auto shape : {WindowShape::Gauss, WindowShape::Cos}) {
    auto w = make_window(shape, 2.0, 0.25);
    double mass = 0.0;
    int nn = 400000;
    double lo = w.support_lo(), hi = w.support_hi();
    for (int k = 0; k < nn; ++k)
      mass += w.eval_envelope(lo + (hi - lo) * (k + 0.5) / nn) * (hi - lo) / nn;
    CHECK(std::abs(mellin(w, cplx(1.0)).real() - mass) < 1e-7 * mass);
  }

  // decay |W~(sigma + i tau)| <= C / (1 + |tau|)^4 measured on a grid; the
  // log-Gaussian decays like e^{-width^2 tau^2 / 2}, so a single constant
  // covers the polynomial envelope on the whole grid
  auto w = make_window(WindowShape::Gauss, 1.0, 0.3);
  double c0 = std::abs(mellin(w, cplx(0.5)));
  double prev_norm = 1e300;
  for (double tau : {5.0, 10.0, 20.0, 40.0}) {
    double v = std::abs(mellin(w, cplx(0.5, tau)));
    CHECK(v <= 650.0 * c0 / std::pow(1.0 + tau, 4.0));
    double norm = v * std::pow(1.0 + tau, 4.0);
    CHECK(norm < prev_norm);  // super-polynomial: normalized values decrease
    prev_norm = norm;
  }
  // conjugation
  cplx s(0.7, 3.3);
  CHECK(std::abs(mellin(w, std::conj(s)) - std::conj(mellin(w, s))) < 1e-12);

  // derivative bounds finite and growing in order
  auto d1 = w.derivative_bound(1);
  auto d4 = w.derivative_bound(4);
  CHECK(d1 > 0.0);
  CHECK(std::isfinite(d4));
  CHECK(d4 > d1);

  // oscillation factor carries unit modulus
  auto wo = make_window(WindowShape::Gauss, 100.0, 0.2);
  wo.oscillating = true;
  wo.osc_u = 2.0;
  wo.osc_Y = 3.0;
  wo.osc_T = 50.0;
  double x = 110.0;
  CHECK(std::abs(std::abs(wo.eval(x)) - wo.eval_envelope(x)) < 1e-14);
}
