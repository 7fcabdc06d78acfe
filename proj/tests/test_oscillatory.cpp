// Tests for the oscillatory-integral toolkit: the adaptive oscillation-
// resolving quadrature (validated against high-precision references), the
// integration-by-parts envelope, first-order stationary phase with its
// convergence rate, the quartic stationary-point equation and its power
// series, the phase-constant table, and the two asymptotic kernels built on
// top of them.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "spectral3/oscillatory.hpp"
#include "spectral3/voronoi.hpp"
#include "spectral3/window.hpp"

using namespace spectral3;

namespace {

constexpr double kPi = 3.14159265358979323846;

SmoothWindow gauss_win(double scale, double width, double cut) {
  SmoothWindow w;
  w.shape = WindowShape::Gauss;
  w.scale = scale;
  w.width = width;
  w.cut = cut;
  return w;
}

PhaseSpec quadratic_phase(double lambda, double x0, double lo, double hi) {
  PhaseSpec p;
  p.h = [lambda, x0](double x) { return lambda * (x - x0) * (x - x0); };
  p.dh = [lambda, x0](double x) { return 2.0 * lambda * (x - x0); };
  p.d2h = [lambda](double) { return 2.0 * lambda; };
  p.sup_lo = lo;
  p.sup_hi = hi;
  return p;
}

// least-squares polynomial fit by modified Gram-Schmidt QR; returns the
// monomial coefficients c_0..c_deg of sum c_k t^k
std::vector<double> polyfit(const std::vector<double>& t,
                            const std::vector<double>& y, int deg) {
  int m = static_cast<int>(t.size()), n = deg + 1;
  std::vector<std::vector<double>> q(n, std::vector<double>(m));
  std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) q[j][i] = std::pow(t[i], j);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) {
      double dot = 0.0;
      for (int i = 0; i < m; ++i) dot += q[k][i] * q[j][i];
      r[k][j] = dot;
      for (int i = 0; i < m; ++i) q[j][i] -= dot * q[k][i];
    }
    double nrm = 0.0;
    for (int i = 0; i < m; ++i) nrm += q[j][i] * q[j][i];
    nrm = std::sqrt(nrm);
    r[j][j] = nrm;
    for (int i = 0; i < m; ++i) q[j][i] /= nrm;
  }
  std::vector<double> c(n);
  for (int j = 0; j < n; ++j) {
    double dot = 0.0;
    for (int i = 0; i < m; ++i) dot += q[j][i] * y[i];
    c[j] = dot;
  }
  for (int j = n - 1; j >= 0; --j) {
    for (int k = j + 1; k < n; ++k) c[j] -= r[j][k] * c[k];
    c[j] /= r[j][j];
  }
  return c;
}

double slope_fit(const std::vector<double>& lx, const std::vector<double>& ly) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = static_cast<int>(lx.size());
  for (int i = 0; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("phase derivative oracles are checked against finite differences") {
  PhaseSpec ok;
  ok.h = [](double x) { return std::sin(x); };
  ok.dh = [](double x) { return std::cos(x); };
  ok.d2h = [](double x) { return -std::sin(x); };
  ok.sup_lo = 0.3;
  ok.sup_hi = 2.0;
  CHECK_NOTHROW(ok.check_consistency());

  PhaseSpec bad = ok;
  bad.dh = [](double x) { return 1.01 * std::cos(x); };
  CHECK_THROWS_AS(bad.check_consistency(), std::invalid_argument);

  PhaseSpec bad2 = ok;
  bad2.d2h = [](double x) { return -std::sin(x) + 0.05; };
  CHECK_THROWS_AS(bad2.check_consistency(), std::invalid_argument);
}

TEST_CASE("adaptive quadrature reproduces high-precision references") {
  // reference values computed with 50-digit arithmetic for the truncated
  // log-Gaussian bump with scale 1.5, width 0.12, cut 3
  SmoothWindow amp = gauss_win(1.5, 0.12, 3.0);
  double lo = amp.support_lo(), hi = amp.support_hi();

  SUBCASE("zero phase gives the plain integral") {
    PhaseSpec p;
    p.h = [](double) { return 0.0; };
    p.dh = [](double) { return 0.0; };
    p.d2h = [](double) { return 0.0; };
    p.sup_lo = lo;
    p.sup_hi = hi;
    OscResult r = oscillatory_quad(p, amp);
    CHECK(std::abs(r.value - cplx(0.45313883669516277823)) < 1e-10);
    CHECK(std::abs(r.value.imag()) < 1e-12);
  }

  SUBCASE("linear phase matches the Fourier-transform value") {
    PhaseSpec p;
    p.h = [](double x) { return 40.0 * x; };
    p.dh = [](double) { return 40.0; };
    p.d2h = [](double) { return 0.0; };
    p.sup_lo = lo;
    p.sup_hi = hi;
    OscResult r = oscillatory_quad(p, amp);
    cplx ref(3.4516642879146779562e-05, 1.7486883036332715978e-04);
    CHECK(std::abs(r.value - ref) < 1e-9);
  }

  SUBCASE("Fresnel-type quadratic phase matches the reference") {
    PhaseSpec p;
    p.h = [](double x) { return 0.5 * x * x; };
    p.dh = [](double x) { return x; };
    p.d2h = [](double) { return 1.0; };
    p.sup_lo = lo;
    p.sup_hi = hi;
    OscResult r = oscillatory_quad(p, amp);
    cplx ref(0.16285707075399603212, 0.40366720207764369365);
    CHECK(std::abs(r.value - ref) < 1e-8);
  }

  SUBCASE("an unresolvable oscillation exhausts the panel budget") {
    PhaseSpec p;
    p.h = [](double x) { return 1.0e9 * x; };
    p.dh = [](double) { return 1.0e9; };
    p.d2h = [](double) { return 0.0; };
    p.sup_lo = lo;
    p.sup_hi = hi;
    CHECK_THROWS_AS(oscillatory_quad(p, amp), std::runtime_error);
  }
}

TEST_CASE("integration-by-parts envelope") {
  PhaseSpec p;
  p.sup_lo = 1.0;
  p.sup_hi = 3.0;
  p.X = 2.0;
  p.V = 0.5;
  p.R = 100.0;
  p.Y = 400.0;
  p.Q = 4.0;

  SUBCASE("order zero is twice the trivial bound") {
    CHECK(ibp_envelope(p, 0) == doctest::Approx(2.0 * (3.0 - 1.0) * 2.0));
  }

  SUBCASE("doubling the phase-derivative floor at order two divides by four") {
    PhaseSpec q = p;
    q.R = 2.0 * p.R;
    CHECK(ibp_envelope(p, 2) / ibp_envelope(q, 2) == doctest::Approx(4.0));
  }

  SUBCASE("the envelope dominates the quadrature on a hypothesis grid") {
    // phases h = R (x + x^2 / (2 Qq)) with h' >= R and h'' = R/Qq on x > 0;
    // metadata Q = Qq, Y = R Qq makes |h''| = Y Q^{-2} sharp
    std::vector<SmoothWindow> amps = {gauss_win(1.5, 0.12, 3.0),
                                      gauss_win(2.0, 0.3, 3.0)};
    int checked = 0;
    for (double R : {30.0, 100.0, 300.0, 1000.0, 3000.0}) {
      for (double Qq : {2.0, 5.0, 10.0}) {
        for (const SmoothWindow& amp : amps) {
          PhaseSpec ph;
          ph.h = [R, Qq](double x) { return R * (x + x * x / (2.0 * Qq)); };
          ph.dh = [R, Qq](double x) { return R * (1.0 + x / Qq); };
          ph.d2h = [R, Qq](double) { return R / Qq; };
          ph.sup_lo = amp.support_lo();
          ph.sup_hi = amp.support_hi();
          ph.R = R;
          ph.Q = Qq;
          ph.Y = R * Qq;
          ph.X = 1.0;
          ph.V = std::min(1.0 / amp.derivative_bound(1),
                          std::sqrt(1.0 / amp.derivative_bound(2)));
          OscResult r = oscillatory_quad(ph, amp);
          double env = ibp_envelope(ph, 2);
          CAPTURE(R);
          CAPTURE(Qq);
          CHECK(std::abs(r.value) <= 10.0 * env);
          ++checked;
        }
      }
    }
    CHECK(checked == 30);
  }
}

TEST_CASE("stationary phase leading order against the quadrature") {
  SmoothWindow amp = gauss_win(1.45, 0.5, 3.0);

  SUBCASE("quadratic phase at the envelope peak") {
    double lambda = 1.0e3;
    PhaseSpec p =
        quadratic_phase(lambda, 1.45, amp.support_lo(), amp.support_hi());
    OscResult sp = stationary_phase(p, amp);
    OscResult qd = oscillatory_quad(p, amp);
    CHECK(sp.regime == OscRegime::Stationary);
    CHECK(std::abs(sp.value - qd.value) / std::abs(qd.value) < 1e-3);
  }

  SUBCASE("relative error decays with slope -1 in the large parameter") {
    std::vector<double> ll, le;
    for (double lambda : {1.0e2, 1.0e3, 1.0e4}) {
      PhaseSpec p =
          quadratic_phase(lambda, 1.45, amp.support_lo(), amp.support_hi());
      OscResult sp = stationary_phase(p, amp);
      OscResult qd = oscillatory_quad(p, amp);
      double rel = std::abs(sp.value - qd.value) / std::abs(qd.value);
      ll.push_back(std::log(lambda));
      le.push_back(std::log(rel));
    }
    double slope = slope_fit(ll, le);
    CHECK(slope == doctest::Approx(-1.0).epsilon(0.2));
  }

  SUBCASE("amplitude nearly vanishing at the stationary point") {
    double lambda = 1.0e3;
    PhaseSpec p =
        quadratic_phase(lambda, 0.42, amp.support_lo(), amp.support_hi());
    OscResult sp = stationary_phase(p, amp);
    OscResult qd = oscillatory_quad(p, amp);
    double generic = std::sqrt(2.0 * kPi / (2.0 * lambda));  // unit amplitude
    CHECK(std::abs(sp.value) < 0.05 * generic);
    CHECK(std::abs(qd.value) < 0.05 * generic);
  }

  SUBCASE("no stationary point directs the caller to the envelope bound") {
    PhaseSpec p =
        quadratic_phase(1.0e3, 20.0, amp.support_lo(), amp.support_hi());
    CHECK_THROWS_WITH_AS(stationary_phase(p, amp),
                         doctest::Contains("ibp_envelope"), std::domain_error);
  }

  SUBCASE("a second derivative changing sign is rejected") {
    PhaseSpec p;
    p.h = [](double x) { return 50.0 * std::cos(x); };
    p.dh = [](double x) { return -50.0 * std::sin(x); };
    p.d2h = [](double x) { return -50.0 * std::cos(x); };
    p.sup_lo = amp.support_lo();
    p.sup_hi = amp.support_hi();
    CHECK_THROWS_AS(stationary_phase(p, amp), std::domain_error);
  }

  SUBCASE("the error estimate dominates the observed deviation") {
    int total = 0, dominated = 0;
    for (double lambda : {1.0e2, 3.0e2, 1.0e3, 3.0e3, 1.0e4}) {
      for (double x0 : {1.0, 1.2, 1.45, 1.8}) {
        PhaseSpec p =
            quadratic_phase(lambda, x0, amp.support_lo(), amp.support_hi());
        OscResult sp = stationary_phase(p, amp);
        OscResult qd = oscillatory_quad(p, amp);
        ++total;
        if (sp.error_estimate >= std::abs(sp.value - qd.value)) ++dominated;
      }
    }
    CHECK(total == 20);
    CHECK(dominated >= 19);  // >= 95 percent of the grid
  }
}

TEST_CASE("quartic stationary point: Newton solve and power series") {
  SUBCASE("gamma = 0 degenerates to the exact cube root") {
    for (double alpha : {0.1, 0.5, 1.0, 2.0, 10.0}) {
      StationaryPoint s = xi0_solve(alpha, 0.0);
      CHECK(s.xi0 == doctest::Approx(std::cbrt(alpha)).epsilon(1e-13));
      CHECK(s.residual < 1e-13);
    }
  }

  SUBCASE("residual below 1e-13 across the admissible box") {
    for (double alpha : {0.1, 0.3, 1.0, 3.0, 10.0})
      for (double gamma : {-0.3, -0.1, 0.0, 0.15, 0.3}) {
        StationaryPoint s = xi0_solve(alpha, gamma);
        CHECK(s.residual < 1e-13);
        CHECK(s.iterations <= 50);
        // the returned point satisfies the quartic
        double lhs = std::pow(s.xi0 * s.xi0 - gamma * gamma, 2.0);
        CHECK(lhs == doctest::Approx(alpha * s.xi0).epsilon(1e-12));
      }
  }

  SUBCASE("preconditions are enforced") {
    CHECK_THROWS_AS(xi0_solve(0.05, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(xi0_solve(20.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(xi0_solve(1.0, 0.4), std::invalid_argument);
  }

  SUBCASE("series coefficients match the printed table") {
    std::vector<double> c = xi0_series_coeffs(5);
    REQUIRE(c.size() == 6);
    CHECK(c[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(c[2] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK(c[3] == doctest::Approx(28.0 / 81.0).epsilon(1e-12));
    CHECK(c[4] == doctest::Approx(-110.0 / 243.0).epsilon(1e-12));
    CHECK(c[5] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  }

  SUBCASE("gamma = 0 ratio series is identically one") {
    CHECK(xi0_series(2.0, 0.0, 4) == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("the stationary point is homogeneous of degree one") {
    // (xi^2-gamma^2)^2 = alpha xi is invariant under (alpha, gamma, xi) ->
    // (l^3 alpha, l gamma, l xi)
    StationaryPoint s1 = xi0_solve(1.0, 0.15);
    StationaryPoint s2 = xi0_solve(8.0, 0.30);
    CHECK(s2.xi0 == doctest::Approx(2.0 * s1.xi0).epsilon(1e-12));
  }

  SUBCASE("truncation error scales like gamma^(2J+2)") {
    for (int J : {1, 2}) {
      std::vector<double> lg, le;
      for (double gamma : {0.05, 0.1, 0.2}) {
        double newton = xi0_solve(1.0, gamma).xi0;
        double series = xi0_series(1.0, gamma, J);
        lg.push_back(std::log(gamma));
        le.push_back(std::log(std::abs(series - newton)));
      }
      double slope = slope_fit(lg, le);
      CHECK(slope == doctest::Approx(2.0 * J + 2.0).epsilon(0.3 / (2.0 * J + 2.0)));
    }
  }

  SUBCASE("regression on Newton solutions recovers the printed coefficients") {
    // fit ratio(g) = sum_k s_k g^k in g = gamma^2 (alpha = 1) and compare
    // the fitted s_1, s_2 with 2/3 and -1/3
    std::vector<double> g, y;
    for (int i = 0; i < 40; ++i) {
      double gamma = 0.01 + 0.09 * i / 39.0;
      g.push_back(gamma * gamma / 0.01);  // normalized to [0.01, 1]
      y.push_back(xi0_solve(1.0, gamma).xi0);
    }
    std::vector<double> c = polyfit(g, y, 4);
    CHECK(std::abs(c[1] / 0.01 - 2.0 / 3.0) < 1e-6);
    CHECK(std::abs(c[2] / (0.01 * 0.01) - (-1.0 / 3.0)) < 1e-6);
  }
}

TEST_CASE("phase constants and the truncated stationary-phase series") {
  SUBCASE("the constant table matches the printed values") {
    std::vector<std::array<double, 2>> c = phase_constants(3);
    REQUIRE(c.size() == 4);
    CHECK(c[0][0] == doctest::Approx(0.0));
    CHECK(c[0][1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(c[1][0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(c[1][1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c[2][0] == doctest::Approx(-4.0 / 3.0).epsilon(1e-12));
    CHECK(c[2][1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(c[3][0] == doctest::Approx(56.0 / 45.0).epsilon(1e-12));
    CHECK(c[3][1] == doctest::Approx(28.0 / 27.0).epsilon(1e-12));
  }

  // parameter vector with N U / (Y T) = 10 and alpha near 1 at n ~ 9.74e3
  OscSetup base;
  base.N = 100.0;
  base.U = 1.0;
  base.T = 10.0;
  base.t_phi = 0.0;

  SUBCASE("gamma = 0 collapses to the leading alpha^(1/3) term") {
    double n = 9740.0, r = 1.0, v = 1.0;
    double alpha = base.alpha_of(base.x_of(n, r), base.y_of(r), v);
    double nu_over_yt = base.N * base.U / (base.y_of(r) * base.T);
    double fj = phase_series_fJ(n, r, v, base, 4);
    CHECK(fj ==
          doctest::Approx(nu_over_yt * 3.0 * std::cbrt(alpha)).epsilon(1e-12));
    // the exact stationary value has the opposite sign (leading term
    // -3 alpha^(1/3) of the h1 expansion)
    CHECK(phase_exact_h1(alpha, 0.0, nu_over_yt) ==
          doctest::Approx(-fj).epsilon(1e-12));
  }

  SUBCASE("series minus exact stationary value decays like gamma^(2J+2)") {
    // the mixed alpha-power grouping of the constant table is exact at
    // alpha = 1 (by degree-one homogeneity of the stationary point the true
    // expansion carries pure alpha^{-(2j-1)/3} powers, and the two groupings
    // coincide only there), so pin alpha = 1 by the choice of v
    double n = 9740.0, r = 1.0;
    double v = base.alpha_of(base.x_of(n, r), base.y_of(r), 1.0);
    for (int J : {1, 2}) {
      std::vector<double> lg, le;
      for (double gamma : {0.05, 0.1, 0.2}) {
        OscSetup p = base;
        p.t_phi = gamma * 2.0 * kPi * p.N * p.U / (p.y_of(r) * p.T);
        double alpha = p.alpha_of(p.x_of(n, r), p.y_of(r), v);
        REQUIRE(alpha == doctest::Approx(1.0).epsilon(1e-12));
        double nu_over_yt = p.N * p.U / (p.y_of(r) * p.T);
        double fj = phase_series_fJ(n, r, v, p, J);
        double h1 = phase_exact_h1(alpha, gamma, nu_over_yt);
        lg.push_back(std::log(gamma));
        le.push_back(std::log(std::abs(fj + h1)));
      }
      double slope = slope_fit(lg, le);
      CHECK(slope == doctest::Approx(2.0 * J + 2.0).epsilon(0.3 / (2.0 * J + 2.0)));
    }
  }
}

TEST_CASE("dual-kernel transform asymptotics against the contour evaluation") {
  const double t_phi = 9.5336952613536;
  OscSetup p;
  p.N = 1.0e4;
  p.U = 1.0;
  p.T = 1.0e3;
  p.t_phi = t_phi;
  SmoothWindow shape = gauss_win(p.N, 0.35, 4.0);
  const double u = 0.9, Y = 1.0;
  const double xr = std::pow(u, 4.0) * p.N * p.N * p.N / std::pow(Y * p.T, 4.0);

  auto contour = [&](const OscSetup& q, double X, CoeffKind kind) {
    SmoothWindow win = gauss_win(q.N, 0.35, 4.0);
    win.oscillating = true;
    win.osc_u = u;
    win.osc_Y = Y;
    win.osc_T = q.T;
    return w_transform(kind, +1, X, win, q.t_phi, 0.5);
  };

  SUBCASE("on resonance the stationary value is accurate and certified") {
    double worst = 0.0;
    for (double fac : {0.5, 1.0, 2.0}) {
      WPlusReport rep = w_plus_asymptotic(fac * xr, u, Y, p, shape);
      cplx exact = contour(p, fac * xr, CoeffKind::Phi);
      double rel = std::abs(rep.value - exact) / std::abs(exact);
      CAPTURE(fac);
      CHECK(rep.regime == OscRegime::Stationary);
      CHECK(!rep.flagged);
      CHECK(rel <= 0.15);
      CHECK(rep.error_estimate >= std::abs(rep.value - exact));
      worst = std::max(worst, rel);
    }
    // accuracy improves as the dyadic block grows
    OscSetup big = p;
    big.N = 4.0e4;
    SmoothWindow big_shape = gauss_win(big.N, 0.35, 4.0);
    double big_xr =
        std::pow(u, 4.0) * big.N * big.N * big.N / std::pow(Y * big.T, 4.0);
    WPlusReport rep = w_plus_asymptotic(big_xr, u, Y, big, big_shape);
    cplx exact = contour(big, big_xr, CoeffKind::Phi);
    double rel = std::abs(rep.value - exact) / std::abs(exact);
    CHECK(rel < worst);
    CHECK(rel < 0.05);
  }

  SUBCASE("far below resonance the kernel is certified negligible") {
    OscSetup big = p;
    big.N = 4.0e4;
    SmoothWindow big_shape = gauss_win(big.N, 0.35, 4.0);
    double big_xr =
        std::pow(u, 4.0) * big.N * big.N * big.N / std::pow(Y * big.T, 4.0);
    double X = 1.0e-8 * big_xr;
    WPlusReport rep = w_plus_asymptotic(X, u, Y, big, big_shape);
    CHECK(rep.regime == OscRegime::NonStationary);
    CHECK(rep.value == cplx(0.0));
    cplx exact = contour(big, X, CoeffKind::Phi);
    CHECK(std::abs(exact) < 1e-6 * std::sqrt(big.N * X));
  }

  SUBCASE("near the band edge the report is flagged with both values") {
    WPlusReport rep = w_plus_asymptotic(6.0 * xr, u, Y, p, shape);
    CHECK(rep.flagged);
    CHECK(rep.regime == OscRegime::Ambiguous);
    CHECK(std::abs(rep.exact) > 0.0);
    CHECK(std::abs(rep.value - rep.exact) <
          0.5 * std::max(std::abs(rep.value), std::abs(rep.exact)));
  }

  SUBCASE("t_phi = 0 degenerates to the four-fold zero-shift kernel") {
    OscSetup zero = p;
    zero.t_phi = 0.0;
    WPlusReport rep = w_plus_asymptotic(xr, u, Y, zero, shape);
    cplx exact = contour(zero, xr, CoeffKind::E4);
    double rel = std::abs(rep.value - exact) / std::abs(exact);
    CHECK(rel <= 0.15);
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(w_plus_asymptotic(-1.0, u, Y, p, shape),
                    std::invalid_argument);
    CHECK_THROWS_AS(w_plus_asymptotic(xr, 0.0, Y, p, shape),
                    std::invalid_argument);
  }
}

TEST_CASE("averaged product kernel of two dual-kernel transforms") {
  const double t_phi = 9.5336952613536;
  SmoothWindow g1 = gauss_win(1.0, 0.25, 3.5);

  SUBCASE("diagonal is positive real, symmetry holds") {
    OscSetup p;
    p.N = 1.0e4;
    p.U = 1.0;
    p.T = 1.0e3;
    p.t_phi = t_phi;
    SmoothWindow shape = gauss_win(p.N, 0.35, 4.0);
    double xr = p.N * p.N * p.N / std::pow(p.T, 4.0);
    double n1 = 0.9 * xr, n2 = 0.95 * xr;
    FrakJResult diag = frakJ(n1, n1, 1.0, p, g1, shape, 3, false, 33);
    CHECK(diag.value.real() > 0.0);
    CHECK(std::abs(diag.value.imag()) <= 1e-12 * diag.value.real());
    CHECK(diag.in_window);
    FrakJResult a = frakJ(n1, n2, 1.0, p, g1, shape, 3, false, 33);
    FrakJResult b = frakJ(n2, n1, 1.0, p, g1, shape, 3, false, 33);
    CHECK(std::abs(a.value - std::conj(b.value)) <=
          1e-10 * std::abs(a.value));
    CHECK(std::abs(a.value) <= diag.value.real() * 1.05);
  }

  SUBCASE("series phase agrees with the direct contour product") {
    OscSetup p;
    p.N = 1.0e4;
    p.U = 1.0;
    p.T = 2.0e3;
    p.t_phi = t_phi;
    SmoothWindow shape = gauss_win(p.N, 0.35, 4.0);
    double xr = p.N * p.N * p.N / std::pow(p.T, 4.0);
    double n1 = 0.5 * xr;
    FrakJResult diag = frakJ(n1, n1, 1.0, p, g1, shape, 3, true, 49);
    double dev = std::abs(diag.value - diag.exact);
    CHECK(dev <= 0.1 * std::abs(diag.exact));
    CHECK(diag.error_estimate >= dev);

    // far separation: the product integral collapses below 1e-4 of the
    // diagonal
    FrakJResult far = frakJ(n1, 10.0 * xr, 1.0, p, g1, shape, 3, true, 49);
    CHECK(!far.in_window);
    CHECK(far.regime == OscRegime::NonStationary);
    CHECK(std::abs(far.exact) < 1e-4 * std::abs(diag.exact));
  }

  SUBCASE("argument validation") {
    OscSetup p;
    SmoothWindow shape = gauss_win(p.N, 0.35, 4.0);
    CHECK_THROWS_AS(frakJ(1.0, 1.0, 1.0, p, g1, shape, 3, false, 5),
                    std::invalid_argument);
  }
}
