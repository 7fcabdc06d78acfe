#include "spectral3/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectral3 {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// B_2, B_4, ..., B_20
constexpr double kBernoulli2k[] = {
    1.0 / 6.0,   -1.0 / 30.0, 1.0 / 42.0,  -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0};

// Asymptotic series for log Gamma, valid for |z| large, Re z > 0.
cplx log_gamma_asymptotic(cplx z) {
  cplx lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
  cplx zinv2 = 1.0 / (z * z);
  cplx zpow = 1.0 / z;
  for (int k = 1; k <= 10; ++k) {
    lg += kBernoulli2k[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * zpow;
    zpow *= zinv2;
  }
  return lg;
}

cplx log_gamma_right(cplx z) {
  // Re z >= 1/2: recur up until |z| >= 12.
  cplx shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  return log_gamma_asymptotic(z) + shift;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw std::domain_error("log_gamma: pole at non-positive integer " +
                            std::to_string(static_cast<long long>(z.real())));
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
  // Overflow-safe log sin(pi z) for large |Im z|.
  cplx w = kPi * z;
  const cplx I(0.0, 1.0);
  cplx logsin;
  if (z.imag() >= 0.0) {
    // sin w = e^{-iw}/(-2i) (1 - e^{2iw}), |e^{2iw}| = e^{-2 Im w} <= 1
    logsin = -I * w - std::log(-2.0 * I) + std::log(1.0 - std::exp(2.0 * I * w));
  } else {
    // sin w = e^{iw}/(2i) (1 - e^{-2iw}), |e^{-2iw}| = e^{2 Im w} < 1
    logsin = I * w - std::log(2.0 * I) + std::log(1.0 - std::exp(-2.0 * I * w));
  }
  return std::log(cplx(kPi)) - logsin - log_gamma_right(1.0 - z);
}

cplx gamma_c(cplx z) { return std::exp(log_gamma(z)); }

namespace {

// Euler-Maclaurin for zeta_H(s, x): valid for Re s > -(2K - 1) away from s = 1.
cplx hurwitz_em(cplx s, double x) {
  int N = std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(s.imag()))));
  cplx sum = 0.0;
  for (int n = 0; n < N; ++n) sum += std::pow(cplx(n + x), -s);
  double M = N + x;
  cplx Mms = std::pow(cplx(M), -s);
  sum += Mms * M / (s - 1.0);
  sum += 0.5 * Mms;
  // correction terms B_{2k}/(2k)! * s(s+1)...(s+2k-2) * M^{-s-2k+1}
  cplx poch = s;          // rising product up to s + 2k - 2
  double fact = 2.0;      // (2k)!
  cplx Mpow = Mms / M;    // M^{-s-2k+1} at k = 1
  for (int k = 1; k <= 6; ++k) {
    sum += kBernoulli2k[k - 1] / fact * poch * Mpow;
    if (k < 6) {
      poch *= (s + cplx(2.0 * k - 1.0)) * (s + cplx(2.0 * k));
      fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
      Mpow /= M * M;
    }
  }
  return sum;
}

}  // namespace

cplx hurwitz_zeta_x(cplx s, double x) {
  if (x <= 0.0) throw std::domain_error("hurwitz_zeta_x: x must be > 0");
  if (std::abs(s - cplx(1.0)) < 1e-12)
    throw std::domain_error("hurwitz_zeta_x: pole at s = 1");
  return hurwitz_em(s, x);
}

cplx zeta(cplx s) {
  if (std::abs(s - cplx(1.0)) < 1e-12) throw std::domain_error("zeta: pole at s = 1");
  if (s.real() < 0.0) {
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    cplx s1 = 1.0 - s;
    return std::pow(cplx(2.0), s) * std::pow(cplx(kPi), s - 1.0) *
           std::sin(kPi * s / 2.0) * gamma_c(s1) * zeta(s1);
  }
  return hurwitz_em(s, 1.0);
}

cplx xi(cplx s) {
  if (std::abs(s) < 1e-12 || std::abs(s - cplx(1.0)) < 1e-12)
    throw std::domain_error("xi: pole at s = 0 or 1");
  return std::pow(cplx(kPi), -s / 2.0) * gamma_c(s / 2.0) * zeta(s);
}

cplx hurwitz_zeta(cplx s, int64 a, int64 c) {
  if (a < 1 || a > c) throw std::domain_error("hurwitz_zeta: need 1 <= a <= c");
  return std::pow(cplx(static_cast<double>(c)), -s) *
         hurwitz_zeta_x(s, static_cast<double>(a) / static_cast<double>(c));
}

namespace {

// cosh-integral evaluation, trapezoid in u (double-exponential decay of the
// integrand makes the trapezoid spectrally accurate).
cplx k_bessel_integral(cplx nu, double y) {
  double t = std::abs(nu.imag());
  double h = 2.0 * kPi / (60.0 + 2.0 * t + 8.0 * std::abs(nu.real()));
  cplx sum = 0.5 * std::exp(cplx(-y));  // u = 0 term, cosh(0) = 1
  double peak = std::abs(sum);
  for (int k = 1; k < 200000; ++k) {
    double u = k * h;
    double c = std::cosh(u);
    double env_exp = -y * c + std::abs(nu.real()) * u;  // log of envelope
    if (env_exp < -760.0) break;
    // exp(-y cosh u) cosh(nu u) = (e^{-y cosh u + nu u} + e^{-y cosh u - nu u})/2
    cplx term = 0.5 * (std::exp(-y * c + nu * u) + std::exp(-y * c - nu * u));
    sum += term;
    peak = std::max(peak, std::abs(term));
    if (std::exp(env_exp) < 1e-19 * peak && u > 4.0) break;
  }
  return h * sum;
}

// Power-series evaluation through I_{+-nu}; preserves relative accuracy for
// strongly oscillatory order at small argument.
cplx bessel_i_series(cplx nu, double y) {
  // I_nu(y) = sum_k (y/2)^{2k+nu} / (k! Gamma(k+1+nu))
  cplx half_pow = std::exp(nu * std::log(y / 2.0));
  cplx gam = gamma_c(1.0 + nu);
  cplx term = half_pow / gam;
  cplx sum = term;
  double y24 = y * y / 4.0;
  for (int k = 1; k < 500; ++k) {
    term *= y24 / (static_cast<double>(k) * (nu + static_cast<double>(k)));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

cplx k_bessel_series(cplx nu, double y) {
  // K_nu = pi/2 (I_{-nu} - I_nu) / sin(pi nu); requires nu not an integer.
  cplx s = std::sin(kPi * nu);
  return kPi / 2.0 * (bessel_i_series(-nu, y) - bessel_i_series(nu, y)) / s;
}

}  // namespace

cplx k_bessel_nu(cplx nu, double y) {
  if (y <= 0.0) throw std::domain_error("k_bessel_nu: y must be > 0");
  if (std::abs(nu.imag()) > 5.0 && y < 12.0) return k_bessel_series(nu, y);
  return k_bessel_integral(nu, y);
}

double k_bessel_it(double t, double y) {
  return k_bessel_nu(cplx(0.0, t), y).real();
}

StirlingResult stirling_ratio(double sigma_num, double sigma_den, double t, int J) {
  if (std::abs(t) < 10.0)
    throw std::domain_error("stirling_ratio: requires |t| >= 10");
  if (J < 1) throw std::domain_error("stirling_ratio: J >= 1");
  // Truncate the Bernoulli series so the first omitted term is O(|t|^{-J}):
  // term k has size ~ |z|^{1-2k}, so keep k <= K with 2K + 1 > J.
  int K = std::min(10, (J + 1) / 2);
  auto lg_trunc = [&](cplx z) {
    cplx lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    cplx zpow = 1.0 / z;
    cplx zinv2 = 1.0 / (z * z);
    for (int k = 1; k <= K; ++k) {
      lg += kBernoulli2k[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * zpow;
      zpow *= zinv2;
    }
    return lg;
  };
  cplx zn(sigma_num, t), zd(sigma_den, t);
  cplx val = std::exp(lg_trunc(zn) - lg_trunc(zd));
  // first omitted terms of both series
  double omit = std::abs(kBernoulli2k[std::min(K, 9)] /
                         (2.0 * (K + 1) * (2.0 * K + 1.0))) *
                (std::pow(std::abs(zn), -2.0 * K - 1.0) +
                 std::pow(std::abs(zd), -2.0 * K - 1.0));
  return {val, omit * std::abs(val) * 2.0};
}

}  // namespace spectral3
