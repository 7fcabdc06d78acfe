#include "spectral3/coeffs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace spectral3 {

void MaassFormData::validate() const {
  if (l_sym2_at_1 <= 0.0)
    throw std::invalid_argument("MaassFormData: l_sym2_at_1 must be positive");
  int64 last = 0;
  for (const auto& s : satake) {
    if (s.p <= last)
      throw std::invalid_argument("MaassFormData: primes must be strictly increasing");
    last = s.p;
    if (std::abs(s.alpha * s.beta - cplx(1.0)) > 1e-12)
      throw std::invalid_argument("MaassFormData: alpha*beta != 1 at p=" +
                                  std::to_string(s.p));
    if (std::abs((s.alpha + s.beta).imag()) > 1e-12)
      throw std::invalid_argument("MaassFormData: alpha+beta not real at p=" +
                                  std::to_string(s.p));
  }
}

const SatakeLocal& MaassFormData::local(int64 p) const {
  auto it = std::lower_bound(
      satake.begin(), satake.end(), p,
      [](const SatakeLocal& s, int64 q) { return s.p < q; });
  if (it == satake.end() || it->p != p)
    throw std::out_of_range("no Satake data at prime " + std::to_string(p));
  return *it;
}

double lambda_gl2(const MaassFormData& form, int64 n) {
  if (n < 1) throw std::invalid_argument("lambda_gl2: n must be >= 1");
  double result = 1.0;
  for (auto [p, a] : factorize(n)) {
    const auto& loc = form.local(p);
    double lam = (loc.alpha + loc.beta).real();
    // lambda(p^{k+1}) = lambda(p) lambda(p^k) - lambda(p^{k-1})
    double prev = 1.0, cur = lam;
    for (int k = 1; k < a; ++k) {
      double next = lam * cur - prev;
      prev = cur;
      cur = next;
    }
    result *= (a == 0) ? 1.0 : cur;
  }
  return result;
}

namespace {

cplx det4(cplx m[4][4]) {
  // Gaussian elimination with partial pivoting.
  cplx det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) == 0.0) return 0.0;
    if (piv != col) {
      for (int c = 0; c < 4; ++c) std::swap(m[piv][c], m[col][c]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < 4; ++r) {
      cplx f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

cplx gl4_local_coeff(const std::array<cplx, 4>& x, int64 k1, int64 k2, int64 k3) {
  if (k1 < 0 || k2 < 0 || k3 < 0)
    throw std::invalid_argument("gl4_local_coeff: negative exponent");
  // Partition (k1+k2+k3, k2+k3, k3, 0); Jacobi-Trudi on complete homogeneous
  // polynomials h_m of the four Satake values.
  int64 lam[4] = {k1 + k2 + k3, k2 + k3, k3, 0};
  int64 top = lam[0] + 3;
  cplx e1 = x[0] + x[1] + x[2] + x[3];
  cplx e2 = x[0] * x[1] + x[0] * x[2] + x[0] * x[3] + x[1] * x[2] +
            x[1] * x[3] + x[2] * x[3];
  cplx e3 = x[0] * x[1] * x[2] + x[0] * x[1] * x[3] + x[0] * x[2] * x[3] +
            x[1] * x[2] * x[3];
  cplx e4 = x[0] * x[1] * x[2] * x[3];
  std::vector<cplx> h(top + 1, 0.0);
  h[0] = 1.0;
  for (int64 m = 1; m <= top; ++m) {
    cplx v = e1 * h[m - 1];
    if (m >= 2) v -= e2 * h[m - 2];
    if (m >= 3) v += e3 * h[m - 3];
    if (m >= 4) v -= e4 * h[m - 4];
    h[m] = v;
  }
  auto hh = [&](int64 m) -> cplx { return (m < 0) ? cplx(0.0) : h[m]; };
  cplx mat[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mat[i][j] = hh(lam[i] + j - i);
  return det4(mat);
}

double lambda_sym3(const MaassFormData& form, int64 m1, int64 m2, int64 m3) {
  if (m1 < 1 || m2 < 1 || m3 < 1)
    throw std::invalid_argument("lambda_sym3: indices must be >= 1");
  // gather per-prime exponent triples
  std::vector<std::pair<int64, std::array<int64, 3>>> locals;
  auto absorb = [&](int64 m, int slot) {
    for (auto [p, a] : factorize(m)) {
      auto it = std::find_if(locals.begin(), locals.end(),
                             [&](const auto& q) { return q.first == p; });
      if (it == locals.end()) {
        locals.push_back({p, {0, 0, 0}});
        it = locals.end() - 1;
      }
      it->second[slot] += a;
    }
  };
  absorb(m1, 0);
  absorb(m2, 1);
  absorb(m3, 2);
  cplx result = 1.0;
  for (const auto& [p, k] : locals) {
    const auto& loc = form.local(p);
    cplx a = loc.alpha, b = loc.beta;
    std::array<cplx, 4> sat = {a * a * a, a, b, b * b * b};
    result *= gl4_local_coeff(sat, k[0], k[1], k[2]);
  }
  return result.real();
}

int64 tau2(int64 m1, int64 m2) {
  int64 sum = 0;
  for (int64 k1 : divisors(m1))
    for (int64 k2 : divisors(m2)) sum += divisor_fn(2, k1 * k2);
  return sum;
}

int64 tau3(int64 m1, int64 m2, int64 m3) {
  if (m1 < 1 || m2 < 1 || m3 < 1)
    throw std::invalid_argument("tau3: arguments must be >= 1");
  int64 sum = 0;
  for (int64 n1 : divisors(m1))
    for (int64 n2 : divisors(m2))
      for (int64 n3 : divisors(m3)) {
        if ((m2 * n3) % n2 || (m1 * n2) % n1) continue;
        sum += tau2(m2 * n3 / n2, m1 * n2 / n1);
      }
  return sum;
}

int64 tau3_fast(int64 m1, int64 m2, int64 m3) {
  if (m1 < 1 || m2 < 1 || m3 < 1)
    throw std::invalid_argument("tau3_fast: arguments must be >= 1");
  // multiplicative evaluation: the defining double divisor sum restricted to
  // a prime power, with tau2(p^i, p^j) = (i+1)(j+1)(i+j+2)/2 in closed form
  std::map<int64, std::array<int, 3>> locals;
  for (const auto& [p, a] : factorize(m1)) locals[p][0] = a;
  for (const auto& [p, a] : factorize(m2)) locals[p][1] = a;
  for (const auto& [p, a] : factorize(m3)) locals[p][2] = a;
  int64 result = 1;
  for (const auto& [p, e] : locals) {
    int a = e[0], b = e[1], c = e[2];
    int64 loc = 0;
    for (int x = 0; x <= a; ++x)
      for (int y = 0; y <= b; ++y)
        for (int z = 0; z <= c; ++z) {
          int i = b + z - y, j = a + y - x;
          if (i < 0) continue;
          loc += static_cast<int64>(i + 1) * (j + 1) * (i + j + 2) / 2;
        }
    result *= loc;
  }
  return result;
}

int64 tau4(int64 m1, int64 m2, int64 m3, int64 m4) {
  if (m1 < 1 || m2 < 1 || m3 < 1 || m4 < 1)
    throw std::invalid_argument("tau4: arguments must be >= 1");
  int64 sum = 0;
  for (int64 d1 : divisors(m1))
    for (int64 d2 : divisors(m2))
      for (int64 d3 : divisors(m3))
        for (int64 d4 : divisors(m4)) {
          if ((d1 * m2) % d2 || (d2 * m3) % d3 || (d3 * m4) % d4) continue;
          sum += tau3(d1 * m2 / d2, d2 * m3 / d3, d3 * m4 / d4);
        }
  return sum;
}

double a_phi(const MaassFormData& form, int64 n, int64 m) {
  if (n < 1 || m < 1) throw std::invalid_argument("a_phi: indices must be >= 1");
  double sum = 0.0;
  for (int64 d : divisors(m)) {
    double tl = static_cast<double>(divisor_fn(2, m / d));
    double inner = 0.0;
    for (int64 n1 : divisors(n))
      inner += lambda_gl2(form, d * n1) * lambda_gl2(form, d * (n / n1));
    sum += tl * inner;
  }
  return sum;
}

int64 tau_e4(int64 n, int64 m) {
  if (n < 1 || m < 1) throw std::invalid_argument("tau_e4: indices must be >= 1");
  int64 sum = 0;
  for (int64 d : divisors(m)) {
    int64 tl = divisor_fn(2, m / d);
    int64 inner = 0;
    for (int64 n1 : divisors(n))
      inner += divisor_fn(2, d * n1) * divisor_fn(2, d * (n / n1));
    sum += tl * inner;
  }
  return sum;
}

namespace {

double a_f_base1(CoeffKind kind, const MaassFormData* form, int64 x) {
  if (kind == CoeffKind::E4) return static_cast<double>(divisor_fn(4, x));
  return a_phi(*form, x, 1);
}

double a_f_base2(CoeffKind kind, const MaassFormData* form, int64 x, int64 y) {
  if (kind == CoeffKind::E4) return static_cast<double>(tau_e4(x, y));
  return a_phi(*form, x, y);
}

}  // namespace

double a_f_general(CoeffKind kind, const MaassFormData* form, int64 n, int64 ell,
                   int64 k) {
  if (n < 1 || ell < 1 || k < 1)
    throw std::invalid_argument("a_f_general: indices must be >= 1");
  if (kind == CoeffKind::Phi && form == nullptr)
    throw std::invalid_argument("a_f_general: Phi requires form data");
  if (k == 1) return a_f_base2(kind, form, n, ell);
  double sum = 0.0;
  for (int64 d : divisors(std::gcd(k, ell))) {
    for (int64 e : divisors(std::gcd(d, k / d))) {
      for (int64 f : divisors(std::gcd(k, n))) {
        if (k % (d * f * e)) continue;
        if ((d * n) % (e * f)) continue;
        int mu_df = mobius(d * f);
        if (mu_df == 0) continue;
        int mu_e = mobius(e);
        if (mu_e == 0) continue;
        sum += mu_df * mu_e * a_f_base1(kind, form, k / (d * f * e)) *
               a_f_base2(kind, form, d * n / (e * f), ell / d);
      }
    }
  }
  return sum;
}

namespace {

// Dirichlet convolution of sequences indexed 1..n_max.
std::vector<double> dconv(const std::vector<double>& a,
                          const std::vector<double>& b) {
  int64 n_max = static_cast<int64>(a.size()) - 1;
  std::vector<double> c(n_max + 1, 0.0);
  for (int64 i = 1; i <= n_max; ++i) {
    if (a[i] == 0.0) continue;
    for (int64 j = 1; i * j <= n_max; ++j) c[i * j] += a[i] * b[j];
  }
  return c;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 1; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

VerificationReport verify_identity(IdentityName which, const MaassFormData& form,
                                   int64 n_max) {
  if (n_max < 1 || n_max > 10000)
    throw std::invalid_argument("verify_identity: need 1 <= n_max <= 10000");
  VerificationReport rep;
  rep.n_max = n_max;

  auto sym3_seq = [&]() {
    std::vector<double> f(n_max + 1, 0.0);
    for (int64 m = 1; m <= n_max; ++m) f[m] = lambda_sym3(form, m, 1, 1);
    return f;
  };
  auto gl2_seq = [&]() {
    std::vector<double> f(n_max + 1, 0.0);
    for (int64 m = 1; m <= n_max; ++m) f[m] = lambda_gl2(form, m);
    return f;
  };

  std::vector<double> lhs, rhs(n_max + 1, 0.0);
  switch (which) {
    case IdentityName::CompareDirichlet: {
      rep.identity = "compare_dirichlet";
      auto f = sym3_seq();
      lhs = dconv(dconv(f, f), dconv(f, f));
      for (int64 d = 1; d * d * d * d <= n_max; ++d)
        for (int64 m1 = 1; d * d * d * d * m1 * m1 * m1 <= n_max; ++m1)
          for (int64 m2 = 1;
               d * d * d * d * m1 * m1 * m1 * m2 * m2 <= n_max; ++m2) {
            int64 base = d * d * d * d * m1 * m1 * m1 * m2 * m2;
            for (int64 m3 = 1; base * m3 <= n_max; ++m3)
              rhs[base * m3] += lambda_sym3(form, m1, m2, m3) *
                                static_cast<double>(tau3(m1, m2, m3));
          }
      break;
    }
    case IdentityName::Hecke34: {
      rep.identity = "hecke34";
      auto f = sym3_seq();
      lhs = dconv(dconv(f, f), f);
      for (int64 m3 = 1; m3 * m3 * m3 <= n_max; ++m3)
        for (int64 m2 = 1; m3 * m3 * m3 * m2 * m2 <= n_max; ++m2) {
          int64 base = m3 * m3 * m3 * m2 * m2;
          for (int64 m1 = 1; base * m1 <= n_max; ++m1)
            rhs[base * m1] += lambda_sym3(form, m1, m2, m3) *
                              static_cast<double>(tau2(m1, m2));
        }
      break;
    }
    case IdentityName::CompareDirichlet2: {
      rep.identity = "compare_dirichlet2";
      auto f = sym3_seq();
      lhs = dconv(dconv(dconv(f, f), dconv(f, f)), f);
      for (int64 m1 = 1; m1 * m1 * m1 * m1 <= n_max; ++m1)
        for (int64 m2 = 1; m1 * m1 * m1 * m1 * m2 * m2 * m2 <= n_max; ++m2)
          for (int64 m3 = 1;
               m1 * m1 * m1 * m1 * m2 * m2 * m2 * m3 * m3 <= n_max; ++m3) {
            int64 base = m1 * m1 * m1 * m1 * m2 * m2 * m2 * m3 * m3;
            for (int64 m4 = 1; base * m4 <= n_max; ++m4)
              rhs[base * m4] += lambda_sym3(form, m2, m3, m4) *
                                static_cast<double>(tau4(m1, m2, m3, m4));
          }
      break;
    }
    case IdentityName::LFourSquare: {
      rep.identity = "lfour_square";
      auto g = gl2_seq();
      lhs = dconv(dconv(g, g), dconv(g, g));
      for (int64 m = 1; m * m <= n_max; ++m)
        for (int64 n = 1; m * m * n <= n_max; ++n)
          rhs[m * m * n] += static_cast<double>(tau_e4(n, m)) * g[n];
      break;
    }
    case IdentityName::LTwoRankinSquare: {
      rep.identity = "ltwo_rankin_square";
      // companion form for the first factor of the Rankin-Selberg square
      std::uint64_t seed = 0x9e3779b97f4a7c15ull;
      for (char c : form.label) seed = seed * 131 + static_cast<unsigned char>(c);
      MaassFormData companion = synthetic_form(seed, n_max);
      auto g = gl2_seq();
      std::vector<double> prod(n_max + 1, 0.0);
      for (int64 n = 1; n <= n_max; ++n)
        prod[n] = lambda_gl2(companion, n) * g[n];
      // L(s) = zeta(2s) * sum prod(n) n^{-s}; square it
      std::vector<double> lcoef(n_max + 1, 0.0);
      for (int64 a = 1; a * a <= n_max; ++a)
        for (int64 b = 1; a * a * b <= n_max; ++b) lcoef[a * a * b] += prod[b];
      lhs = dconv(lcoef, lcoef);
      for (int64 m = 1; m * m <= n_max; ++m)
        for (int64 n = 1; m * m * n <= n_max; ++n)
          rhs[m * m * n] += a_phi(companion, n, m) * g[n];
      break;
    }
  }
  rep.max_abs_error = max_diff(lhs, rhs);
  rep.pass = rep.max_abs_error < 1e-8;
  return rep;
}

MaassFormData synthetic_form(std::uint64_t seed, int64 prime_bound) {
  MaassFormData form;
  form.t = 10.0;
  form.parity = Parity::Even;
  form.l_sym2_at_1 = 1.0;
  form.label = "synthetic-" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> theta(0.0, 3.14159265358979323846);
  for (int64 p = 2; p <= prime_bound; ++p) {
    bool prime = true;
    for (int64 d = 2; d * d <= p; ++d)
      if (p % d == 0) { prime = false; break; }
    if (!prime) continue;
    double th = theta(rng);
    cplx a(std::cos(th), std::sin(th));
    form.satake.push_back({p, a, std::conj(a)});
  }
  return form;
}

std::uint64_t CoefficientTable::key(int64 a, int64 b, int64 c) {
  constexpr int64 kCap = int64(1) << 21;
  if (a < 0 || b < 0 || c < 0 || a >= kCap || b >= kCap || c >= kCap)
    throw std::invalid_argument("CoefficientTable::key: index out of range");
  return (static_cast<std::uint64_t>(a) << 42) |
         (static_cast<std::uint64_t>(b) << 21) | static_cast<std::uint64_t>(c);
}

namespace {

constexpr std::uint32_t kCacheMagic = 0x53334354u;  // "S3CT"
constexpr std::uint32_t kCacheVersion = 1u;

void write_string(std::ofstream& out, const std::string& s) {
  std::uint32_t len = static_cast<std::uint32_t>(s.size());
  out.write(reinterpret_cast<const char*>(&len), sizeof len);
  out.write(s.data(), len);
}

std::string read_string(std::ifstream& in) {
  std::uint32_t len = 0;
  in.read(reinterpret_cast<char*>(&len), sizeof len);
  if (!in || len > (1u << 20)) throw std::runtime_error("cache file corrupt");
  std::string s(len, '\0');
  in.read(s.data(), len);
  return s;
}

}  // namespace

void CoefficientTable::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
  out.write(reinterpret_cast<const char*>(&kCacheMagic), sizeof kCacheMagic);
  out.write(reinterpret_cast<const char*>(&kCacheVersion), sizeof kCacheVersion);
  write_string(out, kind);
  write_string(out, form_label);
  out.write(reinterpret_cast<const char*>(&prime_bound), sizeof prime_bound);
  std::uint64_t count = entries.size();
  out.write(reinterpret_cast<const char*>(&count), sizeof count);
  for (const auto& [k, v] : entries) {
    out.write(reinterpret_cast<const char*>(&k), sizeof k);
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
  }
}

CoefficientTable CoefficientTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cache file: " + path);
  std::uint32_t magic = 0, version = 0;
  in.read(reinterpret_cast<char*>(&magic), sizeof magic);
  in.read(reinterpret_cast<char*>(&version), sizeof version);
  if (!in || magic != kCacheMagic || version != kCacheVersion)
    throw std::runtime_error("cache file has wrong magic/version: " + path);
  CoefficientTable t;
  t.kind = read_string(in);
  t.form_label = read_string(in);
  in.read(reinterpret_cast<char*>(&t.prime_bound), sizeof t.prime_bound);
  std::uint64_t count = 0;
  in.read(reinterpret_cast<char*>(&count), sizeof count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t k = 0;
    double v = 0.0;
    in.read(reinterpret_cast<char*>(&k), sizeof k);
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!in) throw std::runtime_error("cache file truncated: " + path);
    t.entries[k] = v;
  }
  return t;
}

double lambda_sym3_cached(CoefficientTable& table, const MaassFormData& form,
                          int64 m1, int64 m2, int64 m3) {
  std::uint64_t k = CoefficientTable::key(m1, m2, m3);
  auto it = table.entries.find(k);
  if (it != table.entries.end()) return it->second;
  double v = lambda_sym3(form, m1, m2, m3);
  table.entries.emplace(k, v);
  return v;
}

}  // namespace spectral3
