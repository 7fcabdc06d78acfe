#include "spectral3/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spectral3 {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

cplx e_of(double x) {
  // Reduce to [0,1) first so large arguments keep full phase accuracy.
  double frac = x - std::floor(x);
  return {std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)};
}

int64 gcd_ll(int64 a, int64 b) { return std::gcd(a, b); }

int64 mod_inverse(int64 a, int64 m) {
  if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  int64 r0 = m, r1 = ((a % m) + m) % m;
  int64 t0 = 0, t1 = 1;
  while (r1 != 0) {
    int64 q = r0 / r1;
    int64 r2 = r0 - q * r1;
    int64 t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1)
    throw std::invalid_argument("mod_inverse: " + std::to_string(a) +
                                " not invertible mod " + std::to_string(m));
  return ((t0 % m) + m) % m;
}

std::vector<std::pair<int64, int>> factorize(int64 n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<int64, int>> out;
  for (int64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<int64> divisors(int64 n) {
  std::vector<int64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    size_t sz = out.size();
    int64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(int64 n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

int64 euler_phi(int64 n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  int64 result = n;
  for (const auto& [p, e] : factorize(n)) result -= result / p;
  return result;
}

int64 divisor_fn(int ell, int64 n) {
  if (ell < 1 || n < 1) throw std::invalid_argument("divisor_fn: args must be >= 1");
  // d_ell(p^a) = C(a + ell - 1, ell - 1), multiplicative.
  int64 result = 1;
  for (const auto& [p, a] : factorize(n)) {
    int64 binom = 1;
    for (int i = 1; i <= a; ++i) binom = binom * (ell - 1 + i) / i;
    result *= binom;
  }
  return result;
}

int64 ramanujan_sum(int64 k, int64 r) {
  if (r < 1) throw std::invalid_argument("ramanujan_sum: r must be >= 1");
  int64 g = std::gcd(std::llabs(k), r);
  int64 sum = 0;
  for (int64 d : divisors(g)) sum += d * mobius(r / d);
  return sum;
}

cplx kloosterman(int64 a, int64 b, int64 c) {
  if (c < 1) throw std::invalid_argument("kloosterman: c must be >= 1");
  cplx sum = 0.0;
  for (int64 x = 1; x <= c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    int64 xbar = mod_inverse(x, c);
    sum += e_of(static_cast<double>((a % c) * x % c + (b % c) * xbar % c) / static_cast<double>(c));
  }
  if (c == 1) return 1.0;
  return sum;
}

cplx hyper_kloosterman(const ExpSumParams& p) {
  if (p.r < 1 || p.q1 < 1 || p.q2 < 1 || p.d1 < 1 || p.d2 < 1)
    throw std::invalid_argument("hyper_kloosterman: moduli must be >= 1");
  if ((p.q1 * p.r) % p.d1 != 0)
    throw std::invalid_argument("hyper_kloosterman: d1 must divide q1*r");
  int64 m1 = p.q1 * p.r / p.d1;  // x1 modulus
  if ((m1 * p.q2) % p.d2 != 0)
    throw std::invalid_argument("hyper_kloosterman: d2 must divide q1*q2*r/d1");
  int64 m2 = m1 * p.q2 / p.d2;   // x2 modulus

  cplx sum = 0.0;
  for (int64 x1 = 1; x1 <= m1; ++x1) {
    if (std::gcd(x1, m1) != 1) continue;
    int64 x1bar = mod_inverse(x1, m1);
    // phase part depending on x1 only
    double ph1 = static_cast<double>((p.d1 % p.r) * (x1 % p.r) % p.r * ((p.a % p.r + p.r) % p.r) % p.r) /
                 static_cast<double>(p.r);
    for (int64 x2 = 1; x2 <= m2; ++x2) {
      if (std::gcd(x2, m2) != 1) continue;
      int64 x2bar = mod_inverse(x2, m2);
      double ph2 = static_cast<double>((p.d2 % m1) * (x2 % m1) % m1 * x1bar % m1) /
                   static_cast<double>(m1);
      int64 nmod = ((p.n % m2) + m2) % m2;
      double ph3 = static_cast<double>(nmod * x2bar % m2) / static_cast<double>(m2);
      sum += e_of(ph1 + ph2 + ph3);
    }
  }
  return sum;
}

namespace {

// Structure of (Z/p^k)^* for the character construction.
struct CyclicFactor {
  int64 generator;  // element of (Z/q)^* generating this factor (via CRT lift)
  int64 order;
};

int64 pow_mod(int64 base, int64 exp, int64 mod) {
  if (mod == 1) return 0;
  __int128 result = 1, b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<int64>(result);
}

int64 primitive_root(int64 pk, int64 p) {
  // Primitive root mod p^k for odd prime p (or p itself for k=1).
  int64 phi = pk / p * (p - 1);
  auto fac = factorize(phi);
  for (int64 g = 2; g < pk; ++g) {
    if (std::gcd(g, pk) != 1) continue;
    bool ok = true;
    for (const auto& [q, e] : fac) {
      if (pow_mod(g, phi / q, pk) == 1) { ok = false; break; }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

}  // namespace

std::vector<DirichletCharacter> all_characters(int64 q) {
  if (q < 1) throw std::invalid_argument("all_characters: q must be >= 1");
  // Decompose (Z/q)^* into cyclic factors with explicit generators lifted by CRT.
  auto fac = factorize(q);
  struct LocalFactor { int64 pk; std::vector<std::pair<int64, int64>> gens; };  // (gen mod pk, order)
  std::vector<LocalFactor> locals;
  for (const auto& [p, e] : fac) {
    int64 pk = 1;
    for (int i = 0; i < e; ++i) pk *= p;
    LocalFactor lf{pk, {}};
    if (p == 2) {
      if (e == 1) {
        // trivial group
      } else if (e == 2) {
        lf.gens.emplace_back(3, 2);
      } else {
        lf.gens.emplace_back(pk - 1, 2);            // -1
        lf.gens.emplace_back(5, pk / 4);            // 5 has order 2^{k-2}
      }
    } else {
      lf.gens.emplace_back(primitive_root(pk, p), pk / p * (p - 1));
    }
    locals.push_back(lf);
  }

  // CRT lift each local generator to a generator mod q (1 in other components).
  std::vector<CyclicFactor> factors;
  for (size_t i = 0; i < locals.size(); ++i) {
    int64 pk = locals[i].pk;
    int64 rest = q / pk;
    for (const auto& [g, ord] : locals[i].gens) {
      int64 lifted;
      if (rest == 1) {
        lifted = g % q;
      } else {
        // x = g mod pk, x = 1 mod rest
        int64 inv = mod_inverse(rest % pk, pk);
        __int128 x = (__int128)rest * inv % q * (g % pk) % q;
        __int128 y = (__int128)pk * mod_inverse(pk % rest, rest) % q;
        lifted = static_cast<int64>((x + y) % q);
      }
      factors.push_back({lifted, ord});
    }
  }

  // Discrete logs: express every unit as a product of generator powers.
  // Brute-force enumeration of all exponent tuples (q is tiny here).
  int64 phi = euler_phi(q);
  std::vector<std::vector<int64>> dlog(static_cast<size_t>(q));  // unit -> exponent tuple
  {
    std::vector<int64> exps(factors.size(), 0);
    // Iterate the full product group.
    int64 total = 1;
    for (auto& f : factors) total *= f.order;
    for (int64 idx = 0; idx < total; ++idx) {
      int64 rem = idx;
      __int128 val = 1 % q;
      for (size_t i = 0; i < factors.size(); ++i) {
        int64 e = rem % factors[i].order;
        rem /= factors[i].order;
        exps[i] = e;
        val = val * pow_mod(factors[i].generator, e, q) % q;
      }
      dlog[static_cast<size_t>(val)] = exps;
    }
    if (total != phi) throw std::logic_error("all_characters: group structure mismatch");
  }

  // Characters: one per exponent tuple (j_1,...,j_r); chi(g_i) = e(j_i / ord_i).
  std::vector<DirichletCharacter> chars;
  int64 total = phi;
  for (int64 cidx = 0; cidx < total; ++cidx) {
    std::vector<int64> js(factors.size());
    int64 rem = cidx;
    for (size_t i = 0; i < factors.size(); ++i) {
      js[i] = rem % factors[i].order;
      rem /= factors[i].order;
    }
    DirichletCharacter chi;
    chi.q = q;
    chi.values.assign(static_cast<size_t>(q), cplx(0.0, 0.0));
    for (int64 n = 0; n < q; ++n) {
      if (std::gcd(n, q) != 1) continue;
      const auto& exps = dlog[static_cast<size_t>(n)];
      double phase = 0.0;
      for (size_t i = 0; i < factors.size(); ++i)
        phase += static_cast<double>(js[i] * exps[i]) / static_cast<double>(factors[i].order);
      chi.values[static_cast<size_t>(n)] = e_of(phase);
    }
    if (q == 1) chi.values[0] = 1.0;
    chars.push_back(std::move(chi));
  }
  // Put the trivial character first.
  std::stable_sort(chars.begin(), chars.end(), [](const auto& a, const auto& b) {
    auto triv = [](const DirichletCharacter& c) {
      for (int64 n = 0; n < c.q; ++n)
        if (std::abs(c.values[(size_t)n]) > 0.5 && std::abs(c.values[(size_t)n] - cplx(1.0)) > 1e-9)
          return false;
      return true;
    };
    return triv(a) && !triv(b);
  });
  return chars;
}

int64 conductor(const DirichletCharacter& chi) {
  for (int64 d : divisors(chi.q)) {
    // chi is induced mod d iff chi(a) = 1 whenever a = 1 mod d and gcd(a, q) = 1.
    bool ok = true;
    for (int64 a = 1; a <= chi.q && ok; a += d) {
      if (std::gcd(a, chi.q) != 1) continue;
      if (std::abs(chi(a) - cplx(1.0)) > 1e-9) ok = false;
    }
    if (ok) return d;
  }
  return chi.q;
}

bool is_primitive(const DirichletCharacter& chi) { return conductor(chi) == chi.q; }

cplx gauss_sum(const DirichletCharacter& chi) {
  if (!is_primitive(chi))
    throw std::invalid_argument("gauss_sum: character is not primitive");
  cplx sum = 0.0;
  for (int64 a = 0; a < chi.q; ++a)
    sum += chi(a) * e_of(static_cast<double>(a) / static_cast<double>(chi.q));
  return sum;
}

}  // namespace spectral3
