#pragma once
// Exact integer/modular arithmetic and the complete exponential sums
// (Ramanujan, Kloosterman, hyper-Kloosterman, Gauss) used on the dual side
// of the degree-4 Voronoi formula.

#include <complex>
#include <cstdint>
#include <vector>

namespace spectral3 {

using cplx = std::complex<double>;
using int64 = std::int64_t;

// e(x) = exp(2*pi*i*x)
cplx e_of(double x);

int64 gcd_ll(int64 a, int64 b);

// Multiplicative inverse of a modulo m (m >= 1). Throws std::invalid_argument
// if gcd(a, m) != 1.
int64 mod_inverse(int64 a, int64 m);

// Trial-division factorization: list of (prime, exponent), primes increasing.
std::vector<std::pair<int64, int>> factorize(int64 n);

// All positive divisors of n, increasing.
std::vector<int64> divisors(int64 n);

int mobius(int64 n);          // n >= 1; throws on n < 1
int64 euler_phi(int64 n);     // n >= 1

// d_ell(n): number of ways to write n as an ordered product of ell factors.
int64 divisor_fn(int ell, int64 n);

// S(0, k; r) = sum_{d | gcd(k, r)} d * mu(r/d); integer exact.
int64 ramanujan_sum(int64 k, int64 r);

// S(a, b; c) = sum over x mod c, gcd(x,c)=1 of e((a x + b xbar)/c).
cplx kloosterman(int64 a, int64 b, int64 c);

// Parameters of the two-variable hyper-Kloosterman sum
// Kl(a, n, r; q1, q2, d1, d2)
//   = sum*_{x1 mod q1 r/d1} sum*_{x2 mod q1 q2 r/(d1 d2)}
//       e( d1 x1 a / r + d2 x2 x1bar / (q1 r/d1) + n x2bar / (q1 q2 r/(d1 d2)) ).
struct ExpSumParams {
  int64 a = 0;
  int64 n = 0;
  int64 r = 1;
  int64 q1 = 1;
  int64 q2 = 1;
  int64 d1 = 1;
  int64 d2 = 1;
};

// Throws std::invalid_argument if the divisibility invariants
// d1 | q1*r and d2 | q1*q2*r/d1 fail or a modulus is < 1.
cplx hyper_kloosterman(const ExpSumParams& p);

// Dirichlet character mod q, stored by its value table on residues 0..q-1.
struct DirichletCharacter {
  int64 q = 1;
  std::vector<cplx> values;  // values[n % q]; 0 on non-coprime residues

  cplx operator()(int64 n) const {
    int64 m = n % q;
    if (m < 0) m += q;
    return values[static_cast<size_t>(m)];
  }
  bool is_even() const { return std::abs((*this)(-1).real() - 1.0) < 1e-9; }
};

// All phi(q) Dirichlet characters mod q (trivial character first).
std::vector<DirichletCharacter> all_characters(int64 q);

// Smallest d | q such that chi is induced by a character mod d.
int64 conductor(const DirichletCharacter& chi);

bool is_primitive(const DirichletCharacter& chi);

// tau(chi) = sum_{a mod q} chi(a) e(a/q). Throws std::invalid_argument if
// chi is not primitive.
cplx gauss_sum(const DirichletCharacter& chi);

}  // namespace spectral3
