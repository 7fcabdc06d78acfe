#pragma once
// Hecke/Fourier coefficient towers: GL(2) eigenvalues from Satake data, the
// symmetric-cube GL(4) coefficients, the exact integer tau towers, the
// degree-4 Eisenstein/isobaric coefficients, and verifiers for the
// convolution identities relating them.

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "spectral3/arith.hpp"

namespace spectral3 {

struct SatakeLocal {
  int64 p;
  cplx alpha;
  cplx beta;
};

enum class Parity { Even, Odd };

struct MaassFormData {
  double t = 0.0;          // spectral parameter, t >= 0
  Parity parity = Parity::Even;
  std::vector<SatakeLocal> satake;  // primes strictly increasing
  double l_sym2_at_1 = 1.0;         // L(1, sym^2), positive
  std::string label;

  // Checks the structural invariants: primes strictly increasing,
  // alpha*beta = 1 and alpha+beta real at each prime, positive l_sym2_at_1.
  // Throws std::invalid_argument on violation.
  void validate() const;

  // Satake pair at p; throws std::out_of_range naming p if not tabulated.
  const SatakeLocal& local(int64 p) const;
};

enum class CoeffKind { Phi, E4 };

// Hecke eigenvalue lambda(n) of the GL(2) form: multiplicative, with
// lambda(p^{k+1}) = lambda(p) lambda(p^k) - lambda(p^{k-1}).
double lambda_gl2(const MaassFormData& form, int64 n);

// GL(4) Hecke coefficient of the symmetric cube, built from the local Satake
// set {alpha^3, alpha, beta, beta^3} via Schur polynomials. Real-valued and
// symmetric under (m1,m2,m3) -> (m3,m2,m1).
double lambda_sym3(const MaassFormData& form, int64 m1, int64 m2, int64 m3);

// Schur polynomial coefficient A(p^{k1}, p^{k2}, p^{k3}) of the degree-4
// local Satake multiset, via the Jacobi-Trudi determinant.
cplx gl4_local_coeff(const std::array<cplx, 4>& satake, int64 k1, int64 k2,
                     int64 k3);

// tau(m1, m2) = sum_{k1|m1, k2|m2} d2(k1 k2).
int64 tau2(int64 m1, int64 m2);

// tau(m1, m2, m3) = sum over ni|mi of tau(m2 n3/n2, m1 n2/n1), non-integral
// ratios skipped.
int64 tau3(int64 m1, int64 m2, int64 m3);

// same function as tau3, evaluated multiplicatively prime-by-prime with
// closed-form local factors; much faster for bulk sums
int64 tau3_fast(int64 m1, int64 m2, int64 m3);

// tau(m1,m2,m3,m4) = sum over di|mi of tau(d1 m2/d2, d2 m3/d3, d3 m4/d4).
int64 tau4(int64 m1, int64 m2, int64 m3, int64 m4);

// A_Phi(n, m, 1) = sum_{l d = m} d2(l) sum_{n1 n2 = n} lambda(d n1) lambda(d n2).
double a_phi(const MaassFormData& form, int64 n, int64 m);

// tau(n, m, 1) = sum_{l d = m} d2(l) sum_{n1 n2 = n} d2(d n1) d2(d n2);
// the degeneration of a_phi under lambda -> d2.
int64 tau_e4(int64 n, int64 m);

// Triple-indexed coefficient A_F(n, ell, k) for F in {Phi, E4}, extended from
// the k = 1 tower by the Mobius double-convolution
//   A_F(n,l,k) = sum_{d|(k,l)} sum_{e|(d,k/d)} sum_{f|(k,n)}
//                mu(df) mu(e) A_F(k/(dfe),1,1) A_F(dn/(ef), l/d, 1),
// non-integral interior arguments skipped. `form` may be null for E4.
double a_f_general(CoeffKind kind, const MaassFormData* form, int64 n,
                   int64 ell, int64 k);

enum class IdentityName {
  CompareDirichlet,   // 4-fold convolution of sym3(m,1,1) vs tau3-weighted tower
  Hecke34,            // 3-fold convolution vs tau2-weighted tower
  CompareDirichlet2,  // 5-fold convolution vs tau4-weighted tower
  LFourSquare,        // 4-fold convolution of lambda vs tau_e4-weighted sum
  LTwoRankinSquare    // Rankin-Selberg square vs a_phi-weighted sum
};

struct VerificationReport {
  std::string identity;
  int64 n_max = 0;
  double max_abs_error = 0.0;
  bool pass = false;
};

// Evaluates both sides of the named coefficient identity for every index up
// to n_max and reports the maximum absolute discrepancy. The integer tau
// identities must hold exactly; the lambda identities to 1e-8.
VerificationReport verify_identity(IdentityName which, const MaassFormData& form,
                                   int64 n_max);

// Synthetic Ramanujan-satisfying Satake data: alpha = e^{i theta}, theta
// uniform on [0, pi], for every prime <= prime_bound; seeded for
// reproducibility.
MaassFormData synthetic_form(std::uint64_t seed, int64 prime_bound);

// Immutable-after-build memo table with a binary sidecar format
// (magic "S3CT", version, kind string, form label, prime bound, then flat
// key/value arrays).
struct CoefficientTable {
  std::string kind;  // "gl2" | "sym3" | "Phi" | "E4"
  std::string form_label;
  int64 prime_bound = 0;
  std::unordered_map<std::uint64_t, double> entries;

  static std::uint64_t key(int64 a, int64 b, int64 c);  // each index < 2^21

  void save(const std::string& path) const;
  static CoefficientTable load(const std::string& path);  // throws on bad file
};

// Memoizing wrapper around lambda_sym3.
double lambda_sym3_cached(CoefficientTable& table, const MaassFormData& form,
                          int64 m1, int64 m2, int64 m3);

}  // namespace spectral3
