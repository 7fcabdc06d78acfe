#pragma once
// Forms-file ingestion and synthesis: the versioned JSON format holding Maass
// form spectral data (eigenvalue tables as decimal strings), a deterministic
// synthetic-form generator for algebraic-identity tests, and the coefficient
// cache location policy.

#include <cstdint>
#include <string>
#include <vector>

#include "spectral3/coeffs.hpp"

namespace spectral3 {

struct FormsFile {
  int schema_version = 1;
  std::vector<MaassFormData> forms;
};

// Parses and validates a forms file. Throws std::runtime_error naming the
// file, the offending record label (when known) and the violated invariant:
// unsupported schema version, duplicate labels, non-positive t, prime /
// eigenvalue count mismatch, or malformed numbers.
FormsFile load_forms(const std::string& path);

// Writes the file in the same JSON schema (numbers as decimal strings with
// full double precision, so load_forms(save_forms(f)) round-trips exactly).
void save_forms(const FormsFile& file, const std::string& path);

// Deterministic synthetic spectra: count forms with t uniform on
// [t_lo, t_hi], parity alternating (even first), Satake angles uniform on
// [0, pi] at every prime <= prime_bound, L(1, sym^2) log-uniform on [1/2, 2].
// Throws std::invalid_argument for count < 1 or an empty t range.
FormsFile synth_forms(std::uint64_t seed, int count, double t_lo, double t_hi,
                      int64 prime_bound);

// Coefficient-cache directory: $SPECTRAL3_CACHE_DIR if set, else ./.cache.
std::string cache_dir();

}  // namespace spectral3
