#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace heckesign::forms {

/// Truncated integer power series sum_{i < length} c_i q^i, held as residues
/// modulo a fixed set of NTT-friendly primes. Products are exact over Z as
/// long as the final coefficients fit in the reconstruction range (about
/// 2^238 in absolute value); an extra check modulus detects any coefficient
/// that does not, and reconstruction then throws std::overflow_error.
class ModularSeries {
 public:
  static constexpr std::size_t reconstruction_moduli = 8;
  static constexpr std::size_t moduli_count = reconstruction_moduli + 1;

  explicit ModularSeries(std::size_t length);

  static ModularSeries from_sparse(std::size_t length,
                                   const std::vector<std::pair<std::size_t, std::int64_t>>& terms);
  static ModularSeries from_integers(const std::vector<mpz_class>& coeffs);

  std::size_t length() const { return length_; }

  ModularSeries operator*(const ModularSeries& other) const;
  ModularSeries pow(unsigned exponent) const;
  /// Multiplies by q^k, truncating at the current length.
  ModularSeries shifted(std::size_t k) const;

  /// Exact integer coefficients by Chinese remaindering.
  std::vector<mpz_class> to_integers() const;

 private:
  std::size_t length_;
  std::array<std::vector<std::uint32_t>, moduli_count> residues_;
};

/// prod_{n>=1} (1 - q^n) truncated below q^length, from the pentagonal number
/// theorem: sum_k (-1)^k q^{k(3k-1)/2}.
std::vector<std::pair<std::size_t, std::int64_t>> euler_function_terms(std::size_t length);

}  // namespace heckesign::forms
