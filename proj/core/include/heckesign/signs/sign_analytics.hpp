#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heckesign/forms/coefficient_table.hpp"

namespace heckesign::signs {

/// Normalized values with |lambda| below this are treated as sign 0.
inline constexpr double kZeroThreshold = 1e-12;

/// Signs of lambda(p) at the included primes p <= x. Zero agrees with both
/// signs when sequences are compared.
struct SignSequence {
  std::string label;
  std::vector<std::uint64_t> primes;
  std::vector<int> signs;

  /// 0 when p is not in the domain.
  int at(std::uint64_t p) const;
  bool contains(std::uint64_t p) const;
};

SignSequence sign_sequence(const forms::CoefficientTable& table, std::uint64_t x);
SignSequence negated(const SignSequence& s);

struct FirstNegative {
  std::optional<std::uint64_t> n;      // least n with lambda(n) < 0
  std::optional<std::uint64_t> prime;  // least prime with a(p) < 0
};

/// Scans n <= n_max for the first negative normalized coefficient (exact
/// integer sign at primes) and all covered primes for the first negative a(p).
FirstNegative first_negative(const forms::CoefficientTable& table, std::uint64_t n_max);

struct SignAgreement {
  double density = 0.0;
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t total = 0;
};

/// Fraction of common primes p <= x at which the relaxed signs agree.
/// Throws std::domain_error when no prime qualifies.
SignAgreement sign_agreement(const forms::CoefficientTable& t1, const forms::CoefficientTable& t2,
                             std::uint64_t x);
SignAgreement sign_agreement(const SignSequence& s1, const SignSequence& s2, std::uint64_t x);

struct FirstSignDifference {
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> prime;
};

/// Least n <= n_max, outside both excluded sets, with strictly opposite signs.
FirstSignDifference first_sign_difference(const forms::CoefficientTable& t1, const forms::CoefficientTable& t2,
                                          std::uint64_t n_max);

/// S(f, x): sum of lambda(n) over squarefree n <= x outside the excluded set.
double sum_S(const forms::CoefficientTable& table, std::uint64_t x);

}  // namespace heckesign::signs
