#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace heckesign::forms {

enum class FormKind { level1_newform, elliptic_curve, eisenstein_e4 };

std::string to_string(FormKind kind);

/// Identity of a modular object whose coefficients the library can compute.
///
/// For elliptic curves the conductor is not computed. The excluded primes
/// are the primes dividing 2 * (4 a4^3 + 27 a6^2), a superset of the bad
/// primes, and `level` holds their product as a proxy for the level.
struct FormSpec {
  FormKind kind = FormKind::level1_newform;
  int weight = 12;
  std::uint64_t level = 1;
  std::int64_t a4 = 0;
  std::int64_t a6 = 0;
  std::vector<std::uint64_t> excluded_primes;  // sorted
  std::string label;

  static FormSpec level1_newform(int weight);
  static FormSpec elliptic_curve(std::int64_t a4, std::int64_t a6);
  static FormSpec eisenstein_e4();

  /// k^2 N.
  std::uint64_t analytic_conductor() const;
  bool is_excluded(std::uint64_t p) const;
  bool is_cusp_form() const { return kind != FormKind::eisenstein_e4; }

  bool operator==(const FormSpec&) const = default;
};

/// 4 a4^3 + 27 a6^2 (throws std::overflow_error beyond 63 bits).
std::int64_t curve_discriminant(std::int64_t a4, std::int64_t a6);

}  // namespace heckesign::forms
