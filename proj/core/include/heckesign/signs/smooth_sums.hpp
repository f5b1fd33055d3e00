#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "heckesign/forms/coefficient_table.hpp"

namespace heckesign::signs {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 30'000'000;

/// The multiplicative function h_y supported on squarefree n coprime to the
/// level: h_y(p) = 1 for p <= sqrt(y), 0 for sqrt(y) < p <= y, -2 for p > y,
/// and 0 at primes dividing the level.
class HyFunction {
 public:
  HyFunction(double y, std::vector<std::uint64_t> level_primes);
  HyFunction(double y, std::uint64_t level);

  double y() const { return y_; }
  const std::vector<std::uint64_t>& level_primes() const { return level_primes_; }

  int at_prime(std::uint64_t p) const;
  /// Evaluates h_y(n) by trial-division factorization.
  int operator()(std::uint64_t n) const;

 private:
  double y_;
  std::vector<std::uint64_t> level_primes_;
};

/// sum_{n <= y^u} h_y(n) with its two pieces:
///   smooth_count: squarefree sqrt(y)-smooth n <= y^u coprime to the level,
///   large_prime_count: sum over primes y < p <= y^u (p coprime to the level)
///                      of #{squarefree m <= y^u / p coprime to the level},
/// so that total = smooth_count - 2 * large_prime_count.
struct HSum {
  std::int64_t total = 0;
  std::int64_t smooth_count = 0;
  std::int64_t large_prime_count = 0;
  std::uint64_t limit = 0;  // floor(y^u)
};

/// Requires 1 <= u <= 3/2, so that n <= y^u has at most one prime factor above y.
/// Throws budget_exceeded when y^u > budget.
HSum h_sum(double y, double u, const std::vector<std::uint64_t>& level_primes,
           std::uint64_t budget = kDefaultEnumerationBudget);
HSum h_sum(double y, double u, std::uint64_t level, std::uint64_t budget = kDefaultEnumerationBudget);

/// floor(y^u), robust against pow() landing just below an integer.
std::uint64_t power_floor(double y, double u);

struct LowerBoundReport {
  bool applicable = false;
  std::string reason;          // why the hypothesis fails, when it does
  std::uint64_t limit = 0;     // floor(y^u)
  double min_g = 0.0;          // min over included p <= y^u of lambda(p) - h_y(p)
  std::uint64_t min_g_prime = 0;
  double S = 0.0;              // S(f, y^u)
  std::int64_t h_total = 0;    // sum_{n <= y^u} h_y(n)
  double s_margin = 0.0;       // S - h_total
  bool g_nonnegative = false;  // min_g >= -1e-9
  bool s_dominates = false;    // s_margin >= -1e-6

  bool passed() const { return applicable && g_nonnegative && s_dominates; }
};

/// Checks the two facts behind S(f, y^u) >= sum h_y(n): g_y(p) >= 0 at every
/// included prime and the resulting inequality itself. The hypothesis is that
/// lambda(n) >= 0 for every included n <= y; when it fails the report is
/// marked inapplicable instead of raising.
LowerBoundReport verify_lower_bound_mechanics(const forms::CoefficientTable& table, double y, double u);

}  // namespace heckesign::signs
