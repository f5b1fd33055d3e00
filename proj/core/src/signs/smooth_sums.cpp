#include "heckesign/signs/smooth_sums.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "heckesign/signs/sign_analytics.hpp"
#include "heckesign/util/errors.hpp"
#include "heckesign/util/primes.hpp"
#include "heckesign/util/squarefree.hpp"

namespace heckesign::signs {
namespace {

bool divides_level(const std::vector<std::uint64_t>& level_primes, std::uint64_t p) {
  return std::binary_search(level_primes.begin(), level_primes.end(), p);
}

std::vector<std::uint64_t> primes_of(std::uint64_t level) {
  if (level == 0) throw std::invalid_argument("level must be positive");
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : util::factorize(level)) out.push_back(p);
  return out;
}

}  // namespace

std::uint64_t power_floor(double y, double u) {
  const double v = std::pow(y, u);
  auto n = static_cast<std::uint64_t>(std::floor(v));
  const double nearest = std::round(v);
  if (std::abs(v - nearest) <= 1e-9 * std::max(1.0, v)) n = static_cast<std::uint64_t>(nearest);
  return n;
}

HyFunction::HyFunction(double y, std::vector<std::uint64_t> level_primes)
    : y_(y), level_primes_(std::move(level_primes)) {
  if (!(y > 0)) throw std::invalid_argument("HyFunction: y must be positive");
  std::sort(level_primes_.begin(), level_primes_.end());
}

HyFunction::HyFunction(double y, std::uint64_t level) : HyFunction(y, primes_of(level)) {}

int HyFunction::at_prime(std::uint64_t p) const {
  if (divides_level(level_primes_, p)) return 0;
  const double pd = static_cast<double>(p);
  if (pd > y_) return -2;
  if (pd * pd <= y_) return 1;
  return 0;
}

int HyFunction::operator()(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("HyFunction: n must be >= 1");
  int value = 1;
  for (const auto& [p, e] : util::factorize(n)) {
    if (e > 1) return 0;
    value *= at_prime(p);
    if (value == 0) return 0;
  }
  return value;
}

HSum h_sum(double y, double u, const std::vector<std::uint64_t>& level_primes_in, std::uint64_t budget) {
  if (!(u >= 1.0 && u <= 1.5)) throw std::invalid_argument("h_sum: requires 1 <= u <= 3/2");
  if (!(y >= 1.0)) throw std::invalid_argument("h_sum: requires y >= 1");
  if (std::pow(y, u) > static_cast<double>(budget)) {
    throw budget_exceeded("h_sum: y^u exceeds enumeration budget of " + std::to_string(budget));
  }
  auto level_primes = level_primes_in;
  std::sort(level_primes.begin(), level_primes.end());

  HSum out;
  out.limit = power_floor(y, u);

  // Squarefree sqrt(y)-smooth n <= y^u coprime to the level, by DFS.
  std::vector<std::uint64_t> small;
  for (const auto p : util::primes_up_to(static_cast<std::uint64_t>(std::sqrt(y)) + 1)) {
    const double pd = p;
    if (pd * pd <= y && !divides_level(level_primes, p)) small.push_back(p);
  }
  out.smooth_count = static_cast<std::int64_t>(
      util::enumerate_squarefree(std::span<const std::uint64_t>(small), out.limit, [](std::uint64_t) { return 1.0; },
                                 [](std::uint64_t, double) {}));

  // Prime p > y times squarefree m <= y^u / p; such m are automatically
  // sqrt(y)-smooth and coprime to p because m <= y^{u-1} <= sqrt(y) < p.
  const auto y_floor = static_cast<std::uint64_t>(std::floor(y));
  if (out.limit > y_floor) {
    const std::uint64_t m_max = out.limit / (y_floor + 1);
    std::vector<std::int64_t> count(m_max + 1, 0);
    std::vector<unsigned char> ok(m_max + 1, 1);
    for (std::uint64_t d = 2; d * d <= m_max; ++d) {
      for (std::uint64_t m = d * d; m <= m_max; m += d * d) ok[m] = 0;
    }
    for (const auto p : level_primes) {
      for (std::uint64_t m = p; m <= m_max; m += p) ok[m] = 0;
    }
    for (std::uint64_t m = 1; m <= m_max; ++m) count[m] = count[m - 1] + ok[m];
    std::int64_t large = 0;
    util::for_each_prime(y_floor + 1, out.limit, [&](std::uint64_t p) {
      if (!divides_level(level_primes, p)) large += count[out.limit / p];
    });
    out.large_prime_count = large;
  }
  out.total = out.smooth_count - 2 * out.large_prime_count;
  return out;
}

HSum h_sum(double y, double u, std::uint64_t level, std::uint64_t budget) {
  return h_sum(y, u, primes_of(level), budget);
}

LowerBoundReport verify_lower_bound_mechanics(const forms::CoefficientTable& table, double y, double u) {
  LowerBoundReport r;
  r.limit = power_floor(y, u);
  if (r.limit > table.n_max()) throw coverage_error("verify_lower_bound_mechanics: y^u beyond table");
  const auto y_floor = static_cast<std::uint64_t>(std::floor(y));
  for (std::uint64_t n = 1; n <= y_floor; ++n) {
    if (table.excluded(n)) continue;
    if (table.lambda(n) < -kZeroThreshold) {
      r.reason = "lambda(" + std::to_string(n) + ") < 0 with n <= y";
      return r;
    }
  }
  r.applicable = true;
  const auto& level_primes = table.spec().excluded_primes;
  const HyFunction h(y, level_primes);
  r.min_g = std::numeric_limits<double>::infinity();
  for (const auto p : table.included_primes(r.limit)) {
    const double g = table.lambda_p(p) - h.at_prime(p);
    if (g < r.min_g) {
      r.min_g = g;
      r.min_g_prime = p;
    }
  }
  r.S = sum_S(table, r.limit);
  r.h_total = h_sum(y, u, level_primes).total;
  r.s_margin = r.S - static_cast<double>(r.h_total);
  r.g_nonnegative = r.min_g >= -1e-9;
  r.s_dominates = r.s_margin >= -1e-6;
  return r;
}

}  // namespace heckesign::signs
