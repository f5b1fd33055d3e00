#include "heckesign/signs/sign_analytics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "heckesign/util/errors.hpp"

namespace heckesign::signs {
namespace {

int sign_of(double v) {
  if (v > kZeroThreshold) return 1;
  if (v < -kZeroThreshold) return -1;
  return 0;
}

/// Sign at n: exact at primes, thresholded otherwise.
int sign_at(const forms::CoefficientTable& t, std::uint64_t n, bool is_prime) {
  return is_prime ? t.sign_at_prime(n) : sign_of(t.lambda(n));
}

std::vector<unsigned char> prime_mask(std::uint64_t n) {
  std::vector<unsigned char> mask(n + 1, 1);
  mask[0] = 0;
  if (n >= 1) mask[1] = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (!mask[p]) continue;
    for (std::uint64_t m = p * p; m <= n; m += p) mask[m] = 0;
  }
  return mask;
}

}  // namespace

int SignSequence::at(std::uint64_t p) const {
  auto it = std::lower_bound(primes.begin(), primes.end(), p);
  if (it == primes.end() || *it != p) return 0;
  return signs[static_cast<std::size_t>(it - primes.begin())];
}

bool SignSequence::contains(std::uint64_t p) const { return std::binary_search(primes.begin(), primes.end(), p); }

SignSequence sign_sequence(const forms::CoefficientTable& table, std::uint64_t x) {
  SignSequence s;
  s.label = table.spec().label;
  s.primes = table.included_primes(x);
  s.signs.reserve(s.primes.size());
  for (const auto p : s.primes) s.signs.push_back(table.sign_at_prime(p));
  return s;
}

SignSequence negated(const SignSequence& s) {
  SignSequence out = s;
  out.label = "-" + s.label;
  for (auto& v : out.signs) v = -v;
  return out;
}

FirstNegative first_negative(const forms::CoefficientTable& table, std::uint64_t n_max) {
  if (n_max > table.n_max()) throw coverage_error("first_negative: n_max beyond table");
  FirstNegative out;
  const auto primes = prime_mask(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (table.excluded(n)) continue;
    if (sign_at(table, n, primes[n]) < 0) {
      out.n = n;
      break;
    }
  }
  for (const auto p : table.included_primes(table.prime_coverage())) {
    if (table.sign_at_prime(p) < 0) {
      out.prime = p;
      break;
    }
  }
  return out;
}

SignAgreement sign_agreement(const SignSequence& s1, const SignSequence& s2, std::uint64_t x) {
  SignAgreement out;
  std::size_t i = 0, j = 0;
  while (i < s1.primes.size() && j < s2.primes.size()) {
    const auto p = s1.primes[i], q = s2.primes[j];
    if (p > x || q > x) break;
    if (p < q) {
      ++i;
    } else if (q < p) {
      ++j;
    } else {
      ++out.total;
      if (s1.signs[i] * s2.signs[j] >= 0) {
        ++out.agreements;
      } else {
        ++out.disagreements;
      }
      ++i;
      ++j;
    }
  }
  if (out.total == 0) throw std::domain_error("sign_agreement: no common primes up to " + std::to_string(x));
  out.density = static_cast<double>(out.agreements) / static_cast<double>(out.total);
  return out;
}

SignAgreement sign_agreement(const forms::CoefficientTable& t1, const forms::CoefficientTable& t2,
                             std::uint64_t x) {
  return sign_agreement(sign_sequence(t1, x), sign_sequence(t2, x), x);
}

FirstSignDifference first_sign_difference(const forms::CoefficientTable& t1, const forms::CoefficientTable& t2,
                                          std::uint64_t n_max) {
  if (n_max > t1.n_max() || n_max > t2.n_max()) throw coverage_error("first_sign_difference: n_max beyond table");
  FirstSignDifference out;
  const auto primes = prime_mask(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (t1.excluded(n) || t2.excluded(n)) continue;
    if (sign_at(t1, n, primes[n]) * sign_at(t2, n, primes[n]) < 0) {
      out.n = n;
      break;
    }
  }
  const std::uint64_t bound = std::min(t1.prime_coverage(), t2.prime_coverage());
  const auto s1 = sign_sequence(t1, bound);
  const auto s2 = sign_sequence(t2, bound);
  for (std::size_t i = 0; i < s1.primes.size(); ++i) {
    const auto p = s1.primes[i];
    if (!s2.contains(p)) continue;
    if (s1.signs[i] * s2.at(p) < 0) {
      out.prime = p;
      break;
    }
  }
  return out;
}

double sum_S(const forms::CoefficientTable& table, std::uint64_t x) {
  if (x > table.n_max()) throw coverage_error("sum_S: x beyond table");
  std::vector<unsigned char> squarefree(x + 1, 1);
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    for (std::uint64_t m = d * d; m <= x; m += d * d) squarefree[m] = 0;
  }
  double sum = 0.0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    if (squarefree[n] && !table.excluded(n)) sum += table.lambda(n);
  }
  return sum;
}

}  // namespace heckesign::signs
