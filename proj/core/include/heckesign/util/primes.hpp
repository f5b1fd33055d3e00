#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace heckesign::util {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Primes p <= n in increasing order.
std::vector<std::uint32_t> primes_up_to(std::uint64_t n);

/// Number of primes p <= x, counted with the segmented sieve.
std::uint64_t prime_count(std::uint64_t x);

/// Segmented sieve of Eratosthenes over [lo, hi]. Memory is O(sqrt(hi) + segment).
/// The callback receives each prime in increasing order.
template <class F>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f) {
  if (hi < 2 || lo > hi) return;
  if (lo < 2) lo = 2;
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi)));
  while (root * root > hi) --root;
  while ((root + 1) * (root + 1) <= hi) ++root;
  const auto base = primes_up_to(root);
  constexpr std::uint64_t segment = std::uint64_t{1} << 18;
  std::vector<unsigned char> composite(segment);
  for (std::uint64_t start = lo; start <= hi; start += segment) {
    const std::uint64_t stop = std::min(hi, start + segment - 1);
    std::fill(composite.begin(), composite.end(), 0);
    for (const std::uint64_t p : base) {
      if (p * p > stop) break;
      std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
      for (std::uint64_t m = first; m <= stop; m += p) composite[m - start] = 1;
    }
    for (std::uint64_t n = start; n <= stop; ++n) {
      if (!composite[n - start]) f(n);
    }
    if (stop == hi) break;
  }
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Smallest-prime-factor table for fast factorization of n <= limit.
class FactorTable {
 public:
  explicit FactorTable(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }
  std::vector<std::pair<std::uint32_t, int>> factorize(std::uint32_t n) const;
  bool squarefree(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace heckesign::util
