#include "heckesign/util/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckesign::util {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  if (n > 0xffffffffULL) throw std::invalid_argument("primes_up_to: bound exceeds 32 bits");
  // Plain sieve for the base primes, segmented above that.
  if (n <= (std::uint64_t{1} << 22)) {
    std::vector<unsigned char> composite(n + 1, 0);
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (composite[p]) continue;
      for (std::uint64_t m = p * p; m <= n; m += p) composite[m] = 1;
    }
    for (std::uint64_t p = 2; p <= n; ++p) {
      if (!composite[p]) out.push_back(static_cast<std::uint32_t>(p));
    }
    return out;
  }
  for_each_prime(2, n, [&](std::uint64_t p) { out.push_back(static_cast<std::uint32_t>(p)); });
  return out;
}

std::uint64_t prime_count(std::uint64_t x) {
  std::uint64_t count = 0;
  for_each_prime(2, x, [&](std::uint64_t) { ++count; });
  return count;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  if (n < 2) return out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

FactorTable::FactorTable(std::uint32_t limit) : limit_(limit), spf_(std::size_t{limit} + 1, 0) {
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t m = i; m <= limit; m += i) {
      if (spf_[m] == 0) spf_[m] = static_cast<std::uint32_t>(i);
    }
  }
}

std::vector<std::pair<std::uint32_t, int>> FactorTable::factorize(std::uint32_t n) const {
  std::vector<std::pair<std::uint32_t, int>> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

bool FactorTable::squarefree(std::uint32_t n) const {
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

}  // namespace heckesign::util
