#include "heckesign/forms/elliptic.hpp"

#include <stdexcept>

#include "heckesign/util/primes.hpp"

namespace heckesign::forms {
namespace {

std::uint64_t reduce(std::int64_t a, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

int legendre_symbol(std::int64_t a, std::uint64_t p) {
  const std::uint64_t r = reduce(a, p);
  if (r == 0) return 0;
  const std::uint64_t e = util::pow_mod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

QuadraticCharacter::QuadraticCharacter(std::uint32_t p) : p_(p), chi_(p, -1) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("QuadraticCharacter: p must be an odd prime");
  if (p >= (1u << 31)) throw std::invalid_argument("QuadraticCharacter: p must be below 2^31");
  chi_[0] = 0;
  for (std::uint64_t x = 1; x <= p / 2; ++x) chi_[x * x % p] = 1;
}

std::int64_t ec_ap(std::int64_t a4, std::int64_t a6, std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("ec_ap: p = 2 is excluded for short Weierstrass models");
  if (!util::is_prime(p)) throw std::invalid_argument("ec_ap: p is not prime");
  const std::uint64_t A = reduce(a4, p);
  const std::uint64_t B = reduce(a6, p);
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t x2 = util::mul_mod(x, x, p);
    const std::uint64_t rhs = (util::mul_mod(x2, x, p) + util::mul_mod(A, x, p) + B) % p;
    if (rhs == 0) continue;
    sum += util::pow_mod(rhs, (p - 1) / 2, p) == 1 ? 1 : -1;
  }
  return -sum;
}

std::int64_t ec_ap(std::int64_t a4, std::int64_t a6, const QuadraticCharacter& chi) {
  const std::uint64_t p = chi.prime();
  const std::uint64_t A = reduce(a4, p);
  const std::uint64_t B = reduce(a6, p);
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs = ((x * x % p) * x + A * x + B) % p;
    sum += chi(static_cast<std::uint32_t>(rhs));
  }
  return -sum;
}

}  // namespace heckesign::forms
