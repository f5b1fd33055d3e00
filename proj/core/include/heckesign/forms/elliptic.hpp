#pragma once

#include <cstdint>
#include <vector>

namespace heckesign::forms {

/// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
int legendre_symbol(std::int64_t a, std::uint64_t p);

/// Quadratic character of F_p as a lookup table, filled by squaring.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  int operator()(std::uint32_t residue) const { return chi_[residue]; }

 private:
  std::uint32_t p_;
  std::vector<signed char> chi_;
};

/// a(p) = -sum_{x mod p} ((x^3 + a4 x + a6) / p) for y^2 = x^3 + a4 x + a6.
/// Equals p + 1 - #E(F_p) at primes of good reduction. The value is also
/// returned at bad odd primes; callers decide whether to trust it.
/// Throws std::invalid_argument for p = 2 or composite p.
std::int64_t ec_ap(std::int64_t a4, std::int64_t a6, std::uint64_t p);

/// Same value through a precomputed character table (no primality check).
std::int64_t ec_ap(std::int64_t a4, std::int64_t a6, const QuadraticCharacter& chi);

}  // namespace heckesign::forms
