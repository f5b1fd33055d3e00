#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "heckesign/forms/form_spec.hpp"

namespace heckesign::forms {

struct PrimeCoefficient {
  std::uint64_t p = 0;
  mpz_class a;
};

/// Exact prime coefficients a(p) together with the normalized multiplicative
/// extension lambda(n) = a(n) / n^{(k-1)/2}, lambda(1) = 1.
///
/// Prime coefficients cover every prime up to max(p_max, n_max) at which the
/// engine produced a value; lambda(n) covers 1 <= n <= n_max. Integers with a
/// prime factor in the FormSpec's excluded set are marked excluded and carry NaN.
/// Prime powers are extended exactly through
///   a(p^{j+1}) = a(p) a(p^j) - p^{k-1} a(p^{j-1}),
/// composites multiplicatively in double precision.
class CoefficientTable {
 public:
  CoefficientTable(FormSpec spec, std::uint64_t p_max, std::uint64_t n_max,
                   std::vector<PrimeCoefficient> prime_coeffs);

  const FormSpec& spec() const { return spec_; }
  int weight() const { return spec_.weight; }
  std::uint64_t p_max() const { return p_max_; }
  std::uint64_t n_max() const { return n_max_; }
  /// Largest prime bound covered by prime coefficients.
  std::uint64_t prime_coverage() const { return coverage_; }

  const std::vector<PrimeCoefficient>& prime_coefficients() const { return prime_coeffs_; }
  bool has_prime(std::uint64_t p) const;
  const mpz_class& a_p(std::uint64_t p) const;
  /// Sign of the exact integer a(p).
  int sign_at_prime(std::uint64_t p) const;
  double lambda_p(std::uint64_t p) const;

  bool excluded(std::uint64_t n) const;
  double lambda(std::uint64_t n) const;
  std::span<const double> lambdas() const { return lambda_; }

  /// Primes p <= bound with a value and outside the excluded set.
  std::vector<std::uint64_t> included_primes(std::uint64_t bound) const;

 private:
  const PrimeCoefficient* find(std::uint64_t p) const;

  FormSpec spec_;
  std::uint64_t p_max_;
  std::uint64_t n_max_;
  std::uint64_t coverage_;
  std::vector<PrimeCoefficient> prime_coeffs_;
  std::vector<double> lambda_p_;
  std::vector<double> lambda_;
};

/// Computes prime coefficients with the engine for the FormSpec's kind and
/// extends them. Elliptic-curve primes are distributed over `threads`.
CoefficientTable build_table(const FormSpec& spec, std::uint64_t p_max, std::uint64_t n_max,
                             unsigned threads = 1);

/// Prime coefficients only, for primes up to `bound`.
std::vector<PrimeCoefficient> compute_prime_coefficients(const FormSpec& spec, std::uint64_t bound,
                                                         unsigned threads = 1);

/// Level-1 newform of weight 12, 16 or 20 as a table covering n_max.
CoefficientTable level1_newform(int weight, std::uint64_t n_max);

/// theta(p) in [0, pi] with lambda(p) = 2 cos theta(p), for included primes.
struct AngleTable {
  std::string label;
  std::vector<std::uint64_t> primes;
  std::vector<double> theta;

  double at(std::uint64_t p) const;
};

/// Throws invariant_violation when |lambda(p)| > 2 + 1e-9 at some included prime.
AngleTable theta_angles(const CoefficientTable& table);

std::uint64_t divisor_count(std::uint64_t n);

}  // namespace heckesign::forms
