#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "heckesign/forms/coefficient_table.hpp"

namespace heckesign::signs {

/// Truncated Rankin-Selberg style sums over common included primes p <= x:
///   cross  = sum lambda1(p) lambda2(p) p^-sigma
///   square = sum lambda1(p)^2 p^-sigma
///   fourth = sum (lambda1(p) lambda2(p))^2 p^-sigma
///   prime_zeta = sum p^-sigma
struct RankinSelbergSums {
  double cross = 0.0;
  double square = 0.0;
  double fourth = 0.0;
  double prime_zeta = 0.0;
  std::uint64_t primes = 0;
};

RankinSelbergSums rs_partial_sums(const forms::CoefficientTable& t1, const forms::CoefficientTable& t2,
                                  std::uint64_t x, double sigma);

struct StHistogram {
  std::vector<std::uint64_t> counts;  // equal-width bins on [0, pi]
  double discrepancy = 0.0;           // sup |F_empirical - F_ST|
  std::uint64_t samples = 0;
};

/// Throws std::invalid_argument for bins < 2 and std::domain_error when no
/// angle qualifies.
StHistogram st_histogram(const forms::AngleTable& angles, std::uint64_t x, int bins);
StHistogram st_histogram(std::span<const double> theta, int bins);

/// The sequences x_p, y_p: x_p = (-1)^{(p-1)/4} sqrt 2 for p = 1 mod 4 and 0
/// otherwise; y_p = (-1)^{(p-3)/4} sqrt 2 for p = 3 mod 4 and 0 otherwise.
double counterexample_x(std::uint64_t p);
double counterexample_y(std::uint64_t p);

struct CounterexampleMoments {
  std::uint64_t x = 0;
  std::uint64_t prime_count = 0;
  std::vector<double> v_x;  // v_x[k-1] = average of V_k(x_p), k = 1..k_max
  std::vector<double> v_y;
  double sixth_x = 0.0;     // average of x_p^6
  double sixth_y = 0.0;
  double max_abs_xy = 0.0;  // max |x_p y_p|
};

/// Averages over primes p <= x of V_k, the Chebyshev polynomial with
/// V_k(2 cos t) = X_k(t). Requires x >= 10.
CounterexampleMoments counterexample_moments(std::uint64_t x, int k_max = 6);

}  // namespace heckesign::signs
