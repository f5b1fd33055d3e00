#include "heckesign/signs/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "heckesign/chebst/chebyshev.hpp"
#include "heckesign/util/primes.hpp"

namespace heckesign::signs {

RankinSelbergSums rs_partial_sums(const forms::CoefficientTable& t1, const forms::CoefficientTable& t2,
                                  std::uint64_t x, double sigma) {
  if (sigma < 1.0) throw std::invalid_argument("rs_partial_sums: sigma must be >= 1");
  RankinSelbergSums out;
  for (const std::uint64_t p : t1.included_primes(x)) {
    if (!t2.has_prime(p) || t2.spec().is_excluded(p)) continue;
    const double w = std::pow(static_cast<double>(p), -sigma);
    const double l1 = t1.lambda_p(p), l2 = t2.lambda_p(p);
    out.cross += l1 * l2 * w;
    out.square += l1 * l1 * w;
    out.fourth += l1 * l2 * l1 * l2 * w;
    out.prime_zeta += w;
    ++out.primes;
  }
  return out;
}

StHistogram st_histogram(std::span<const double> theta, int bins) {
  if (bins < 2) throw std::invalid_argument("st_histogram: bins must be >= 2");
  if (theta.empty()) throw std::domain_error("st_histogram: no angles");
  StHistogram out;
  out.counts.assign(static_cast<std::size_t>(bins), 0);
  out.samples = theta.size();
  for (double t : theta) {
    auto b = static_cast<int>(t / std::numbers::pi * bins);
    ++out.counts[static_cast<std::size_t>(std::clamp(b, 0, bins - 1))];
  }
  std::vector<double> sorted(theta.begin(), theta.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = chebst::sato_tate_cdf(sorted[i]);
    out.discrepancy = std::max({out.discrepancy, std::abs((i + 1) / n - f), std::abs(f - i / n)});
  }
  return out;
}

StHistogram st_histogram(const forms::AngleTable& angles, std::uint64_t x, int bins) {
  std::vector<double> theta;
  for (std::size_t i = 0; i < angles.primes.size(); ++i) {
    if (angles.primes[i] <= x) theta.push_back(angles.theta[i]);
  }
  return st_histogram(theta, bins);
}

double counterexample_x(std::uint64_t p) {
  if (p % 4 != 1) return 0.0;
  return ((p - 1) / 4) % 2 == 0 ? std::numbers::sqrt2 : -std::numbers::sqrt2;
}

double counterexample_y(std::uint64_t p) {
  if (p % 4 != 3) return 0.0;
  return ((p - 3) / 4) % 2 == 0 ? std::numbers::sqrt2 : -std::numbers::sqrt2;
}

CounterexampleMoments counterexample_moments(std::uint64_t x, int k_max) {
  if (x < 10) throw std::invalid_argument("counterexample_moments: x must be >= 10");
  if (k_max < 1) throw std::invalid_argument("counterexample_moments: k_max must be >= 1");
  CounterexampleMoments out;
  out.x = x;
  out.v_x.assign(static_cast<std::size_t>(k_max), 0.0);
  out.v_y.assign(static_cast<std::size_t>(k_max), 0.0);
  // Values are confined to {0, sqrt2, -sqrt2}: count occurrences, then average.
  const double values[3] = {0.0, std::numbers::sqrt2, -std::numbers::sqrt2};
  std::uint64_t cx[3] = {0, 0, 0}, cy[3] = {0, 0, 0};
  auto slot = [](double v) { return v == 0.0 ? 0 : (v > 0 ? 1 : 2); };
  util::for_each_prime(2, x, [&](std::uint64_t p) {
    const double xp = counterexample_x(p), yp = counterexample_y(p);
    ++cx[slot(xp)];
    ++cy[slot(yp)];
    out.max_abs_xy = std::max(out.max_abs_xy, std::abs(xp * yp));
    ++out.prime_count;
  });
  const double n = static_cast<double>(out.prime_count);
  for (int k = 1; k <= k_max; ++k) {
    double sx = 0.0, sy = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double v = chebst::chebyshev_u_value(k, values[i]);
      sx += static_cast<double>(cx[i]) * v;
      sy += static_cast<double>(cy[i]) * v;
    }
    out.v_x[static_cast<std::size_t>(k - 1)] = sx / n;
    out.v_y[static_cast<std::size_t>(k - 1)] = sy / n;
  }
  out.sixth_x = static_cast<double>(cx[1] + cx[2]) * 8.0 / n;
  out.sixth_y = static_cast<double>(cy[1] + cy[2]) * 8.0 / n;
  return out;
}

}  // namespace heckesign::signs
