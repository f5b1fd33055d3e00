#pragma once

#include <cstdint>

#include "heckesign/specfun/grid_function.hpp"

namespace heckesign::specfun {

inline constexpr double kDefaultRhoStep = 1.0 / 512.0;

/// Dickman's rho on [0, u_max]: 1 on [0, 1], 1 - log u on [1, 2], and for
/// u > 2 rho(u) = rho(k) - int_k^u rho(t - 1) / t dt with k = floor(u),
/// integrated by Simpson panels that start at every integer.
class DickmanRho {
 public:
  /// Requires u_max <= 10 and h = 1 / 2^j <= 1/256.
  explicit DickmanRho(double u_max = 10.0, double h = kDefaultRhoStep);

  double operator()(double u) const;
  double step() const { return grid_.step(); }
  double u_max() const { return grid_.end(); }
  const GridFunction& grid() const { return grid_; }

 private:
  double integrand_source(double t) const;  // rho(t) for t < u by interpolation
  double partial_integral(std::size_t node, double u) const;

  GridFunction grid_;
  std::size_t per_unit_;
};

/// rho(u) with a freshly built table of step h.
double dickman_rho(double u, double h = kDefaultRhoStep);

struct KappaResult {
  double kappa = 0.0;
  double residual = 0.0;  // |rho(2 kappa) - 2 log kappa|
  int iterations = 0;
  double h = 0.0;
};

/// Bisection for rho(2u) = 2 log u on [1, 3/2]. Requires tol >= 1e-12 and
/// checks kappa > 10/9 and kappa > (e/2)^{1/3}, raising invariant_violation
/// otherwise.
KappaResult solve_kappa(double tol = 1e-10, double h = kDefaultRhoStep);

/// zeta_N(2) = prod_{p not dividing N} (1 - p^-2)^-1 over p <= 10^6.
/// The omitted tail changes it by a relative amount below 1e-6.
double zeta_N_2(std::uint64_t N);

/// (1 / zeta_N(2)) (phi(N) / N) y^u (rho(2u) - 2 log u). Requires
/// 1 <= u <= 3/2 and y >= N^{1/3}.
double lm_h_main_term(double y, double u, std::uint64_t N, const DickmanRho& rho);
double lm_h_main_term(double y, double u, std::uint64_t N);

}  // namespace heckesign::specfun
