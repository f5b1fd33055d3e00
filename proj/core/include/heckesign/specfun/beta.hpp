#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "heckesign/specfun/grid_function.hpp"
#include "heckesign/specfun/step_function.hpp"

namespace heckesign::specfun {

inline constexpr double kDefaultBetaStep = 1.0 / 512.0;
inline constexpr double kDefaultSeriesStep = 1.0 / 1024.0;

/// Solves u^2 beta(u) = int_0^u t beta(t) alpha(u - t) dt with beta(0) = 1
/// by product integration: beta is linear between nodes, alpha is constant
/// between the points u_n - b for its breakpoints b, and t beta(t) alpha is
/// integrated exactly on each piece. Requires sup |alpha| <= 2.
GridFunction beta_volterra(const StepFunction& alpha, double u_max, double h = kDefaultBetaStep);

/// |u^2 beta(u) - int_0^u t beta(t) alpha(u - t) dt| with the integral
/// evaluated by Gauss-Legendre on the interpolated grid function.
double integral_equation_residual(const GridFunction& beta, const StepFunction& alpha, double u);
/// max over grid nodes of the residual divided by (1 + u^2).
double max_scaled_residual(const GridFunction& beta, const StepFunction& alpha);

/// I_j on the grid m * d for j = 0..j_max, from I_0(u) = u and
/// I_j(u) = int_0^u ((2 - alpha(s)) / s) I_{j-1}(u - s) ds.
/// Requires alpha(0+) = 2, u_max <= 3 and j_max <= 12.
std::vector<GridFunction> simplex_terms(const StepFunction& alpha, double u_max, int j_max,
                                        double d = kDefaultSeriesStep);

/// (u + sum_{1 <= j <= j_max} (-1)^j I_j(u) / j!) / u on the grid, with
/// beta(0) = 1.
GridFunction beta_series_grid(const StepFunction& alpha, double u_max, int j_max, double d = kDefaultSeriesStep);
/// Single value; requires 0 < u <= 2.
double beta_series(const StepFunction& alpha, double u, int j_max, double d = kDefaultSeriesStep);

/// Indices j >= 3 at which |I_j(u)| / j! fails to decrease.
std::vector<int> series_growth_flags(const std::vector<GridFunction>& terms, double u);

/// First zero of a grid function by linear interpolation in the first panel
/// where it changes sign.
std::optional<double> first_zero(const GridFunction& f, double from = 0.0);

struct FirstZeroReport {
  bool found = false;
  double u0 = 0.0;
  double u0_half_step = 0.0;
  std::optional<double> u0_cap_plus4;  // capped kernels only
  double error_bar = 0.0;              // largest spread between the runs
  double beta_min = 0.0;               // minimum of beta on the solved grid
  double beta_min_at = 0.0;
  bool positive_before = false;        // beta > 0 at all nodes below u0
  double h = 0.0;
  std::optional<int> cap;
};

/// First zero of the Volterra solution in [lo, hi], re-solved at h/2 and,
/// for capped kernels, at cap M + 4.
FirstZeroReport beta_first_zero(const StepFunction& alpha, double h = kDefaultBetaStep, double lo = 0.0,
                                double hi = 2.0);

/// sum_{n <= y^u} h(n) over squarefree n with h(p) = alpha(log p / log y),
/// by depth-first enumeration. Throws budget_exceeded when y^u > budget.
double empirical_alpha_h_sum(double y, double u, const StepFunction& alpha,
                             std::uint64_t budget = 30'000'000);

struct EmpiricalSignChange {
  std::optional<std::uint64_t> n;  // first n with a negative prefix sum
  double u = 0.0;                  // log n / log y
  std::uint64_t limit = 0;         // scan bound
  double final_sum = 0.0;          // prefix sum at the scan bound or at n
};

/// Scans prefix sums of the same h up to min(y^u_max, budget) with a
/// segmented multiplicative sieve and reports the first negative one.
EmpiricalSignChange empirical_sign_change(double y, const StepFunction& alpha, double u_max = 1.5,
                                          std::uint64_t budget = 30'000'000);

}  // namespace heckesign::specfun
