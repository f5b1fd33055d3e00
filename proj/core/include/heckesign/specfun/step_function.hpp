#pragma once

#include <optional>
#include <vector>

namespace heckesign::specfun {

/// Piecewise-constant function on [0, inf): values[i] on
/// [breakpoints[i], breakpoints[i+1]) and values.back() from the last
/// breakpoint on. breakpoints[0] = 0.
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  static StepFunction constant(double v);

  /// The kernel with value 2 on [0, 1/(M+1)), 2 cos(pi/(m+1)) on
  /// [1/(m+1), 1/m) for m = 1..M, and -2 on [1, inf).
  static StepFunction capped_alpha(int M = 8);

  double operator()(double s) const;
  /// The value on the first piece, i.e. the limit at 0+.
  double at_zero() const { return values_.front(); }
  double sup_abs() const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  /// Breakpoints strictly inside (lo, hi).
  std::vector<double> breakpoints_in(double lo, double hi) const;
  /// The cap M for kernels built by capped_alpha.
  std::optional<int> cap() const { return cap_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::optional<int> cap_;
};

}  // namespace heckesign::specfun
