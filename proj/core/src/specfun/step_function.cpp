#include "heckesign/specfun/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heckesign::specfun {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() || breakpoints_.front() != 0.0) {
    throw std::invalid_argument("StepFunction: first breakpoint must be 0");
  }
  if (values_.size() != breakpoints_.size()) {
    throw std::invalid_argument("StepFunction: one value per breakpoint");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1])) {
      throw std::invalid_argument("StepFunction: breakpoints must increase strictly");
    }
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("StepFunction: values must be finite");
  }
}

StepFunction StepFunction::constant(double v) { return StepFunction({0.0}, {v}); }

StepFunction StepFunction::capped_alpha(int M) {
  if (M < 1) throw std::invalid_argument("capped_alpha: M must be >= 1");
  std::vector<double> b{0.0};
  std::vector<double> v{2.0};
  for (int m = M; m >= 1; --m) {
    b.push_back(1.0 / (m + 1));
    v.push_back(2.0 * std::cos(std::numbers::pi / (m + 1)));
  }
  b.push_back(1.0);
  v.push_back(-2.0);
  StepFunction out(std::move(b), std::move(v));
  out.cap_ = M;
  return out;
}

double StepFunction::operator()(double s) const {
  if (s < 0.0) throw std::domain_error("StepFunction: negative argument");
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), s);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double StepFunction::sup_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> StepFunction::breakpoints_in(double lo, double hi) const {
  std::vector<double> out;
  for (double b : breakpoints_) {
    if (b > lo && b < hi) out.push_back(b);
  }
  return out;
}

}  // namespace heckesign::specfun
