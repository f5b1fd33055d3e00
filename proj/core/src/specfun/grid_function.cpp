#include "heckesign/specfun/grid_function.hpp"

#include <cmath>
#include <iomanip>
#include <stdexcept>

namespace heckesign::specfun {

GridFunction::GridFunction(std::string name, double start, double step, std::vector<double> samples)
    : name_(std::move(name)), start_(start), step_(step), samples_(std::move(samples)) {
  if (!(step_ > 0.0)) throw std::invalid_argument("GridFunction: step must be positive");
  if (samples_.empty()) throw std::invalid_argument("GridFunction: no samples");
  for (double v : samples_) {
    if (!std::isfinite(v)) throw std::invalid_argument("GridFunction: non-finite sample in " + name_);
  }
}

double GridFunction::at(double u) const {
  const double pos = (u - start_) / step_;
  const double last = static_cast<double>(samples_.size() - 1);
  if (pos < -1e-9 || pos > last + 1e-9) throw std::out_of_range("GridFunction::at: outside grid of " + name_);
  if (pos <= 0.0) return samples_.front();
  if (pos >= last) return samples_.back();
  const auto i = static_cast<std::size_t>(pos);
  const double f = pos - static_cast<double>(i);
  if (f == 0.0) return samples_[i];
  return samples_[i] * (1.0 - f) + samples_[i + 1] * f;
}

void GridFunction::write_csv(std::ostream& out) const {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "u,value\n" << std::setprecision(17);
  for (std::size_t i = 0; i < samples_.size(); ++i) out << node(i) << ',' << samples_[i] << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace heckesign::specfun
