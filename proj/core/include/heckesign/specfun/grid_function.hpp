#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace heckesign::specfun {

/// Samples on the uniform grid start + i * step, linearly interpolated.
class GridFunction {
 public:
  GridFunction(std::string name, double start, double step, std::vector<double> samples);

  const std::string& name() const { return name_; }
  double start() const { return start_; }
  double step() const { return step_; }
  double end() const { return start_ + step_ * static_cast<double>(samples_.size() - 1); }
  std::size_t size() const { return samples_.size(); }
  double node(std::size_t i) const { return start_ + step_ * static_cast<double>(i); }
  double operator[](std::size_t i) const { return samples_[i]; }
  const std::vector<double>& samples() const { return samples_; }

  /// Linear interpolation; throws std::out_of_range outside [start, end].
  double at(double u) const;

  std::map<std::string, std::string> metadata;

  /// CSV with header "u,value" and 17 significant digits.
  void write_csv(std::ostream& out) const;

 private:
  std::string name_;
  double start_;
  double step_;
  std::vector<double> samples_;
};

}  // namespace heckesign::specfun
