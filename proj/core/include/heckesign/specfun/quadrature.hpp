#pragma once

#include <functional>
#include <vector>

namespace heckesign::specfun {

/// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
 public:
  explicit GaussLegendre(int n);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  double integrate(const std::function<double(double)>& f, double a, double b) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Gauss-Legendre over [a, b] split at every point of `breaks` inside it and
/// into `panels` equal pieces between consecutive cuts.
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       const std::vector<double>& breaks, int panels = 1, int order = 8);

/// Adaptive Simpson with absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 40);

}  // namespace heckesign::specfun
