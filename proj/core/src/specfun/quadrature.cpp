#include "heckesign/specfun/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heckesign::specfun {

GaussLegendre::GaussLegendre(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("GaussLegendre: 1 <= n <= 64");
  nodes_.resize(static_cast<std::size_t>(n));
  weights_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes_[static_cast<std::size_t>(i)] = x;
    weights_[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

double GaussLegendre::integrate(const std::function<double(double)>& f, double a, double b) const {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * f(mid + half * nodes_[i]);
  return acc * half;
}

double integrate_split(const std::function<double(double)>& f, double a, double b,
                       const std::vector<double>& breaks, int panels, int order) {
  if (b <= a) return 0.0;
  const GaussLegendre rule(order);
  std::vector<double> cuts{a};
  for (double c : breaks) {
    if (c > a && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double w = (cuts[i + 1] - cuts[i]) / panels;
    for (int k = 0; k < panels; ++k) acc += rule.integrate(f, cuts[i] + k * w, cuts[i] + (k + 1) * w);
  }
  return acc;
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b, double fb, double m,
                    double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
  if (b <= a) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace heckesign::specfun
