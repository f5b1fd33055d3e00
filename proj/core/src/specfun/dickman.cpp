#include "heckesign/specfun/dickman.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "heckesign/util/errors.hpp"
#include "heckesign/util/primes.hpp"

namespace heckesign::specfun {

namespace {

GridFunction build_rho(double u_max, double h) {
  if (!(u_max > 0.0) || u_max > 10.0) throw std::invalid_argument("DickmanRho: requires 0 < u_max <= 10");
  if (!(h > 0.0) || h > 1.0 / 256.0) throw std::invalid_argument("DickmanRho: requires h <= 1/256");
  const double inv = 1.0 / h;
  if (std::abs(inv - std::round(inv)) > 1e-9) throw std::invalid_argument("DickmanRho: 1/h must be an integer");
  const auto per_unit = static_cast<std::size_t>(std::llround(inv));
  const auto units = static_cast<std::size_t>(std::ceil(u_max - 1e-12));
  const std::size_t n = units * per_unit;
  std::vector<double> rho(n + 1, 1.0);
  for (std::size_t i = per_unit; i <= std::min(n, 2 * per_unit); ++i) {
    rho[i] = 1.0 - std::log(static_cast<double>(i) * h);
  }
  auto t_at = [&](std::size_t i) { return static_cast<double>(i) * h; };
  // f(i) = rho(t_i - 1) / t_i is known once rho is filled up to t_i - 1.
  auto f = [&](std::size_t i) { return rho[i - per_unit] / t_at(i); };
  // Cubic interpolation of rho(t - 1) on four nodes inside the unit interval.
  // rho(t - 1) at the midpoint of the first panel after an integer: closed
  // form on [1, 2], cubic interpolation on nodes 0..3 of the unit otherwise.
  auto f_mid = [&](std::size_t i) {
    const std::size_t base = i - per_unit;
    const double t = t_at(i) + 0.5 * h;
    if (base == per_unit) return (1.0 - std::log(t - 1.0)) / t;
    const double v = (5.0 * rho[base] + 15.0 * rho[base + 1] - 5.0 * rho[base + 2] + rho[base + 3]) / 16.0;
    return v / t;
  };
  for (std::size_t k = 2; k < units; ++k) {
    const std::size_t s = k * per_unit;
    for (std::size_t j = 1; j <= per_unit; ++j) {
      double integral = 0.0;
      if (j == 1) {
        integral = h / 6.0 * (f(s) + 4.0 * f_mid(s) + f(s + 1));
      } else {
        const std::size_t simpson_panels = (j % 2 == 0) ? j : j - 3;
        for (std::size_t i = 0; i + 1 < simpson_panels; i += 2) {
          integral += h / 3.0 * (f(s + i) + 4.0 * f(s + i + 1) + f(s + i + 2));
        }
        if (j % 2 == 1) {
          const std::size_t b = s + simpson_panels;
          integral += 3.0 * h / 8.0 * (f(b) + 3.0 * f(b + 1) + 3.0 * f(b + 2) + f(b + 3));
        }
      }
      rho[s + j] = rho[s] - integral;
    }
  }
  GridFunction g("dickman_rho", 0.0, h, std::move(rho));
  g.metadata["h"] = std::to_string(h);
  return g;
}

}  // namespace

DickmanRho::DickmanRho(double u_max, double h) : grid_(build_rho(u_max, h)) {
  per_unit_ = static_cast<std::size_t>(std::llround(1.0 / h));
}

double DickmanRho::integrand_source(double t) const {
  if (t <= 1.0) return 1.0;
  if (t <= 2.0) return 1.0 - std::log(t);
  // Cubic Lagrange on the four nodes of the enclosing unit interval nearest t.
  const double h = grid_.step();
  const auto k = static_cast<std::size_t>(std::floor(t));
  const std::size_t lo = k * per_unit_;
  const std::size_t hi = lo + per_unit_;
  auto i = static_cast<std::size_t>(std::floor(t / h));
  std::size_t first = i >= lo + 1 ? i - 1 : lo;
  if (first + 3 > hi) first = hi - 3;
  double acc = 0.0;
  for (std::size_t a = first; a < first + 4; ++a) {
    double w = 1.0;
    for (std::size_t b = first; b < first + 4; ++b) {
      if (a != b) w *= (t - grid_.node(b)) / (grid_.node(a) - grid_.node(b));
    }
    acc += w * grid_[a];
  }
  return acc;
}

double DickmanRho::partial_integral(std::size_t node, double u) const {
  const double a = grid_.node(node);
  const double m = 0.5 * (a + u);
  auto f = [&](double t) { return integrand_source(t - 1.0) / t; };
  return (u - a) / 6.0 * (f(a) + 4.0 * f(m) + f(u));
}

double DickmanRho::operator()(double u) const {
  if (u < 0.0) throw std::domain_error("dickman_rho: u must be >= 0");
  if (u <= 1.0) return 1.0;
  if (u <= 2.0) return 1.0 - std::log(u);
  if (u > grid_.end() + 1e-12) throw std::out_of_range("dickman_rho: u beyond the solved range");
  const double pos = u / grid_.step();
  const auto node = static_cast<std::size_t>(std::floor(pos));
  if (static_cast<double>(node) == pos || node + 1 >= grid_.size()) return grid_[std::min(node, grid_.size() - 1)];
  return grid_[node] - partial_integral(node, u);
}

double dickman_rho(double u, double h) {
  if (u < 0.0) throw std::domain_error("dickman_rho: u must be >= 0");
  if (u <= 2.0) return DickmanRho(2.0, h)(u);
  return DickmanRho(std::ceil(u), h)(u);
}

KappaResult solve_kappa(double tol, double h) {
  if (tol < 1e-12) throw std::invalid_argument("solve_kappa: tol must be >= 1e-12");
  const DickmanRho rho(3.0, h);
  auto g = [&](double u) { return rho(2.0 * u) - 2.0 * std::log(u); };
  double lo = 1.0, hi = 1.5;
  if (!(g(lo) > 0.0 && g(hi) < 0.0)) throw invariant_violation("solve_kappa: no sign change on [1, 3/2]");
  KappaResult out;
  out.h = h;
  while (hi - lo > 1e-15 && out.iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
    ++out.iterations;
    if (std::abs(g(mid)) <= tol && hi - lo < tol) break;
  }
  out.kappa = 0.5 * (lo + hi);
  out.residual = std::abs(g(out.kappa));
  if (out.residual > tol) throw invariant_violation("solve_kappa: residual above tolerance");
  if (!(out.kappa > 10.0 / 9.0)) throw invariant_violation("solve_kappa: kappa <= 10/9");
  if (!(out.kappa > std::cbrt(std::numbers::e / 2.0))) throw invariant_violation("solve_kappa: kappa <= (e/2)^(1/3)");
  return out;
}

double zeta_N_2(std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("zeta_N_2: N must be positive");
  double inv = 1.0;
  for (const std::uint32_t p : util::primes_up_to(1'000'000)) {
    if (N % p != 0) inv *= 1.0 - 1.0 / (static_cast<double>(p) * p);
  }
  return 1.0 / inv;
}

double lm_h_main_term(double y, double u, std::uint64_t N, const DickmanRho& rho) {
  if (u < 1.0 || u > 1.5) throw std::invalid_argument("lm_h_main_term: requires 1 <= u <= 3/2");
  if (N == 0 || y < std::cbrt(static_cast<double>(N))) throw std::invalid_argument("lm_h_main_term: requires y >= N^(1/3)");
  const double phi_ratio = static_cast<double>(util::euler_phi(N)) / static_cast<double>(N);
  return phi_ratio / zeta_N_2(N) * std::pow(y, u) * (rho(2.0 * u) - 2.0 * std::log(u));
}

double lm_h_main_term(double y, double u, std::uint64_t N) { return lm_h_main_term(y, u, N, DickmanRho(3.0)); }

}  // namespace heckesign::specfun
