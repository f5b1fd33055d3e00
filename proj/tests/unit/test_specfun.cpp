#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "heckesign/specfun/beta.hpp"
#include "heckesign/specfun/dickman.hpp"
#include "heckesign/specfun/grid_function.hpp"
#include "heckesign/specfun/quadrature.hpp"
#include "heckesign/specfun/step_function.hpp"
#include "heckesign/util/errors.hpp"

using namespace heckesign::specfun;

TEST_CASE("Gauss-Legendre is exact on polynomials of degree 2n-1") {
  for (int n : {2, 4, 6, 8}) {
    const GaussLegendre gl(n);
    double wsum = 0.0;
    for (double w : gl.weights()) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    const int d = 2 * n - 1;
    const double v = gl.integrate([d](double x) { return std::pow(x, d - 1); }, 0.0, 2.0);
    CHECK(v == doctest::Approx(std::pow(2.0, d) / d).epsilon(1e-13));
  }
}

TEST_CASE("quadrature of a step integrand and a smooth one") {
  const auto step = [](double x) { return x < 0.3 ? 1.0 : -2.0; };
  CHECK(integrate_split(step, 0.0, 1.0, {0.3}) == doctest::Approx(0.3 - 1.4).epsilon(1e-13));
  CHECK(adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("Dickman rho against closed forms") {
  const DickmanRho rho;
  CHECK(rho(0.5) == 1.0);
  CHECK(rho(1.0) == 1.0);
  CHECK(rho(1.5) == doctest::Approx(1.0 - std::log(1.5)).epsilon(1e-15));
  CHECK(rho(2.0) == doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-14));
  // rho(3) = 1 - log 3 + int_2^3 log(t - 1) / t dt
  const double tail = adaptive_simpson([](double t) { return std::log(t - 1.0) / t; }, 2.0, 3.0, 1e-14);
  CHECK(std::abs(rho(3.0) - (1.0 - std::log(3.0) + tail)) < 1e-11);
  CHECK(rho(2.7) == doctest::Approx(dickman_rho(2.7)).epsilon(1e-15));
  CHECK(std::abs(rho(10.0) - 2.77017183772596e-11) < 1e-13);
  CHECK_THROWS(DickmanRho(11.0));
  CHECK_THROWS(DickmanRho(5.0, 1.0 / 100.0));
}

TEST_CASE("Dickman rho solves u rho'(u) = -rho(u - 1)") {
  const DickmanRho rho;
  for (double u : {1.3, 2.2, 3.7, 5.1, 7.9}) {
    const double e = 1e-5;
    const double derivative = (rho(u + e) - rho(u - e)) / (2.0 * e);
    CHECK(u * derivative == doctest::Approx(-rho(u - 1.0)).epsilon(1e-6));
  }
}

TEST_CASE("kappa") {
  const auto k = solve_kappa(1e-10);
  CHECK(k.residual <= 1e-10);
  CHECK(k.kappa == doctest::Approx(1.1117109258).epsilon(1e-9));
  CHECK(k.kappa > 10.0 / 9.0);
  CHECK(k.kappa > std::cbrt(std::exp(1.0) / 2.0));
  CHECK(1.0 / (2.0 * k.kappa) <= 9.0 / 20.0);
  CHECK(std::abs(solve_kappa(1e-10, kDefaultRhoStep / 2).kappa - k.kappa) <= 1e-8);
}

TEST_CASE("main term of the h sum") {
  const double y = 1e6;
  CHECK(lm_h_main_term(y, 1.0, 1) == doctest::Approx(6.0 / (std::numbers::pi * std::numbers::pi) * y *
                                                      (1.0 - std::log(2.0)))
                                          .epsilon(1e-6));
  CHECK(zeta_N_2(1) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0));
  CHECK(zeta_N_2(2) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0 * 0.75));
}

TEST_CASE("step function") {
  const auto a = StepFunction::capped_alpha(8);
  CHECK(a.at_zero() == 2.0);
  CHECK(a.sup_abs() <= 2.0);
  CHECK(a.cap() == 8);
  CHECK(StepFunction::constant(2.0)(17.0) == 2.0);
  CHECK_THROWS(StepFunction({0.5}, {1.0}));
  const StepFunction s({0.0, 1.0}, {2.0, -2.0});
  CHECK(s(0.999) == 2.0);
  CHECK(s(1.0) == -2.0);
  CHECK(s.breakpoints_in(0.5, 2.0) == std::vector<double>{1.0});
}

TEST_CASE("grid function csv") {
  GridFunction g("f", 0.0, 0.5, {1.0, 1.0 / 3.0, 0.1});
  std::ostringstream out;
  g.write_csv(out);
  CHECK(out.str() == "u,value\n0,1\n0.5,0.33333333333333331\n1,0.10000000000000001\n");
  CHECK(g.at(0.25) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS(g.at(1.5));
}

TEST_CASE("constant kernel gives beta = 1") {
  const auto alpha = StepFunction::constant(2.0);
  const auto b = beta_volterra(alpha, 2.0, 1.0 / 64);
  for (double v : b.samples()) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(beta_series(alpha, 1.5, 8) == doctest::Approx(1.0));
  const auto terms = simplex_terms(alpha, 2.0, 4);
  CHECK(terms[0].at(1.5) == doctest::Approx(1.5));
  for (std::size_t j = 1; j < terms.size(); ++j) {
    for (double v : terms[j].samples()) CHECK(std::abs(v) < 1e-15);
  }
  CHECK(beta_series(StepFunction::capped_alpha(), 1.0, 0) == 1.0);
}

TEST_CASE("beta solvers agree on the capped kernel") {
  const auto alpha = StepFunction::capped_alpha(8);
  const auto v = beta_volterra(alpha, 2.0);
  const auto s = beta_series_grid(alpha, 1.2, 8);
  for (int i = 1; i <= 20; ++i) {
    const double u = 1.2 * i / 20.0;
    CHECK(std::abs(v.at(u) - s.at(u)) < 1e-4);
    CHECK(integral_equation_residual(v, alpha, u) < 1e-6 * (1.0 + u * u));
  }
  CHECK(max_scaled_residual(v, alpha) < 1e-6);
}

TEST_CASE("first zero of beta") {
  const auto z = beta_first_zero(StepFunction::capped_alpha(8));
  REQUIRE(z.found);
  CHECK(z.positive_before);
  CHECK(z.u0 > 1.0);
  CHECK(z.u0 < 2.0);
  CHECK(std::abs(z.u0_half_step - z.u0) <= z.error_bar);
  REQUIRE(z.u0_cap_plus4);
  CHECK(std::abs(*z.u0_cap_plus4 - z.u0) <= z.error_bar);
  CHECK(z.error_bar < 0.01);
  CHECK(first_zero(GridFunction("g", 0.0, 0.5, {1.0, 0.5, -0.5})) == doctest::Approx(0.75));
  CHECK_FALSE(first_zero(GridFunction("g", 0.0, 0.5, {1.0, 0.5, 0.5})).has_value());
}

TEST_CASE("synthetic kernel zero agrees across methods") {
  const StepFunction alpha({0.0, 1.0}, {2.0, -2.0});
  const auto z = beta_first_zero(alpha, kDefaultBetaStep, 0.0, 3.0);
  REQUIRE(z.found);
  const auto s = beta_series_grid(alpha, 3.0, 12);
  const auto zs = first_zero(s);
  REQUIRE(zs.has_value());
  CHECK(std::abs(*zs - z.u0) < 1e-4);
}

TEST_CASE("empirical alpha h sums") {
  const auto alpha = StepFunction::capped_alpha(8);
  CHECK(empirical_alpha_h_sum(100.0, 0.5, alpha) >= 1.0);
  const auto s = empirical_sign_change(1e4, alpha);
  REQUIRE(s.n.has_value());
  CHECK(s.u > 1.0);
  CHECK(s.u < 1.5);
  const double at_n = std::log(static_cast<double>(*s.n) + 0.5) / std::log(1e4);
  CHECK(empirical_alpha_h_sum(1e4, at_n, alpha) < 0.0);
  CHECK(empirical_alpha_h_sum(1e4, std::log(static_cast<double>(*s.n) - 0.5) / std::log(1e4), alpha) >= 0.0);
}
