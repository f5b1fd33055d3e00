#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "heckesign/chebst/bmv.hpp"
#include "heckesign/chebst/chebyshev.hpp"
#include "heckesign/chebst/poly_y.hpp"
#include "heckesign/forms/coefficient_table.hpp"
#include "heckesign/util/errors.hpp"

using namespace heckesign;
using namespace heckesign::chebst;

TEST_CASE("Chebyshev U recurrence and trigonometric form") {
  CHECK(chebyshev_u(0).coeffs == std::vector<mpz_class>{1});
  CHECK(chebyshev_u(1).coeffs == std::vector<mpz_class>{0, 1});
  CHECK(chebyshev_u(2).coeffs == std::vector<mpz_class>{-1, 0, 1});
  for (int n = 2; n <= 30; ++n) {
    const auto a = chebyshev_u(n), b = chebyshev_u(n - 1), c = chebyshev_u(n - 2);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      const mpz_class shifted = i > 0 ? b.coeffs[i - 1] : mpz_class(0);
      const mpz_class prev = i < c.coeffs.size() ? c.coeffs[i] : mpz_class(0);
      CHECK(a.coeffs[i] == shifted - prev);
    }
  }
  for (double t : {0.1, 0.7, 1.3, 2.9}) {
    for (int n : {0, 1, 5, 20}) {
      CHECK(x_eval(n, t) == doctest::Approx(std::sin((n + 1) * t) / std::sin(t)).epsilon(1e-12));
      CHECK(chebyshev_u_value(n, 2.0 * std::cos(t)) == doctest::Approx(x_eval(n, t)).epsilon(1e-12));
    }
  }
  CHECK(x_eval(4, 0.0) == doctest::Approx(5.0));
  CHECK(x_eval(4, std::numbers::pi) == doctest::Approx(5.0));
  CHECK(x_eval(3, std::numbers::pi) == doctest::Approx(-4.0));
  CHECK_THROWS(chebyshev_u(65));
}

TEST_CASE("Sato-Tate integrals in closed form") {
  CHECK(st_integrate([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(st_integrate([](double t) { return std::cos(t) * std::cos(t); }) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(st_integrate([](double t) { return 2.0 * std::cos(t); }) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(std::abs(st_integrate([](double t) { return std::pow(2.0 * std::cos(t), 4); }) - 2.0) < 1e-12);
  CHECK(sato_tate_cdf(0.0) == 0.0);
  CHECK(sato_tate_cdf(std::numbers::pi) == doctest::Approx(1.0));
  for (int m = 0; m <= 20; ++m) {
    for (int n = m; n <= 20; ++n) {
      const double g = st_integrate([&](double t) { return x_eval(m, t) * x_eval(n, t); });
      CHECK(std::abs(g - (m == n ? 1.0 : 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("Chebyshev expansions") {
  const ChebyshevExpansion e(std::vector<double>{0.5, -1.0, 0.25});
  for (double t : {0.2, 1.0, 2.5}) {
    CHECK(e.eval_theta(t) == doctest::Approx(0.5 - x_eval(1, t) + 0.25 * x_eval(2, t)));
    CHECK(e.eval_value(2.0 * std::cos(t)) == doctest::Approx(e.eval_theta(t)));
  }
  CHECK(e.representation_gap() < 1e-12);
  const auto c = cheb_coeffs([&](double t) { return e.eval_theta(t); }, 4);
  CHECK(c.coeffs()[0] == doctest::Approx(0.5));
  CHECK(c.coeffs()[1] == doctest::Approx(-1.0));
  CHECK(c.coeffs()[2] == doctest::Approx(0.25));
  CHECK(std::abs(c.coeffs()[3]) < 1e-12);
  const ChebyshevExpansion q(std::vector<mpq_class>{mpq_class(1, 2), mpq_class(0), mpq_class(1)});
  CHECK(to_string(q.monomial_exact()) == "x^2 - 1/2");
}

TEST_CASE("polynomial Y") {
  const auto r = poly_Y_suite();
  CHECK(r.identity_exact);
  CHECK(r.matching_digits >= 12);
  CHECK(r.alpha0 == doctest::Approx(0.231072024708014));
  CHECK(r.y_at_2 == mpq_class(2981, 3000));
  CHECK(r.y_at_2_exact);
  CHECK(r.nonpositive_inside);
  CHECK(r.at_most_one);
  CHECK(r.max_value <= 1.0);
  CHECK(r.beta0 == mpq_class(13, 24));
  CHECK(r.passed());
  const auto y = polynomial_Y();
  CHECK(std::abs(y.eval_value(r.alpha0)) < 1e-12);
  CHECK(y.eval_value(0.0) < 0.0);
}

TEST_CASE("beta_L closed form") {
  for (int L : {1, 3, 5, 11, 101}) {
    const auto b = bmv_beta_L_poly(L);
    CHECK(b.st_integral() == doctest::Approx(1.0 / (L + 1)).epsilon(1e-14));
    const double q = st_integrate([&](double t) { return b(t / std::numbers::pi); }, 8192);
    CHECK(std::abs(q - 1.0 / (L + 1)) < 1e-10);
    CHECK(bmv_beta_L_st_integral(L) == doctest::Approx(1.0 / (L + 1)));
    CHECK(b.degree() <= L);
  }
}

TEST_CASE("minorant contract") {
  for (int L : {1, 3, 5, 7, 11, 101}) {
    const auto pair = MinorantPair::standard(L);
    CHECK(pair.report().all_passed());
    CHECK(pair.a().st_integral() == doctest::Approx(0.5).epsilon(1e-12));
  }
  TrigPolynomial half;
  half.cos_coeffs = {0.5};
  half.sin_coeffs = {0.0};
  const auto rep = minorant_contract_check(half, bmv_beta_L_poly(7), 7, 4000);
  for (const auto& p : rep.properties) CHECK(p.passed == (p.name != "envelope"));
  CHECK_THROWS_AS(MinorantPair(half, bmv_beta_L_poly(7), 7), invariant_violation);
}

TEST_CASE("product minorant inequality on sampled tuples") {
  const int omega = 3;
  const int L = choose_L(omega, 0.1);
  const auto pair = MinorantPair::standard(L);
  const auto res = product_minorant_eval(pair, minorant_test_points(omega, 2000, 7));
  CHECK(res.samples.size() == 2000);
  CHECK(res.violations == 0);
  CHECK(minorant_test_points(omega, 10, 7) == minorant_test_points(omega, 10, 7));
}

TEST_CASE("delta lower bound arithmetic") {
  CHECK(delta_lower(7, 1, 0.5) == doctest::Approx(0.5 - 1.0 / 8));
  CHECK(delta_lower(7, 2, 0.5) == doctest::Approx(0.125));
  const int L = choose_L(6, 0.1);
  CHECK(L % 2 == 1);
  CHECK(delta_lower(L, 6, 0.5) > 0.0);
}

TEST_CASE("Hecke product identity") {
  const auto t = forms::level1_newform(12, 5000);
  CHECK(hecke_product_identity(t, {{2, 3}, {3, 2}, {5, 1}}) < 1e-9);
  CHECK(hecke_product_identity(t, {}) == 0.0);
  CHECK_THROWS_AS(hecke_product_identity(t, {{2, 13}}), coverage_error);
  const auto cm = forms::build_table(forms::FormSpec::elliptic_curve(1, 0), 1000, 1000);
  CHECK_THROWS_AS(hecke_product_identity(cm, {{2, 1}}), coverage_error);
}
