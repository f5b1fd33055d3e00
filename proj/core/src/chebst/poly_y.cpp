#include "heckesign/chebst/poly_y.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "heckesign/util/errors.hpp"

namespace heckesign::chebst {

namespace {

mpq_class q(long num, long den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

ChebyshevExpansion polynomial_Y() {
  return ChebyshevExpansion(std::vector<mpq_class>{q(1, 2) + q(1, 24), 0, q(1, 4), 0, q(-1, 4), 0, q(136, 1000)});
}

RationalPolynomial polynomial_Y_monomial() {
  return {{q(-283, 3000), 0, q(227, 125), 0, q(-93, 100), 0, q(17, 125)}};
}

namespace {

std::string decimals(const mpq_class& x, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = x.get_num() * scale / x.get_den();
  std::string body = scaled.get_str();
  if (body.size() < static_cast<std::size_t>(digits)) body.insert(0, digits - body.size(), '0');
  return "0." + body;
}

}  // namespace

PolyYReport poly_Y_suite(std::size_t grid_points) {
  PolyYReport r;
  const auto cheb = polynomial_Y();
  const auto expanded = cheb.monomial_exact();
  const auto expected = polynomial_Y_monomial();
  RationalPolynomial lhs = expanded, rhs = expected;
  lhs.coeffs.resize(7, 0);
  rhs.coeffs.resize(7, 0);
  r.identity_exact = lhs == rhs;
  r.chebyshev_form = "13/24 + 1/4*U_2 - 1/4*U_4 + 17/125*U_6";
  r.monomial_form = to_string(expanded);
  if (!r.identity_exact) throw invariant_violation("Y: Chebyshev and monomial forms differ: " + r.monomial_form);

  // Exact bisection on [0, 2]: Y(0) < 0 < Y(2), one root in between.
  mpq_class lo = 0, hi = 2;
  for (int i = 0; i < 120; ++i) {
    mpq_class mid = (lo + hi) / 2;
    (expected(mid) < 0 ? lo : hi) = mid;
  }
  r.alpha0_lo = lo;
  r.alpha0_hi = hi;
  r.alpha0 = mpq_class((lo + hi) / 2).get_d();
  r.alpha0_digits = decimals(lo, 30);
  const std::string ref = kAlpha0Reference;
  for (std::size_t i = 2; i < ref.size() && i < r.alpha0_digits.size() && ref[i] == r.alpha0_digits[i]; ++i) {
    ++r.matching_digits;
  }

  r.grid_points = grid_points;
  r.nonpositive_inside = true;
  r.at_most_one = true;
  r.inside_max = -std::numeric_limits<double>::infinity();
  r.overall_max_on_grid = -std::numeric_limits<double>::infinity();
  const mpq_class n(static_cast<unsigned long>(grid_points - 1));
  for (std::size_t i = 0; i < grid_points; ++i) {
    const mpq_class k(static_cast<unsigned long>(i));
    const mpq_class inner = -lo + 2 * lo * k / n;
    const mpq_class yi = expected(inner);
    if (yi > 0) r.nonpositive_inside = false;
    r.inside_max = std::max(r.inside_max, yi.get_d());
    const mpq_class outer = mpq_class(-2) + 4 * k / n;
    const mpq_class yo = expected(outer);
    if (yo > 1) r.at_most_one = false;
    r.overall_max_on_grid = std::max(r.overall_max_on_grid, yo.get_d());
  }

  // Critical points of Y on (0, 2) solve 3c6 t^2 + 2c4 t + c2 = 0 with t = x^2.
  const double c6 = 17.0 / 125, c4 = -93.0 / 100, c2 = 227.0 / 125;
  auto y = [&](double x) { return expected(mpq_class(x)).get_d(); };
  r.argmax = 0.0;
  r.max_value = y(0.0);
  auto consider = [&](double x) {
    if (x < 0.0 || x > 2.0) return;
    const double v = y(x);
    if (v > r.max_value) {
      r.max_value = v;
      r.argmax = x;
    }
  };
  consider(2.0);
  const double disc = 4 * c4 * c4 - 12 * c6 * c2;
  if (disc >= 0) {
    for (double sgn : {-1.0, 1.0}) {
      const double t = (-2 * c4 + sgn * std::sqrt(disc)) / (6 * c6);
      if (t > 0) consider(std::sqrt(t));
    }
  }

  r.y_at_2 = expected(mpq_class(2));
  r.y_at_2_exact = r.y_at_2 == mpq_class(2981, 3000);
  r.beta0 = cheb.exact_coeffs()[0];
  r.beta0_exceeds_half = r.beta0 > mpq_class(1, 2) && r.beta0 == mpq_class(13, 24);
  return r;
}

}  // namespace heckesign::chebst
