#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "heckesign/forms/coefficient_table.hpp"

namespace heckesign::chebst {

/// Polynomial with exact coefficients, lowest degree first.
template <class Coeff>
struct Polynomial {
  std::vector<Coeff> coeffs;

  int degree() const;
  Coeff operator()(const Coeff& x) const;
  bool operator==(const Polynomial&) const = default;
};

using IntPolynomial = Polynomial<mpz_class>;
using RationalPolynomial = Polynomial<mpq_class>;

/// U_n via U_0 = 1, U_1 = x, U_{n+1} = x U_n - U_{n-1}, so that
/// U_n(2 cos t) = sin((n+1) t) / sin t. Requires n <= 64.
IntPolynomial chebyshev_u(int n);

/// U_n(x) in double precision by the same recurrence.
double chebyshev_u_value(int n, double x);

/// X_n(theta) = sin((n+1) theta) / sin(theta), with the limits (n+1) and
/// (-1)^n (n+1) at theta = 0 and pi.
double x_eval(int n, double theta);

/// p(x) as a polynomial with rational coefficients.
std::string to_string(const RationalPolynomial& p);

/// Coefficients in the X_n basis on [0, pi] (U_n in the value variable
/// x = 2 cos theta). Exact rational coefficients are kept when known.
class ChebyshevExpansion {
 public:
  explicit ChebyshevExpansion(std::vector<double> coeffs);
  explicit ChebyshevExpansion(std::vector<mpq_class> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  bool has_exact() const { return !exact_.empty(); }
  const std::vector<mpq_class>& exact_coeffs() const { return exact_; }

  /// sum c_n X_n(theta).
  double eval_theta(double theta) const;
  /// sum c_n U_n(x).
  double eval_value(double x) const;

  /// Expanded monomial form; exact when exact coefficients are present.
  RationalPolynomial monomial_exact() const;
  std::vector<double> monomial() const;

  /// max |eval_theta - monomial(2 cos theta)| over an n-point grid of [0, pi].
  double representation_gap(int grid_points = 1000) const;

 private:
  std::vector<double> coeffs_;
  std::vector<mpq_class> exact_;
};

/// Sato-Tate density (2/pi) sin^2(theta) on [0, pi].
double sato_tate_density(double theta);
/// mu_ST([0, theta]) = (2 theta - sin 2 theta) / (2 pi).
double sato_tate_cdf(double theta);

/// Composite Simpson for int_0^pi g(theta) dmu_ST. Exact (to rounding) for
/// trigonometric polynomials of degree below n_panels.
double st_integrate(const std::function<double(double)>& g, int n_panels = 4096);

/// c_n = int g X_n dmu_ST for n = 0..n_max.
ChebyshevExpansion cheb_coeffs(const std::function<double(double)>& g, int n_max, int n_panels = 4096);

/// |prod_p X_{n_p}(theta(p)) - lambda(prod_p p^{n_p})|. Throws coverage_error
/// if the product exceeds n_max or a prime is excluded, and
/// invariant_violation when the residual reaches 1e-9.
double hecke_product_identity(const forms::CoefficientTable& table,
                              const std::vector<std::pair<std::uint64_t, int>>& exponents);

}  // namespace heckesign::chebst
