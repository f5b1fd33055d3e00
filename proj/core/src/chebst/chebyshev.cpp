#include "heckesign/chebst/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "heckesign/util/errors.hpp"

namespace heckesign::chebst {

template <class Coeff>
int Polynomial<Coeff>::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

template <class Coeff>
Coeff Polynomial<Coeff>::operator()(const Coeff& x) const {
  Coeff acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

template struct Polynomial<mpz_class>;
template struct Polynomial<mpq_class>;

IntPolynomial chebyshev_u(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("chebyshev_u: requires 0 <= n <= 64");
  std::vector<mpz_class> prev{1};
  if (n == 0) return {prev};
  std::vector<mpz_class> cur{0, 1};
  for (int k = 1; k < n; ++k) {
    std::vector<mpz_class> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur};
}

double chebyshev_u_value(int n, double x) {
  if (n < 0) throw std::invalid_argument("chebyshev_u_value: n must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double x_eval(int n, double theta) {
  const double s = std::sin(theta);
  if (std::abs(s) < 1e-6) return chebyshev_u_value(n, 2.0 * std::cos(theta));
  return std::sin((n + 1) * theta) / s;
}

std::string to_string(const RationalPolynomial& p) {
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const mpq_class& c = p.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << (mag != 1 ? "*" : "") << "x";
    if (i >= 2) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

ChebyshevExpansion::ChebyshevExpansion(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

ChebyshevExpansion::ChebyshevExpansion(std::vector<mpq_class> coeffs) : exact_(std::move(coeffs)) {
  if (exact_.empty()) exact_.emplace_back(0);
  for (auto& c : exact_) {
    c.canonicalize();
    coeffs_.push_back(c.get_d());
  }
}

double ChebyshevExpansion::eval_theta(double theta) const {
  double acc = 0.0;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) acc += coeffs_[n] * x_eval(static_cast<int>(n), theta);
  return acc;
}

double ChebyshevExpansion::eval_value(double x) const {
  // Clenshaw for the U_n recurrence.
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    const double b0 = coeffs_[n] + x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return b1;
}

RationalPolynomial ChebyshevExpansion::monomial_exact() const {
  std::vector<mpq_class> c;
  if (has_exact()) {
    c = exact_;
  } else {
    for (double v : coeffs_) c.emplace_back(v);
  }
  RationalPolynomial out{std::vector<mpq_class>(c.size(), 0)};
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == 0) continue;
    const auto u = chebyshev_u(static_cast<int>(n));
    for (std::size_t i = 0; i < u.coeffs.size(); ++i) out.coeffs[i] += c[n] * mpq_class(u.coeffs[i]);
  }
  return out;
}

std::vector<double> ChebyshevExpansion::monomial() const {
  const auto exact = monomial_exact();
  std::vector<double> out;
  for (const auto& c : exact.coeffs) out.push_back(c.get_d());
  return out;
}

double ChebyshevExpansion::representation_gap(int grid_points) const {
  const auto mono = monomial();
  double gap = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double theta = std::numbers::pi * i / (grid_points - 1);
    const double x = 2.0 * std::cos(theta);
    double m = 0.0;
    for (std::size_t k = mono.size(); k-- > 0;) m = m * x + mono[k];
    gap = std::max(gap, std::abs(eval_theta(theta) - m));
  }
  return gap;
}

double sato_tate_density(double theta) {
  const double s = std::sin(theta);
  return 2.0 / std::numbers::pi * s * s;
}

double sato_tate_cdf(double theta) {
  theta = std::clamp(theta, 0.0, std::numbers::pi);
  return (2.0 * theta - std::sin(2.0 * theta)) / (2.0 * std::numbers::pi);
}

double st_integrate(const std::function<double(double)>& g, int n_panels) {
  if (n_panels < 2) throw std::invalid_argument("st_integrate: need at least 2 panels");
  if (n_panels % 2 != 0) ++n_panels;
  const double h = std::numbers::pi / n_panels;
  double acc = 0.0;
  for (int i = 0; i <= n_panels; ++i) {
    const double theta = i * h;
    const double w = (i == 0 || i == n_panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc += w * g(theta) * sato_tate_density(theta);
  }
  return acc * h / 3.0;
}

ChebyshevExpansion cheb_coeffs(const std::function<double(double)>& g, int n_max, int n_panels) {
  if (n_max < 0) throw std::invalid_argument("cheb_coeffs: n_max must be >= 0");
  std::vector<double> c;
  for (int n = 0; n <= n_max; ++n) {
    c.push_back(st_integrate([&](double t) { return g(t) * x_eval(n, t); }, n_panels));
  }
  return ChebyshevExpansion(std::move(c));
}

double hecke_product_identity(const forms::CoefficientTable& table,
                              const std::vector<std::pair<std::uint64_t, int>>& exponents) {
  std::uint64_t m = 1;
  double product = 1.0;
  for (const auto& [p, e] : exponents) {
    if (e < 0) throw std::invalid_argument("hecke_product_identity: negative exponent");
    if (table.spec().is_excluded(p)) throw coverage_error("hecke_product_identity: prime is excluded");
    for (int i = 0; i < e; ++i) {
      if (m > table.n_max() / p) throw coverage_error("hecke_product_identity: product beyond n_max");
      m *= p;
    }
    const double theta = std::acos(std::clamp(table.lambda_p(p) / 2.0, -1.0, 1.0));
    product *= x_eval(e, theta);
  }
  const double residual = std::abs(product - table.lambda(m));
  if (!(residual < 1e-9)) {
    throw invariant_violation("Hecke product identity residual " + std::to_string(residual) + " at n = " +
                              std::to_string(m) + " for " + table.spec().label);
  }
  return residual;
}

}  // namespace heckesign::chebst
