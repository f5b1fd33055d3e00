#include "heckesign/chebst/bmv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "heckesign/util/errors.hpp"

namespace heckesign::chebst {

namespace {

void require_odd(int L) {
  if (L < 1 || L % 2 == 0) throw std::invalid_argument("L must be a positive odd integer");
}

double chi_half(double x) { return x <= 0.5 ? 1.0 : 0.0; }

}  // namespace

int TrigPolynomial::degree() const {
  const std::size_t n = std::max(cos_coeffs.size(), sin_coeffs.size());
  for (std::size_t l = n; l-- > 1;) {
    const double c = l < cos_coeffs.size() ? cos_coeffs[l] : 0.0;
    const double s = l < sin_coeffs.size() ? sin_coeffs[l] : 0.0;
    if (c != 0.0 || s != 0.0) return static_cast<int>(l);
  }
  return 0;
}

double TrigPolynomial::operator()(double x) const {
  double acc = constant_term();
  const double w = 2.0 * std::numbers::pi * x;
  const double c1 = std::cos(w), s1 = std::sin(w);
  double c = 1.0, s = 0.0;
  const std::size_t n = std::max(cos_coeffs.size(), sin_coeffs.size());
  for (std::size_t l = 1; l < n; ++l) {
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
    if (l < cos_coeffs.size()) acc += cos_coeffs[l] * c;
    if (l < sin_coeffs.size()) acc += sin_coeffs[l] * s;
  }
  return acc;
}

double TrigPolynomial::st_integral() const {
  return constant_term() - (cos_coeffs.size() > 1 ? cos_coeffs[1] / 2.0 : 0.0);
}

double TrigPolynomial::l2_norm_squared() const {
  double acc = constant_term() * constant_term();
  for (std::size_t l = 1; l < cos_coeffs.size(); ++l) acc += cos_coeffs[l] * cos_coeffs[l] / 2.0;
  for (std::size_t l = 1; l < sin_coeffs.size(); ++l) acc += sin_coeffs[l] * sin_coeffs[l] / 2.0;
  return acc;
}

std::vector<mpq_class> bmv_beta_L_exact(int L) {
  require_odd(L);
  std::vector<mpq_class> c(static_cast<std::size_t>(L) + 1, 0);
  const mpq_class scale(1, 2 * L + 2);
  c[0] = 2 * scale;
  for (int l = 1; l <= L; ++l) {
    if (l % 2 != 0) continue;
    mpq_class taper = 1 - mpq_class(l, L + 1);
    taper.canonicalize();
    c[static_cast<std::size_t>(l)] = scale * 2 * taper * 2;
  }
  for (auto& v : c) v.canonicalize();
  return c;
}

TrigPolynomial bmv_beta_L_poly(int L) {
  TrigPolynomial p;
  for (const auto& c : bmv_beta_L_exact(L)) p.cos_coeffs.push_back(c.get_d());
  return p;
}

double bmv_beta_L(int L, double x) { return bmv_beta_L_poly(L)(x); }

double bmv_beta_L_st_integral(int L) {
  const auto c = bmv_beta_L_exact(L);
  const mpq_class v = c[0] - (c.size() > 1 ? c[1] / 2 : mpq_class(0));
  if (v != mpq_class(1, L + 1)) throw invariant_violation("beta_L: Sato-Tate integral differs from 1/(L+1)");
  return v.get_d();
}

TrigPolynomial vaaler_alpha_L(int L) {
  require_odd(L);
  TrigPolynomial p;
  p.cos_coeffs.assign(1, 0.5);
  p.sin_coeffs.assign(static_cast<std::size_t>(L) + 1, 0.0);
  for (int n = 1; n <= L; n += 2) {
    const double u = static_cast<double>(n) / (L + 1);
    const double J = std::numbers::pi * u * (1.0 - u) / std::tan(std::numbers::pi * u) + u;
    p.sin_coeffs[static_cast<std::size_t>(n)] = 2.0 / (std::numbers::pi * n) * J;
  }
  return p;
}

bool ContractReport::all_passed() const {
  return !properties.empty() &&
         std::all_of(properties.begin(), properties.end(), [](const ContractProperty& p) { return p.passed; });
}

ContractReport minorant_contract_check(const TrigPolynomial& a, const TrigPolynomial& b, int L,
                                       std::size_t grid_size) {
  require_odd(L);
  if (grid_size < 4 * (static_cast<std::size_t>(L) + 1)) {
    throw std::invalid_argument("minorant_contract_check: grid_size must be >= 4(L+1)");
  }
  ContractReport r;
  r.L = L;
  r.grid_size = grid_size;

  ContractProperty degree{"degree", a.degree() <= L, 0.0, static_cast<double>(L - a.degree())};
  ContractProperty range{"range", true, 0.0, std::numeric_limits<double>::infinity()};
  ContractProperty mean{"constant_term", a.constant_term() == 0.5, 0.0, -std::abs(a.constant_term() - 0.5)};
  ContractProperty envelope{"envelope", true, 0.0, std::numeric_limits<double>::infinity()};

  const double near = 1.0 / (10.0 * L);
  for (std::size_t i = 0; i <= grid_size; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(grid_size);
    const double av = a(x), bv = b(x);
    const double slack_range = std::min(av + 1e-12, 1.0 + 1e-12 - av);
    if (slack_range < range.margin) {
      range.margin = slack_range;
      range.witness = x;
    }
    const bool at_jump = std::abs(x) <= near || std::abs(x - 0.5) <= near || std::abs(x - 1.0) <= near;
    double gap = std::abs(chi_half(x) - av);
    if (at_jump) gap = std::min(std::abs(1.0 - av), std::abs(av));
    const double slack = bv + 1e-12 - gap;
    if (slack < envelope.margin) {
      envelope.margin = slack;
      envelope.witness = x;
    }
  }
  range.passed = range.margin >= 0.0;
  envelope.passed = envelope.margin >= 0.0;
  r.properties = {degree, range, mean, envelope};
  return r;
}

MinorantPair::MinorantPair(TrigPolynomial a, TrigPolynomial b, int L, std::size_t grid_size)
    : a_(std::move(a)), b_(std::move(b)), L_(L) {
  if (grid_size == 0) grid_size = std::max<std::size_t>(10'000, 40 * (static_cast<std::size_t>(L) + 1));
  report_ = minorant_contract_check(a_, b_, L_, grid_size);
  if (!report_.all_passed()) {
    std::string failed;
    for (const auto& p : report_.properties) {
      if (!p.passed) failed += (failed.empty() ? "" : ", ") + p.name;
    }
    throw invariant_violation("MinorantPair: candidate rejected by contract (" + failed + ")");
  }
}

MinorantPair MinorantPair::standard(int L) { return MinorantPair(vaaler_alpha_L(L), bmv_beta_L_poly(L), L); }

ProductMinorantResult product_minorant_eval(const MinorantPair& pair, const std::vector<std::vector<double>>& points) {
  ProductMinorantResult out;
  out.samples.reserve(points.size());
  for (const auto& theta : points) {
    const std::size_t w = theta.size();
    std::vector<double> av(w), bv(w);
    double chi = 1.0;
    for (std::size_t j = 0; j < w; ++j) {
      const double x = theta[j] / std::numbers::pi;
      av[j] = pair.a()(x);
      bv[j] = pair.b()(x);
      if (theta[j] > std::numbers::pi / 2.0) chi = 0.0;
    }
    ProductMinorantSample s;
    s.A = 1.0;
    for (double v : av) s.A *= v;
    for (std::size_t j = 0; j < w; ++j) {
      double term = bv[j];
      for (std::size_t q = 0; q < w; ++q) {
        if (q != j) term *= av[q];
      }
      s.B += term;
    }
    s.chi = chi;
    const double excess = s.A - s.B - s.chi;
    out.worst_excess = std::max(out.worst_excess, excess);
    if (excess > 1e-9) ++out.violations;
    out.samples.push_back(s);
  }
  return out;
}

std::vector<std::vector<double>> minorant_test_points(int omega, std::size_t count, std::uint64_t seed) {
  if (omega < 1) throw std::invalid_argument("minorant_test_points: omega must be >= 1");
  std::mt19937_64 rng(seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double jumps[3] = {0.0, std::numbers::pi / 2.0, std::numbers::pi};
  std::vector<std::vector<double>> out(count, std::vector<double>(static_cast<std::size_t>(omega)));
  for (std::size_t i = 0; i < count; ++i) {
    for (auto& t : out[i]) t = std::numbers::pi * unit();
    if (i % 4 == 3) {
      const auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(omega));
      const double jump = jumps[rng() % 3];
      out[i][j] = std::clamp(jump + (unit() - 0.5) * 2e-6, 0.0, std::numbers::pi);
    }
  }
  return out;
}

double delta_lower(int L, int omega, double Ia) {
  require_odd(L);
  if (omega < 1) throw std::invalid_argument("delta_lower: omega must be >= 1");
  if (Ia < 0.0 || Ia > 1.0) throw std::invalid_argument("delta_lower: Ia must lie in [0, 1]");
  return std::pow(Ia, omega - 1) * (Ia - static_cast<double>(omega) / (L + 1));
}

int choose_L(int omega, double eps) {
  if (omega < 1 || !(eps > 0.0)) throw std::invalid_argument("choose_L: requires omega >= 1, eps > 0");
  int L = static_cast<int>(std::ceil(2.0 * omega / eps - 1e-12)) - 1;
  if (L < 1) L = 1;
  if (L % 2 == 0) ++L;
  return L;
}

}  // namespace heckesign::chebst
