#include "heckesign/specfun/beta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "heckesign/specfun/quadrature.hpp"
#include "heckesign/util/errors.hpp"
#include "heckesign/util/primes.hpp"
#include "heckesign/util/squarefree.hpp"

namespace heckesign::specfun {

namespace {

std::size_t node_count(double u_max, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("step must be positive");
  if (!(u_max > 0.0)) throw std::invalid_argument("u_max must be positive");
  return static_cast<std::size_t>(std::ceil(u_max / h - 1e-9));
}

void tag(GridFunction& g, const StepFunction& alpha, double step) {
  g.metadata["step"] = std::to_string(step);
  if (alpha.cap()) g.metadata["cap"] = std::to_string(*alpha.cap());
}

}  // namespace

GridFunction beta_volterra(const StepFunction& alpha, double u_max, double h) {
  if (alpha.sup_abs() > 2.0 + 1e-12) throw std::invalid_argument("beta_volterra: |alpha| must be <= 2");
  const std::size_t n = node_count(u_max, h);
  std::vector<double> beta(n + 1, 1.0);
  const auto& bps = alpha.breakpoints();
  std::vector<double> cuts;
  for (std::size_t i = 1; i <= n; ++i) {
    const double u = static_cast<double>(i) * h;
    double known = 0.0, coef = 0.0;
    for (std::size_t k = 0; k < i; ++k) {
      const double t0 = static_cast<double>(k) * h, t1 = static_cast<double>(k + 1) * h;
      const double s_lo = u - t1, s_hi = u - t0;
      cuts.assign({t0});
      for (auto it = bps.rbegin(); it != bps.rend(); ++it) {
        if (*it > s_lo && *it < s_hi) cuts.push_back(u - *it);
      }
      cuts.push_back(t1);
      auto F0 = [&](double t) { return (t1 * t * t / 2.0 - t * t * t / 3.0) / h; };
      auto F1 = [&](double t) { return (t * t * t / 3.0 - t0 * t * t / 2.0) / h; };
      for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double a = cuts[c], b = cuts[c + 1];
        if (!(b > a)) continue;
        const double al = alpha(std::max(0.0, u - 0.5 * (a + b)));
        const double w0 = F0(b) - F0(a), w1 = F1(b) - F1(a);
        if (k + 1 == i) {
          known += al * w0 * beta[k];
          coef += al * w1;
        } else {
          known += al * (w0 * beta[k] + w1 * beta[k + 1]);
        }
      }
    }
    const double denom = u * u - coef;
    if (std::abs(denom) < 1e-14 * u * u) {
      throw std::runtime_error("beta_volterra: vanishing coefficient at u = " + std::to_string(u) +
                               ", h = " + std::to_string(h));
    }
    beta[i] = known / denom;
  }
  GridFunction g("beta_volterra", 0.0, h, std::move(beta));
  tag(g, alpha, h);
  return g;
}

double integral_equation_residual(const GridFunction& beta, const StepFunction& alpha, double u) {
  std::vector<double> breaks;
  for (double b : alpha.breakpoints()) breaks.push_back(u - b);
  for (std::size_t i = 1; i + 1 < beta.size() && beta.node(i) < u; ++i) breaks.push_back(beta.node(i));
  auto f = [&](double t) { return t * beta.at(t) * alpha(std::max(0.0, u - t)); };
  const double integral = integrate_split(f, 0.0, u, breaks, 1, 6);
  return std::abs(u * u * beta.at(u) - integral);
}

double max_scaled_residual(const GridFunction& beta, const StepFunction& alpha) {
  double worst = 0.0;
  for (std::size_t i = 1; i < beta.size(); ++i) {
    const double u = beta.node(i);
    worst = std::max(worst, integral_equation_residual(beta, alpha, u) / (1.0 + u * u));
  }
  return worst;
}

std::vector<GridFunction> simplex_terms(const StepFunction& alpha, double u_max, int j_max, double d) {
  if (std::abs(alpha.at_zero() - 2.0) > 1e-15) {
    throw std::invalid_argument("simplex_terms: alpha(0+) must be 2 for an integrable kernel");
  }
  if (j_max < 0 || j_max > 12) throw std::invalid_argument("simplex_terms: requires 0 <= j_max <= 12");
  if (u_max > 3.0) throw std::invalid_argument("simplex_terms: requires u_max <= 3");
  const std::size_t n = node_count(u_max, d);
  const GaussLegendre rule(6);
  std::vector<double> v(n + 1);
  for (std::size_t m = 0; m <= n; ++m) v[m] = static_cast<double>(m) * d;
  std::vector<GridFunction> terms;
  terms.emplace_back("I_0", 0.0, d, v);

  // Cubic interpolation of the previous term at x in [0, u_max].
  auto interp = [&](const std::vector<double>& f, double x) {
    const double pos = x / d;
    auto i = static_cast<std::ptrdiff_t>(std::floor(pos));
    std::ptrdiff_t first = std::clamp<std::ptrdiff_t>(i - 1, 0, static_cast<std::ptrdiff_t>(n) - 3);
    if (n < 3) first = 0;
    double acc = 0.0;
    const std::ptrdiff_t last = std::min<std::ptrdiff_t>(first + 3, static_cast<std::ptrdiff_t>(n));
    for (std::ptrdiff_t a = first; a <= last; ++a) {
      double w = 1.0;
      for (std::ptrdiff_t b = first; b <= last; ++b) {
        if (a != b) w *= (pos - static_cast<double>(b)) / static_cast<double>(a - b);
      }
      acc += w * f[static_cast<std::size_t>(a)];
    }
    return acc;
  };

  const auto& bps = alpha.breakpoints();
  const double support = bps.size() > 1 ? bps[1] : std::numeric_limits<double>::infinity();
  for (int j = 1; j <= j_max; ++j) {
    const std::vector<double>& prev = terms.back().samples();
    std::vector<double> cur(n + 1, 0.0);
    for (std::size_t m = 1; m <= n; ++m) {
      const double u = v[m];
      double acc = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double s0 = v[k], s1 = v[k + 1];
        if (s1 <= support) continue;  // kernel vanishes where alpha = 2
        double a = s0;
        auto piece = [&](double lo, double hi) {
          const double value = 2.0 - alpha(0.5 * (lo + hi));
          if (value == 0.0) return;
          const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
          double sum = 0.0;
          for (std::size_t q = 0; q < rule.nodes().size(); ++q) {
            const double s = mid + half * rule.nodes()[q];
            sum += rule.weights()[q] * value / s * interp(prev, u - s);
          }
          acc += sum * half;
        };
        for (double b : bps) {
          if (b > s0 && b < s1) {
            piece(a, b);
            a = b;
          }
        }
        piece(a, s1);
      }
      cur[m] = acc;
    }
    terms.emplace_back("I_" + std::to_string(j), 0.0, d, std::move(cur));
  }
  for (auto& t : terms) tag(t, alpha, d);
  return terms;
}

GridFunction beta_series_grid(const StepFunction& alpha, double u_max, int j_max, double d) {
  const auto terms = simplex_terms(alpha, u_max, j_max, d);
  const std::size_t n = terms.front().size();
  std::vector<double> beta(n, 1.0);
  for (std::size_t m = 1; m < n; ++m) {
    const double u = terms.front()[m];
    double acc = u, factorial = 1.0;
    for (int j = 1; j <= j_max; ++j) {
      factorial *= j;
      acc += (j % 2 == 0 ? 1.0 : -1.0) * terms[static_cast<std::size_t>(j)][m] / factorial;
    }
    beta[m] = acc / u;
  }
  GridFunction g("beta_series", 0.0, d, std::move(beta));
  tag(g, alpha, d);
  g.metadata["j_max"] = std::to_string(j_max);
  return g;
}

double beta_series(const StepFunction& alpha, double u, int j_max, double d) {
  if (!(u > 0.0) || u > 2.0) throw std::invalid_argument("beta_series: requires 0 < u <= 2");
  if (j_max == 0) return 1.0;
  const double steps = std::max(1.0, std::round(u / d));
  return beta_series_grid(alpha, u, j_max, u / steps).samples().back();
}

std::vector<int> series_growth_flags(const std::vector<GridFunction>& terms, double u) {
  std::vector<int> flags;
  double factorial = 1.0, previous = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < terms.size(); ++j) {
    factorial *= static_cast<double>(j);
    const double size = std::abs(terms[j].at(u)) / factorial;
    if (j >= 3 && size > previous) flags.push_back(static_cast<int>(j));
    previous = size;
  }
  return flags;
}

std::optional<double> first_zero(const GridFunction& f, double from) {
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (f.node(i + 1) < from) continue;
    const double a = f[i], b = f[i + 1];
    if (a > 0.0 && b <= 0.0) {
      // Bisection on the linear interpolant.
      double lo = f.node(i), hi = f.node(i + 1);
      for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f.at(mid) > 0.0 ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
  }
  return std::nullopt;
}

FirstZeroReport beta_first_zero(const StepFunction& alpha, double h, double lo, double hi) {
  if (!(hi > lo) || lo < 0.0) throw std::invalid_argument("beta_first_zero: invalid bracket");
  FirstZeroReport out;
  out.h = h;
  out.cap = alpha.cap();
  const auto beta = beta_volterra(alpha, hi, h);
  out.beta_min = beta[0];
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta.node(i) >= lo && beta[i] < out.beta_min) {
      out.beta_min = beta[i];
      out.beta_min_at = beta.node(i);
    }
  }
  const auto zero = first_zero(beta, lo);
  if (!zero) return out;
  out.found = true;
  out.u0 = *zero;
  out.positive_before = true;
  for (std::size_t i = 0; i < beta.size() && beta.node(i) < out.u0; ++i) {
    if (beta.node(i) >= lo && !(beta[i] > 0.0)) out.positive_before = false;
  }
  const auto half = first_zero(beta_volterra(alpha, hi, h / 2.0), lo);
  out.u0_half_step = half.value_or(std::numeric_limits<double>::quiet_NaN());
  out.error_bar = half ? std::abs(*half - out.u0) : std::numeric_limits<double>::infinity();
  if (alpha.cap()) {
    const auto wider = first_zero(beta_volterra(StepFunction::capped_alpha(*alpha.cap() + 4), hi, h), lo);
    out.u0_cap_plus4 = wider;
    out.error_bar = std::max(out.error_bar, wider ? std::abs(*wider - out.u0) : std::numeric_limits<double>::infinity());
  }
  return out;
}

double empirical_alpha_h_sum(double y, double u, const StepFunction& alpha, std::uint64_t budget) {
  if (!(y > 1.0) || !(u > 0.0)) throw std::invalid_argument("empirical_alpha_h_sum: requires y > 1, u > 0");
  const double bound = std::pow(y, u);
  if (bound > static_cast<double>(budget)) throw budget_exceeded("empirical_alpha_h_sum: y^u exceeds the budget");
  const auto limit = static_cast<std::uint64_t>(std::floor(bound * (1.0 + 1e-15)));
  const auto small = util::primes_up_to(limit);
  const std::vector<std::uint64_t> primes(small.begin(), small.end());
  const double log_y = std::log(y);
  double sum = 0.0;
  util::enumerate_squarefree(
      primes, limit, [&](std::uint64_t p) { return alpha(std::log(static_cast<double>(p)) / log_y); },
      [&](std::uint64_t, double w) { sum += w; }, true);
  return sum;
}

EmpiricalSignChange empirical_sign_change(double y, const StepFunction& alpha, double u_max, std::uint64_t budget) {
  if (!(y > 1.0) || !(u_max > 0.0)) throw std::invalid_argument("empirical_sign_change: requires y > 1, u_max > 0");
  EmpiricalSignChange out;
  const double bound = std::min(std::pow(y, u_max), static_cast<double>(budget));
  out.limit = static_cast<std::uint64_t>(std::floor(bound));
  const double log_y = std::log(y);
  auto h_prime = [&](std::uint64_t p) { return alpha(std::log(static_cast<double>(p)) / log_y); };
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(out.limit)));
  while ((root + 1) * (root + 1) <= out.limit) ++root;
  const auto small = util::primes_up_to(root);
  std::vector<double> small_value;
  for (const std::uint64_t p : small) small_value.push_back(h_prime(p));

  constexpr std::uint64_t segment = std::uint64_t{1} << 18;
  std::vector<double> value(segment);
  std::vector<std::uint64_t> rest(segment);
  double prefix = 0.0;
  for (std::uint64_t start = 1; start <= out.limit; start += segment) {
    const std::uint64_t stop = std::min(out.limit, start + segment - 1);
    const std::size_t len = static_cast<std::size_t>(stop - start + 1);
    for (std::size_t i = 0; i < len; ++i) {
      value[i] = 1.0;
      rest[i] = start + i;
    }
    for (std::size_t j = 0; j < small.size(); ++j) {
      const std::uint64_t p = small[j];
      for (std::uint64_t m = (start + p - 1) / p * p; m <= stop; m += p) {
        const std::size_t i = static_cast<std::size_t>(m - start);
        rest[i] /= p;
        if (rest[i] % p == 0) {
          value[i] = 0.0;
          rest[i] = 1;
        } else {
          value[i] *= small_value[j];
        }
      }
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (rest[i] > 1 && value[i] != 0.0) value[i] *= h_prime(rest[i]);
      prefix += value[i];
      if (prefix < -1e-9) {
        out.n = start + i;
        out.u = std::log(static_cast<double>(start + i)) / log_y;
        out.final_sum = prefix;
        return out;
      }
    }
  }
  out.final_sum = prefix;
  return out;
}

}  // namespace heckesign::specfun
