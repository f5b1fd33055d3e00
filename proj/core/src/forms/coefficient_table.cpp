#include "heckesign/forms/coefficient_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "heckesign/forms/elliptic.hpp"
#include "heckesign/forms/modular_forms.hpp"
#include "heckesign/util/errors.hpp"
#include "heckesign/util/parallel.hpp"
#include "heckesign/util/primes.hpp"

namespace heckesign::forms {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double normalize(const mpz_class& a, std::uint64_t n, int weight) {
  return mpz_get_d(a.get_mpz_t()) / std::pow(static_cast<double>(n), (weight - 1) / 2.0);
}

}  // namespace

CoefficientTable::CoefficientTable(FormSpec spec, std::uint64_t p_max, std::uint64_t n_max,
                                   std::vector<PrimeCoefficient> prime_coeffs)
    : spec_(std::move(spec)),
      p_max_(p_max),
      n_max_(n_max),
      coverage_(std::max(p_max, n_max)),
      prime_coeffs_(std::move(prime_coeffs)) {
  if (p_max < 2 || n_max < 2) throw std::invalid_argument("coverage bounds must be >= 2");
  if (n_max > 0xffffffffULL) throw std::invalid_argument("n_max must fit in 32 bits");
  std::sort(prime_coeffs_.begin(), prime_coeffs_.end(),
            [](const PrimeCoefficient& x, const PrimeCoefficient& y) { return x.p < y.p; });
  for (const auto p : util::primes_up_to(coverage_)) {
    if (!spec_.is_excluded(p) && find(p) == nullptr) {
      throw coverage_error("missing prime coefficient at p = " + std::to_string(p) + " for " + spec_.label);
    }
  }
  lambda_p_.reserve(prime_coeffs_.size());
  for (const auto& pc : prime_coeffs_) lambda_p_.push_back(normalize(pc.a, pc.p, spec_.weight));

  lambda_.assign(n_max_ + 1, kNaN);
  lambda_[1] = 1.0;
  // Prime powers, exactly.
  for (const auto p : util::primes_up_to(n_max_)) {
    if (spec_.is_excluded(p)) continue;
    const mpz_class& ap = a_p(p);
    mpz_class pk1;
    mpz_ui_pow_ui(pk1.get_mpz_t(), p, static_cast<unsigned long>(spec_.weight - 1));
    mpz_class prev = 1;
    mpz_class cur = ap;
    std::uint64_t q = p;
    while (true) {
      lambda_[q] = normalize(cur, q, spec_.weight);
      if (q > n_max_ / p) break;
      mpz_class next = ap * cur - pk1 * prev;
      prev = std::move(cur);
      cur = std::move(next);
      q *= p;
    }
  }
  // Composites: lambda(n) = lambda(p^e) lambda(n / p^e).
  const util::FactorTable factors(static_cast<std::uint32_t>(n_max_));
  for (std::uint64_t n = 2; n <= n_max_; ++n) {
    const std::uint32_t p = factors.smallest_factor(static_cast<std::uint32_t>(n));
    std::uint64_t pe = p;
    while (n % (pe * p) == 0) pe *= p;
    if (pe == n) continue;
    lambda_[n] = lambda_[pe] * lambda_[n / pe];
  }
}

const PrimeCoefficient* CoefficientTable::find(std::uint64_t p) const {
  auto it = std::lower_bound(prime_coeffs_.begin(), prime_coeffs_.end(), p,
                             [](const PrimeCoefficient& pc, std::uint64_t v) { return pc.p < v; });
  if (it == prime_coeffs_.end() || it->p != p) return nullptr;
  return &*it;
}

bool CoefficientTable::has_prime(std::uint64_t p) const { return find(p) != nullptr; }

const mpz_class& CoefficientTable::a_p(std::uint64_t p) const {
  const auto* pc = find(p);
  if (pc == nullptr) throw coverage_error("no coefficient at p = " + std::to_string(p) + " for " + spec_.label);
  return pc->a;
}

int CoefficientTable::sign_at_prime(std::uint64_t p) const { return sgn(a_p(p)); }

double CoefficientTable::lambda_p(std::uint64_t p) const {
  const auto* pc = find(p);
  if (pc == nullptr) throw coverage_error("no coefficient at p = " + std::to_string(p) + " for " + spec_.label);
  return lambda_p_[static_cast<std::size_t>(pc - prime_coeffs_.data())];
}

bool CoefficientTable::excluded(std::uint64_t n) const {
  if (n == 0 || n > n_max_) throw coverage_error("n = " + std::to_string(n) + " outside table range");
  return std::isnan(lambda_[n]);
}

double CoefficientTable::lambda(std::uint64_t n) const {
  if (n == 0 || n > n_max_) throw coverage_error("n = " + std::to_string(n) + " outside table range");
  return lambda_[n];
}

std::vector<std::uint64_t> CoefficientTable::included_primes(std::uint64_t bound) const {
  if (bound > coverage_) throw coverage_error("prime bound " + std::to_string(bound) + " beyond table coverage");
  std::vector<std::uint64_t> out;
  for (const auto& pc : prime_coeffs_) {
    if (pc.p > bound) break;
    if (!spec_.is_excluded(pc.p)) out.push_back(pc.p);
  }
  return out;
}

std::vector<PrimeCoefficient> compute_prime_coefficients(const FormSpec& spec, std::uint64_t bound,
                                                         unsigned threads) {
  const auto primes = util::primes_up_to(bound);
  std::vector<PrimeCoefficient> out;
  out.reserve(primes.size());
  switch (spec.kind) {
    case FormKind::level1_newform: {
      const auto series = level1_newform_series(spec.weight, bound);
      for (const auto p : primes) out.push_back({p, series[p]});
      break;
    }
    case FormKind::eisenstein_e4: {
      // Hecke-normalized: a(p) = sigma_3(p), so that lambda(1) = 1.
      for (const auto p : primes) {
        mpz_class v = p;
        out.push_back({p, v * v * v + 1});
      }
      break;
    }
    case FormKind::elliptic_curve: {
      std::vector<std::uint32_t> odd(primes.begin() + (primes.empty() ? 0 : 1), primes.end());
      const auto values = util::parallel_map(odd.size(), threads, [&](std::size_t i) {
        return ec_ap(spec.a4, spec.a6, QuadraticCharacter(odd[i]));
      });
      for (std::size_t i = 0; i < odd.size(); ++i) {
        out.push_back({odd[i], mpz_class(static_cast<long>(values[i]))});
      }
      break;
    }
  }
  return out;
}

CoefficientTable build_table(const FormSpec& spec, std::uint64_t p_max, std::uint64_t n_max, unsigned threads) {
  if (p_max < 2 || n_max < 2) throw std::invalid_argument("coverage bounds must be >= 2");
  const std::uint64_t bound = std::max(p_max, n_max);
  return CoefficientTable(spec, p_max, n_max, compute_prime_coefficients(spec, bound, threads));
}

CoefficientTable level1_newform(int weight, std::uint64_t n_max) {
  return build_table(FormSpec::level1_newform(weight), std::max<std::uint64_t>(n_max, 2),
                     std::max<std::uint64_t>(n_max, 2));
}

double AngleTable::at(std::uint64_t p) const {
  auto it = std::lower_bound(primes.begin(), primes.end(), p);
  if (it == primes.end() || *it != p) throw coverage_error("no angle at p = " + std::to_string(p));
  return theta[static_cast<std::size_t>(it - primes.begin())];
}

AngleTable theta_angles(const CoefficientTable& table) {
  AngleTable out;
  out.label = table.spec().label;
  for (const auto& pc : table.prime_coefficients()) {
    if (table.spec().is_excluded(pc.p)) continue;
    const double l = table.lambda_p(pc.p);
    if (std::abs(l) > 2.0 + 1e-9) {
      throw invariant_violation("|lambda(" + std::to_string(pc.p) + ")| = " + std::to_string(std::abs(l)) +
                                " exceeds 2 for " + table.spec().label);
    }
    out.primes.push_back(pc.p);
    out.theta.push_back(std::acos(std::clamp(l / 2.0, -1.0, 1.0)));
  }
  return out;
}

std::uint64_t divisor_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_count: n must be >= 1");
  std::uint64_t tau = 1;
  for (const auto& [p, e] : util::factorize(n)) tau *= static_cast<std::uint64_t>(e + 1);
  return tau;
}

}  // namespace heckesign::forms
