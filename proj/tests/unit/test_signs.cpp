#include <doctest.h>

#include <cmath>
#include <numbers>

#include "heckesign/chebst/chebyshev.hpp"
#include "heckesign/forms/coefficient_table.hpp"
#include "heckesign/signs/distribution.hpp"
#include "heckesign/signs/sign_analytics.hpp"
#include "heckesign/signs/smooth_sums.hpp"
#include "heckesign/util/errors.hpp"
#include "heckesign/util/primes.hpp"

using namespace heckesign;
using forms::FormSpec;

namespace {

int direct_h(double y, std::uint64_t n, std::uint64_t level) {
  int v = 1;
  for (const auto& [p, e] : util::factorize(n)) {
    if (e > 1 || level % p == 0) return 0;
    const double pd = static_cast<double>(p);
    if (pd > y) {
      v *= -2;
    } else if (pd * pd > y) {
      return 0;
    }
  }
  return v;
}

}  // namespace

TEST_CASE("first negative fixtures") {
  const auto cm = forms::build_table(FormSpec::elliptic_curve(1, 0), 200, 200);
  const auto fn = signs::first_negative(cm, 200);
  CHECK(fn.n == 9u);
  CHECK(fn.prime == 13u);
  CHECK(cm.lambda(9) * 3.0 == doctest::Approx(-3.0));
  const auto delta = forms::level1_newform(12, 100);
  CHECK(signs::first_negative(delta, 100).n == 2u);
  const auto e4 = forms::build_table(FormSpec::eisenstein_e4(), 3000, 3000);
  const auto none = signs::first_negative(e4, 3000);
  CHECK_FALSE(none.n.has_value());
  CHECK_FALSE(none.prime.has_value());
  CHECK_THROWS_AS(signs::first_negative(delta, 101), coverage_error);
}

TEST_CASE("sign agreement fixtures") {
  const std::uint64_t x = 20000;
  const auto delta = forms::level1_newform(12, x);
  CHECK(signs::sign_agreement(delta, delta, x).density == 1.0);
  const auto s = signs::sign_sequence(delta, x);
  CHECK(signs::sign_agreement(s, signs::negated(s), x).density == 0.0);
  const auto cm = forms::build_table(FormSpec::elliptic_curve(1, 0), x, 2);
  CHECK(signs::sign_agreement(cm, delta, x).density >= 0.5);
  const auto w16 = forms::level1_newform(16, x);
  const auto a = signs::sign_agreement(delta, w16, x);
  CHECK(a.density > 0.42);
  CHECK(a.density < 0.58);
  CHECK(a.agreements + a.disagreements == a.total);
}

TEST_CASE("S(f, x) sums lambda over squarefree n <= x") {
  const auto t = forms::build_table(FormSpec::elliptic_curve(-1, 1), 500, 500);
  double s = 0.0;
  for (std::uint64_t n = 1; n <= 500; ++n) {
    bool squarefree = true;
    for (const auto& [p, e] : util::factorize(n)) squarefree = squarefree && e == 1;
    if (squarefree && !t.excluded(n)) s += t.lambda(n);
  }
  CHECK(signs::sum_S(t, 500) == doctest::Approx(s).epsilon(1e-12));
}

TEST_CASE("h_y at primes") {
  const signs::HyFunction h(100.0, std::uint64_t{6});
  CHECK(h.at_prime(2) == 0);
  CHECK(h.at_prime(7) == 1);
  CHECK(h.at_prime(11) == 0);
  CHECK(h.at_prime(97) == 0);
  CHECK(h.at_prime(101) == -2);
  CHECK(h(35) == 1);
  CHECK(h(49) == 0);
  CHECK(h(5 * 101) == -2);
}

TEST_CASE("h_sum counts squarefree smooth numbers at u = 1") {
  const auto r = signs::h_sum(100.0, 1.0, std::uint64_t{1});
  // squarefree n <= 100 built from 2, 3, 5, 7
  int count = 0;
  for (std::uint64_t n = 1; n <= 100; ++n) count += direct_h(100.0, n, 1) == 1;
  CHECK(count == 14);
  CHECK(r.total == 14);
  CHECK(r.smooth_count == 14);
  CHECK(r.large_prime_count == 0);
}

TEST_CASE("h_sum agrees with direct evaluation of h_y") {
  for (double y : {10.0, 37.5, 100.0, 1000.0, 5000.0}) {
    for (double u : {1.0, 1.1, 1.25, 1.5}) {
      for (std::uint64_t level : {1ULL, 6ULL, 35ULL}) {
        const auto r = signs::h_sum(y, u, level);
        std::int64_t direct = 0;
        for (std::uint64_t n = 1; n <= r.limit; ++n) direct += direct_h(y, n, level);
        CHECK(r.total == direct);
        CHECK(r.total == r.smooth_count - 2 * r.large_prime_count);
        CHECK(r.limit == signs::power_floor(y, u));
      }
    }
  }
  CHECK_THROWS(signs::h_sum(100.0, 1.6, std::uint64_t{1}));
  CHECK_THROWS_AS(signs::h_sum(1e6, 1.5, std::uint64_t{1}, 1000), budget_exceeded);
}

TEST_CASE("lower bound mechanics for E4") {
  const auto e4 = forms::build_table(FormSpec::eisenstein_e4(), 200, 200);
  const auto r = signs::verify_lower_bound_mechanics(e4, 50.0, 1.2);
  CHECK(r.applicable);
  CHECK(r.passed());
  const auto delta = forms::level1_newform(12, 500);
  const auto bad = signs::verify_lower_bound_mechanics(delta, 50.0, 1.2);
  CHECK_FALSE(bad.applicable);
  CHECK_FALSE(bad.reason.empty());
}

TEST_CASE("Sato-Tate histogram") {
  std::vector<double> theta;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double target = (i + 0.5) / n;
    double lo = 0.0, hi = std::numbers::pi;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (chebst::sato_tate_cdf(mid) < target ? lo : hi) = mid;
    }
    theta.push_back(0.5 * (lo + hi));
  }
  const auto h = signs::st_histogram(theta, 10);
  CHECK(h.samples == static_cast<std::uint64_t>(n));
  CHECK(h.discrepancy < 1e-4);
  CHECK(chebst::sato_tate_cdf(std::numbers::pi / 2) == doctest::Approx(0.5));
  const auto delta = forms::level1_newform(12, 100000);
  const auto d = signs::st_histogram(forms::theta_angles(delta), 100000, 20);
  CHECK(d.discrepancy < 0.05);
}

TEST_CASE("Rankin-Selberg partial sums") {
  const auto delta = forms::level1_newform(12, 20000);
  const auto self = signs::rs_partial_sums(delta, delta, 20000, 1.0);
  CHECK(self.cross == doctest::Approx(self.square));
  CHECK(self.square > 0.0);
  CHECK(self.primes == util::prime_count(20000));
  CHECK_THROWS(signs::rs_partial_sums(delta, delta, 20000, 0.5));
}

TEST_CASE("counterexample sequences") {
  for (const auto p : util::primes_up_to(3000)) {
    const double x = signs::counterexample_x(p), y = signs::counterexample_y(p);
    CHECK(x * y == 0.0);
    CHECK((std::abs(x * x) < 1e-12 || std::abs(x * x - 2.0) < 1e-12));
    if (p % 4 == 3 || p == 2) CHECK(x == 0.0);
  }
  const auto m = signs::counterexample_moments(200000);
  CHECK(m.max_abs_xy == 0.0);
  CHECK(std::abs(m.v_x[1]) < 0.02);
  CHECK(m.sixth_x == doctest::Approx(4.0).epsilon(0.02));
  CHECK(m.v_x[5] == doctest::Approx(-1.0).epsilon(0.03));
}
