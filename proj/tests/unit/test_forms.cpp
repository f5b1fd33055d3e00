#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "heckesign/forms/cache.hpp"
#include "heckesign/forms/coefficient_table.hpp"
#include "heckesign/forms/elliptic.hpp"
#include "heckesign/forms/form_spec.hpp"
#include "heckesign/forms/modular_forms.hpp"
#include "heckesign/forms/series.hpp"
#include "heckesign/util/errors.hpp"
#include "heckesign/util/primes.hpp"

using namespace heckesign;
using namespace heckesign::forms;

namespace {

std::vector<mpz_class> naive_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// q * prod (1 - q^n)^24 by repeated truncated multiplication.
std::vector<mpz_class> naive_delta(std::size_t n_max) {
  std::vector<mpz_class> prod(n_max, 0);
  prod[0] = 1;
  for (std::size_t n = 1; n < n_max; ++n) {
    for (int r = 0; r < 24; ++r) {
      for (std::size_t i = n_max - 1; i >= n; --i) prod[i] -= prod[i - n];
    }
  }
  std::vector<mpz_class> out(n_max + 1, 0);
  for (std::size_t i = 0; i < n_max; ++i) out[i + 1] = prod[i];
  return out;
}

mpz_class sigma(unsigned k, std::uint64_t n) {
  mpz_class s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      mpz_class t;
      mpz_ui_pow_ui(t.get_mpz_t(), d, k);
      s += t;
    }
  }
  return s;
}

std::int64_t brute_ap(std::int64_t a4, std::int64_t a6, std::int64_t p) {
  std::int64_t points = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t rhs = (((x * x % p) * x + a4 * x + a6) % p + p) % p;
    for (std::int64_t y = 0; y < p; ++y) {
      if (y * y % p == rhs) ++points;
    }
  }
  return p + 1 - points;
}

}  // namespace

TEST_CASE("delta matches the naive product expansion") {
  const std::size_t n = 300;
  const auto fast = delta_series(n);
  const auto slow = naive_delta(n);
  REQUIRE(fast.size() >= n + 1);
  for (std::size_t i = 1; i <= n; ++i) CHECK(fast[i] == slow[i]);
  CHECK(fast[1] == 1);
  CHECK(fast[2] == -24);
  CHECK(fast[3] == 252);
  CHECK(fast[11] == 534612);
}

TEST_CASE("tau satisfies the 691 congruence") {
  const auto d = delta_series(200);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    mpz_class diff = d[n] - sigma(11, n);
    CHECK(mpz_divisible_ui_p(diff.get_mpz_t(), 691) != 0);
  }
}

TEST_CASE("E4 is 240 sigma_3") {
  const auto e = eisenstein_e4(100);
  CHECK(e[0] == 1);
  CHECK(e[1] == 240);
  CHECK(e[2] == 2160);
  CHECK(e[4] == 17520);
  for (std::uint64_t n = 1; n <= 100; ++n) CHECK(e[n] == 240 * sigma(3, n));
}

TEST_CASE("level one newforms are Delta times Eisenstein powers") {
  const std::size_t n = 120;
  CHECK(level1_newform_series(12, n) == delta_series(n));
  const auto w16 = level1_newform_series(16, n);
  const auto expect = naive_mul(delta_series(n), eisenstein_e4(n));
  for (std::size_t i = 1; i <= n; ++i) CHECK(w16[i] == expect[i]);
  CHECK(w16[2] == 216);
  CHECK_THROWS(level1_newform_series(14, n));
}

TEST_CASE("modular series product agrees with schoolbook multiplication") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t len = 50 + 37 * static_cast<std::size_t>(trial);
    std::vector<mpz_class> a(len), b(len);
    for (auto& v : a) v = static_cast<long>(dist(rng));
    for (auto& v : b) v = static_cast<long>(dist(rng));
    const auto fast = (ModularSeries::from_integers(a) * ModularSeries::from_integers(b)).to_integers();
    CHECK(fast == naive_mul(a, b));
  }
}

TEST_CASE("ec_ap matches brute force projective point counts") {
  std::mt19937_64 rng(20);
  std::uniform_int_distribution<std::int64_t> coef(-50, 50);
  const auto primes = util::primes_up_to(101);
  int curves = 0;
  while (curves < 20) {
    const std::int64_t a4 = coef(rng), a6 = coef(rng);
    if (curve_discriminant(a4, a6) == 0) continue;
    ++curves;
    for (const auto p : primes) {
      if (p < 5 || curve_discriminant(a4, a6) % static_cast<std::int64_t>(p) == 0) continue;
      CHECK(ec_ap(a4, a6, p) == brute_ap(a4, a6, p));
    }
  }
}

TEST_CASE("CM curve fixtures") {
  CHECK(ec_ap(1, 0, 13) == -6);
  CHECK(ec_ap(1, 0, 3) == 0);
  const auto a5 = ec_ap(1, 0, 5);
  CHECK(a5 == brute_ap(1, 0, 5));
  CHECK(a5 * a5 <= 20);
  CHECK(a5 % 2 == 0);
  for (const auto p : util::primes_up_to(2000)) {
    if (p % 4 == 3) CHECK(ec_ap(1, 0, p) == 0);
  }
}

TEST_CASE("quadratic character agrees with the Legendre symbol") {
  for (std::uint32_t p : {3u, 5u, 101u, 997u}) {
    const QuadraticCharacter chi(p);
    for (std::uint32_t a = 0; a < p; ++a) CHECK(chi(a) == legendre_symbol(a, p));
    for (std::int64_t a4 : {-3, 1, 7}) CHECK(ec_ap(a4, 5, chi) == ec_ap(a4, 5, p));
  }
}

TEST_CASE("coefficient table invariants on random curves") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> coef(-200, 200);
  for (int c = 0; c < 8; ++c) {
    const std::int64_t a4 = coef(rng), a6 = coef(rng);
    if (curve_discriminant(a4, a6) == 0) continue;
    const auto t = build_table(FormSpec::elliptic_curve(a4, a6), 2000, 2000);
    for (const auto& pc : t.prime_coefficients()) {
      if (t.spec().is_excluded(pc.p)) continue;
      CHECK(pc.a * pc.a <= 4 * pc.p);
    }
    for (std::uint64_t m = 2; m <= 40; ++m) {
      for (std::uint64_t n = 2; m * n <= 2000; ++n) {
        if (std::gcd(m, n) != 1 || t.excluded(m) || t.excluded(n)) continue;
        CHECK(t.lambda(m * n) == doctest::Approx(t.lambda(m) * t.lambda(n)).epsilon(1e-12));
      }
    }
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      if (!t.excluded(n)) CHECK(std::abs(t.lambda(n)) <= divisor_count(n) + 1e-9);
    }
  }
}

TEST_CASE("theta angles of extreme coefficients") {
  const auto t = build_table(FormSpec::elliptic_curve(1, 0), 200, 2);
  const auto ang = theta_angles(t);
  CHECK(ang.at(3) == doctest::Approx(M_PI / 2));
  CHECK(ang.at(13) == doctest::Approx(std::acos(-6.0 / (2.0 * std::sqrt(13.0)))));
}

TEST_CASE("coverage errors") {
  const auto t = level1_newform(12, 50);
  CHECK_THROWS_AS(t.a_p(53), coverage_error);
  CHECK_THROWS_AS(t.lambda(51), coverage_error);
}

TEST_CASE("cache text round trip and header") {
  const auto spec = FormSpec::level1_newform(12);
  const auto t = build_table(spec, 500, 500);
  const auto text = format_cache(t);
  CHECK(text.rfind("# schema=coeffs-v1, label=mf_1_12, k=12, N=1\np,a_p\n2,-24\n", 0) == 0);
  const auto parsed = parse_cache(text);
  CHECK(parsed.label == "mf_1_12");
  CHECK(parsed.weight == 12);
  CHECK(parsed.level == 1);
  CHECK(parsed.max_prime() == 499);
  const auto back = table_from_cache(spec, parsed, 500, 500);
  CHECK(format_cache(back) == text);
  CHECK_THROWS(parse_cache("p,a_p\n2,1\n"));
  CHECK_THROWS(parse_cache("# schema=coeffs-v2, label=x, k=2, N=1\np,a_p\n"));
}

TEST_CASE("load_or_build writes then reuses the cache") {
  const auto dir = std::filesystem::temp_directory_path() / "heckesign-unit-cache";
  std::filesystem::remove_all(dir);
  const auto spec = FormSpec::elliptic_curve(-1, 1);
  const auto first = load_or_build(spec, 1000, 1000, dir);
  CHECK(std::filesystem::exists(cache_path(dir, spec.label)));
  const auto second = load_or_build(spec, 800, 800, dir);
  CHECK(second.a_p(797) == first.a_p(797));
  const auto bigger = load_or_build(spec, 3000, 3000, dir);
  CHECK(bigger.a_p(2999) == ec_ap(-1, 1, 2999));
  CHECK(read_cache(dir, spec.label)->max_prime() >= 2999);
  std::filesystem::remove_all(dir);
}
