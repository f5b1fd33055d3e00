#include "heckesign/lab/selftest.hpp"

#include <cmath>
#include <exception>
#include <filesystem>
#include <functional>
#include <numbers>
#include <sstream>

#include "heckesign/chebst/bmv.hpp"
#include "heckesign/chebst/chebyshev.hpp"
#include "heckesign/chebst/poly_y.hpp"
#include "heckesign/forms/cache.hpp"
#include "heckesign/forms/modular_forms.hpp"
#include "heckesign/lab/experiments.hpp"
#include "heckesign/signs/sign_analytics.hpp"
#include "heckesign/signs/smooth_sums.hpp"
#include "heckesign/specfun/dickman.hpp"

namespace heckesign::lab {

namespace {

SelfCheck run(const std::string& name, const std::function<std::string(bool&)>& body) {
  SelfCheck c{name, false, ""};
  try {
    c.detail = body(c.passed);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

template <class T>
std::string show(const T& v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

}  // namespace

std::vector<SelfCheck> run_selftest(unsigned threads) {
  using forms::FormSpec;
  std::vector<SelfCheck> out;

  out.push_back(run("delta_fixtures", [](bool& ok) {
    const auto t = forms::level1_newform(12, 100);
    const auto fn = signs::first_negative(t, 100);
    ok = t.a_p(2) == -24 && fn.n == 2u;
    return "a(2) = " + t.a_p(2).get_str() + ", n_f = " + show(fn.n.value_or(0));
  }));
  out.push_back(run("cm_curve_fixtures", [](bool& ok) {
    const auto t = forms::build_table(FormSpec::elliptic_curve(1, 0), 100, 100);
    const auto fn = signs::first_negative(t, 100);
    const double a9 = t.lambda(9) * 3.0;
    ok = t.a_p(13) == -6 && std::abs(a9 + 3.0) < 1e-12 && fn.n == 9u && fn.prime == 13u;
    return "a(9) = " + show(a9) + ", a(13) = " + t.a_p(13).get_str() + ", n_f = " + show(fn.n.value_or(0)) +
           ", first negative prime = " + show(fn.prime.value_or(0));
  }));
  out.push_back(run("eisenstein_e4", [](bool& ok) {
    const auto e = forms::eisenstein_e4(4);
    const auto t = forms::build_table(FormSpec::eisenstein_e4(), 1000, 1000);
    const auto fn = signs::first_negative(t, 1000);
    ok = e[1] == 240 && e[2] == 2160 && e[4] == 17520 && !fn.n && !fn.prime;
    return "240 sigma_3 at 1, 2, 4; no negative coefficient up to 1000";
  }));
  out.push_back(run("weight16_a2", [](bool& ok) {
    const auto t = forms::level1_newform(16, 10);
    ok = t.a_p(2) == 216;
    return "a(2) = " + t.a_p(2).get_str();
  }));
  out.push_back(run("kappa", [](bool& ok) {
    const auto k = specfun::solve_kappa(1e-10);
    ok = k.residual <= 1e-10 && k.kappa > 10.0 / 9.0 && k.kappa > std::cbrt(std::exp(1.0) / 2.0) &&
         1.0 / (2.0 * k.kappa) <= 9.0 / 20.0;
    return "kappa = " + show(k.kappa) + ", residual = " + show(k.residual);
  }));
  out.push_back(run("polynomial_Y", [](bool& ok) {
    const auto r = chebst::poly_Y_suite();
    ok = r.passed();
    return "alpha0 = " + r.alpha0_digits + " (" + show(r.matching_digits) + " digits)";
  }));
  out.push_back(run("chebyshev_gram", [](bool& ok) {
    double worst = 0.0;
    for (int m = 0; m <= 20; ++m) {
      for (int n = m; n <= 20; ++n) {
        const double g = chebst::st_integrate([&](double t) { return chebst::x_eval(m, t) * chebst::x_eval(n, t); });
        worst = std::max(worst, std::abs(g - (m == n ? 1.0 : 0.0)));
      }
    }
    ok = worst <= 1e-10;
    return "max deviation " + show(worst);
  }));
  out.push_back(run("beta_L_integral", [](bool& ok) {
    double worst = 0.0;
    for (int L : {3, 5, 11, 101}) {
      const auto b = chebst::bmv_beta_L_poly(L);
      const double q = chebst::st_integrate([&](double t) { return b(t / std::numbers::pi); });
      worst = std::max(worst, std::abs(q - chebst::bmv_beta_L_st_integral(L)));
    }
    ok = worst <= 1e-10;
    return "max deviation " + show(worst);
  }));
  out.push_back(run("minorant_contract", [](bool& ok) {
    const auto pair = chebst::MinorantPair::standard(11);
    ok = pair.report().all_passed();
    return "L = 11";
  }));
  out.push_back(run("h_sum_count", [](bool& ok) {
    const auto h = signs::h_sum(100.0, 1.0, std::uint64_t{1});
    ok = h.total == 14 && h.smooth_count == 14 && h.large_prime_count == 0;
    return "sum = " + show(h.total);
  }));
  out.push_back(run("cache_round_trip", [](bool& ok) {
    const auto dir = std::filesystem::temp_directory_path() / "heckesign-selftest-cache";
    std::filesystem::remove_all(dir);
    const auto spec = FormSpec::elliptic_curve(-1, 1);
    const auto built = forms::build_table(spec, 2000, 2000);
    forms::write_cache(dir, built);
    const auto loaded = forms::table_from_cache(spec, *forms::read_cache(dir, spec.label), 2000, 2000);
    ok = built.prime_coefficients().size() == loaded.prime_coefficients().size();
    for (std::size_t i = 0; ok && i < built.prime_coefficients().size(); ++i) {
      ok = built.prime_coefficients()[i].p == loaded.prime_coefficients()[i].p &&
           built.prime_coefficients()[i].a == loaded.prime_coefficients()[i].a;
    }
    ok = ok && forms::format_cache(built) == forms::format_cache(loaded);
    std::filesystem::remove_all(dir);
    return show(built.prime_coefficients().size()) + " primes";
  }));
  out.push_back(run("thread_determinism", [threads](bool& ok) {
    FamilyConfig cfg;
    cfg.a_bound = 3;
    cfg.b_bound = 3;
    const auto family = family_generate(cfg);
    RunContext one, many;
    many.threads = std::max(2u, threads);
    const auto a = exp_first_negative(family, 500, 500, one).to_json().dump();
    const auto b = exp_first_negative(family, 500, 500, many).to_json().dump();
    ok = a == b;
    return show(family.size()) + " curves, " + show(many.threads) + " threads";
  }));
  return out;
}

}  // namespace heckesign::lab
