#include "heckesign/lab/cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heckesign/chebst/bmv.hpp"
#include "heckesign/chebst/chebyshev.hpp"
#include "heckesign/chebst/poly_y.hpp"
#include "heckesign/forms/cache.hpp"
#include "heckesign/lab/experiments.hpp"
#include "heckesign/lab/selftest.hpp"
#include "heckesign/signs/distribution.hpp"
#include "heckesign/signs/sign_analytics.hpp"
#include "heckesign/signs/smooth_sums.hpp"
#include "heckesign/specfun/beta.hpp"
#include "heckesign/specfun/dickman.hpp"
#include "heckesign/util/errors.hpp"
#include "heckesign/util/parallel.hpp"

namespace heckesign::lab {

namespace {

struct Globals {
  std::string cache_dir;
  std::string out_path;
  std::string format = "json";
  unsigned threads = util::default_threads();
  std::uint64_t seed = 0;
  bool timing = false;

  RunContext context() const {
    RunContext ctx;
    ctx.threads = threads;
    ctx.seed = seed;
    if (!cache_dir.empty()) ctx.cache_dir = cache_dir;
    return ctx;
  }
};

class Sink {
 public:
  Sink(const Globals& g, std::ostream& fallback) : stream_(&fallback) {
    if (!g.out_path.empty()) {
      file_ = std::make_unique<std::ofstream>(g.out_path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open output file " + g.out_path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void emit(const Globals& g, std::ostream& out, std::ostream& err, const ExperimentReport& rep) {
  Sink sink(g, out);
  if (g.format == "csv") {
    write_csv(sink.get(), rep);
  } else {
    write_json(sink.get(), rep, g.timing);
  }
  if (g.timing) err << rep.experiment << ": " << rep.wall_clock_seconds << " s\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"heckesign: sign patterns of Hecke eigenvalues and the special functions behind them"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat `key = value` file; keys are long option names, subcommand keys as sub.key");
  Globals g;
  app.add_option("--cache-dir", g.cache_dir, "directory for coefficient caches (<label>.csv)");
  app.add_option("--out", g.out_path, "write output to this file instead of stdout");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", g.seed, "seed for sampled point sets");
  app.add_flag("--timing", g.timing, "report wall-clock time (adds it to JSON output)");
  app.fallthrough();

  auto* coeffs = app.add_subcommand("coeffs", "prime coefficients of a form (csv: cache format)");
  std::string form = "mf_1_12", other;
  std::uint64_t p_max = 1000, n_max = 0, x = 0;
  coeffs->add_option("--form", form, "mf_1_12 | mf_1_16 | mf_1_20 | eis_1_4 | ec_<a4>_<a6>");
  coeffs->add_option("--p-max", p_max);
  coeffs->add_option("--n-max", n_max);

  auto* signs_cmd = app.add_subcommand("signs", "first negative coefficient, S(f, x) and sign agreement");
  signs_cmd->add_option("--form", form);
  signs_cmd->add_option("--other", other, "second form for agreement and first sign difference");
  signs_cmd->add_option("--n-max", n_max, "scan bound (default 10000)");
  signs_cmd->add_option("--x", x, "prime bound for agreement and S(f, x) (default n-max)");

  auto* kappa_cmd = app.add_subcommand("kappa", "root of rho(2u) = 2 log u");
  double tol = 1e-10, rho_step = specfun::kDefaultRhoStep;
  kappa_cmd->add_option("--tol", tol);
  kappa_cmd->add_option("--step", rho_step, "Dickman grid step (1/2^j)");

  auto* beta_cmd = app.add_subcommand("beta", "beta solvers and the first zero of beta");
  int cap = 8, j_max = 8;
  double beta_step = specfun::kDefaultBetaStep, u_max = 2.0;
  std::string dump;
  beta_cmd->add_option("--cap", cap, "kernel cap M");
  beta_cmd->add_option("--step", beta_step);
  beta_cmd->add_option("--u-max", u_max);
  beta_cmd->add_option("--j-max", j_max, "series order");
  beta_cmd->add_option("--dump", dump, "write the Volterra solution as u,value CSV");

  auto* cheb_cmd = app.add_subcommand("cheb", "polynomial Y, Chebyshev orthonormality and the minorant contract");
  int L = 11, omega = 6;
  std::size_t points = 10000;
  cheb_cmd->add_option("--L", L, "odd degree");
  cheb_cmd->add_option("--omega", omega);
  cheb_cmd->add_option("--points", points, "sample tuples for the product inequality");

  auto* exp_cmd = app.add_subcommand("exp", "experiments over families of forms");
  std::string name;
  FamilyConfig fam;
  fam.a_bound = 10;
  fam.b_bound = 10;
  std::uint64_t z = 13, P = 1000;
  std::vector<std::uint64_t> flip;
  std::vector<std::string> form_list;
  int nu = 1, jj = 1;
  double b = 1.0;
  std::vector<double> ys{1e4, 1e6};
  int bins = 20;
  exp_cmd->add_option("name", name, "experiment")
      ->required()
      ->check(CLI::IsMember({"first-negative", "prescribed-signs", "pair-signs", "moment-sums", "mod2", "h-sum-ratio",
                             "counterexample", "sato-tate", "beta-trend"}));
  exp_cmd->add_option("--a-bound", fam.a_bound, "|a4| bound of the curve box");
  exp_cmd->add_option("--b-bound", fam.b_bound, "|a6| bound of the curve box");
  exp_cmd->add_option("--torsion-bound", fam.torsion_bound, "roots in [-T, T] for full 2-torsion curves");
  exp_cmd->add_option("--limit", fam.limit, "keep the first n family members");
  exp_cmd->add_option("--p-max", p_max);
  exp_cmd->add_option("--n-max", n_max);
  exp_cmd->add_option("--x", x);
  exp_cmd->add_option("--z", z);
  exp_cmd->add_option("--flip", flip, "primes whose prescribed sign is -");
  exp_cmd->add_option("--forms", form_list, "form labels for pair-signs");
  exp_cmd->add_option("--P", P);
  exp_cmd->add_option("--nu", nu);
  exp_cmd->add_option("--j", jj);
  exp_cmd->add_option("--b", b, "constant coefficient b_p");
  exp_cmd->add_option("--y", ys, "values of y for h-sum-ratio and beta-trend");
  exp_cmd->add_option("--form", form, "form for sato-tate");
  exp_cmd->add_option("--bins", bins);

  auto* selftest_cmd = app.add_subcommand("selftest", "fixture suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const RunContext ctx = g.context();
  try {
    if (*coeffs) {
      const auto spec = parse_form_label(form);
      const auto table = make_table(spec, p_max, n_max ? n_max : p_max, ctx);
      Sink sink(g, out);
      if (g.format == "csv") {
        sink.get() << forms::format_cache(table);
      } else {
        ExperimentReport rep;
        rep.experiment = "coeffs";
        rep.config = {{"form", spec.label}, {"p_max", p_max}, {"n_max", table.n_max()}};
        for (const auto& c : table.prime_coefficients()) {
          if (c.p > p_max) break;
          json r = {{"p", c.p}, {"a_p", c.a.get_str()}, {"excluded", spec.is_excluded(c.p)}};
          if (!spec.is_excluded(c.p)) r["lambda_p"] = table.lambda_p(c.p);
          rep.records.push_back(std::move(r));
        }
        write_json(sink.get(), rep);
      }
      return kExitOk;
    }
    if (*signs_cmd) {
      const std::uint64_t nm = n_max ? n_max : 10000;
      const std::uint64_t xx = x ? x : nm;
      const auto t1 = make_table(parse_form_label(form), std::max(nm, xx), std::max(nm, xx), ctx);
      ExperimentReport rep;
      rep.experiment = "signs";
      rep.config = {{"form", t1.spec().label}, {"n_max", nm}, {"x", xx}};
      const auto fn = signs::first_negative(t1, nm);
      json r = {{"form", t1.spec().label}, {"S_f_x", signs::sum_S(t1, xx)}};
      r["n_f"] = fn.n ? json(*fn.n) : json(nullptr);
      r["first_negative_prime"] = fn.prime ? json(*fn.prime) : json(nullptr);
      if (!other.empty()) {
        const auto t2 = make_table(parse_form_label(other), std::max(nm, xx), std::max(nm, xx), ctx);
        rep.config["other"] = t2.spec().label;
        const auto agree = signs::sign_agreement(t1, t2, xx);
        const auto diff = signs::first_sign_difference(t1, t2, nm);
        r["other"] = t2.spec().label;
        r["agreement"] = agree.density;
        r["disagreements"] = agree.disagreements;
        r["first_sign_difference"] = diff.n ? json(*diff.n) : json(nullptr);
        r["first_sign_difference_prime"] = diff.prime ? json(*diff.prime) : json(nullptr);
      }
      rep.records.push_back(std::move(r));
      emit(g, out, err, rep);
      return kExitOk;
    }
    if (*kappa_cmd) {
      const auto k = specfun::solve_kappa(tol, rho_step);
      const auto k2 = specfun::solve_kappa(tol, rho_step / 2.0);
      ExperimentReport rep;
      rep.experiment = "kappa";
      rep.config = {{"tol", tol}, {"step", rho_step}};
      rep.records.push_back({{"kappa", k.kappa},
                             {"residual", k.residual},
                             {"iterations", k.iterations},
                             {"kappa_half_step", k2.kappa},
                             {"exponent_1_over_2kappa", 1.0 / (2.0 * k.kappa)}});
      rep.verdicts = {{"residual_within_tol", k.residual <= tol},
                      {"above_10_9", k.kappa > 10.0 / 9.0},
                      {"above_cbrt_e_over_2", k.kappa > std::cbrt(std::exp(1.0) / 2.0)},
                      {"exponent_at_most_9_20", 1.0 / (2.0 * k.kappa) <= 9.0 / 20.0},
                      {"stable_under_half_step", std::abs(k.kappa - k2.kappa) <= 1e-8}};
      emit(g, out, err, rep);
      return kExitOk;
    }
    if (*beta_cmd) {
      const auto alpha = specfun::StepFunction::capped_alpha(cap);
      const auto volterra = specfun::beta_volterra(alpha, u_max, beta_step);
      if (!dump.empty()) {
        std::ofstream f(dump, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + dump);
        volterra.write_csv(f);
      }
      const double series_max = std::min(u_max, 1.2);
      const auto series = specfun::beta_series_grid(alpha, series_max, j_max);
      double gap = 0.0;
      for (int i = 0; i <= 20; ++i) {
        const double u = series_max * i / 20.0;
        gap = std::max(gap, std::abs(volterra.at(u) - series.at(u)));
      }
      const auto zero = specfun::beta_first_zero(alpha, beta_step, 0.0, u_max);
      const double residual = specfun::max_scaled_residual(volterra, alpha);
      ExperimentReport rep;
      rep.experiment = "beta";
      rep.config = {{"cap", cap}, {"step", beta_step}, {"u_max", u_max}, {"j_max", j_max}};
      rep.tolerances = {{"series_gap", 1e-4}, {"scaled_residual", 1e-6}};
      for (double u : {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0}) {
        if (u > u_max) break;
        json r = {{"u", u}, {"beta_volterra", volterra.at(u)}};
        if (u <= series_max) r["beta_series"] = series.at(u);
        rep.records.push_back(std::move(r));
      }
      rep.aggregate = {{"first_zero", to_json(zero)}, {"series_gap", gap}, {"max_scaled_residual", residual}};
      rep.verdicts = {{"series_agrees", gap <= 1e-4}, {"residual_small", residual <= 1e-6}};
      emit(g, out, err, rep);
      return kExitOk;
    }
    if (*cheb_cmd) {
      const auto y = chebst::poly_Y_suite();
      double gram = 0.0;
      for (int m = 0; m <= 20; ++m) {
        for (int n = m; n <= 20; ++n) {
          const double v = chebst::st_integrate([&](double t) { return chebst::x_eval(m, t) * chebst::x_eval(n, t); });
          gram = std::max(gram, std::abs(v - (m == n ? 1.0 : 0.0)));
        }
      }
      const auto pair = chebst::MinorantPair::standard(L);
      const auto product = chebst::product_minorant_eval(pair, chebst::minorant_test_points(omega, points, g.seed));
      ExperimentReport rep;
      rep.experiment = "cheb";
      rep.config = {{"L", L}, {"omega", omega}, {"points", points}, {"seed", g.seed}};
      rep.records.push_back({{"check", "polynomial_Y"}, {"passed", y.passed()}, {"value", y.alpha0_digits}});
      rep.records.push_back({{"check", "gram_deviation"}, {"passed", gram <= 1e-10}, {"value", gram}});
      rep.records.push_back({{"check", "minorant_contract"}, {"passed", pair.report().all_passed()}, {"value", L}});
      rep.records.push_back({{"check", "product_minorant_violations"},
                             {"passed", product.violations == 0},
                             {"value", product.violations}});
      rep.aggregate = {{"polynomial_Y", to_json(y)},
                       {"contract", to_json(pair.report())},
                       {"alpha_L_st_integral", pair.a().st_integral()},
                       {"delta_lower", chebst::delta_lower(L, omega, pair.a().st_integral())}};
      rep.verdicts = {{"polynomial_Y", y.passed()},
                      {"gram", gram <= 1e-10},
                      {"contract", pair.report().all_passed()},
                      {"product_minorant", product.violations == 0}};
      emit(g, out, err, rep);
      return kExitOk;
    }
    if (*exp_cmd) {
      ExperimentReport rep;
      if (name == "first-negative") {
        rep = exp_first_negative(family_generate(fam), p_max, n_max ? n_max : p_max, ctx);
      } else if (name == "prescribed-signs") {
        std::map<std::uint64_t, int> eps;
        for (const auto p : flip) eps[p] = -1;
        rep = exp_prescribed_signs(family_generate(fam), z, eps, ctx);
      } else if (name == "pair-signs") {
        if (form_list.empty()) form_list = {"mf_1_12", "mf_1_16", "mf_1_20", "ec_1_0", "ec_-1_1"};
        const std::uint64_t xx = x ? x : 100000;
        std::vector<forms::FormSpec> specs;
        for (const auto& f : form_list) specs.push_back(parse_form_label(f));
        auto tables = util::parallel_map(specs.size(), g.threads,
                                         [&](std::size_t i) { return make_table(specs[i], xx, 2, ctx); });
        rep = exp_pair_signs(tables, xx, ctx);
      } else if (name == "moment-sums") {
        rep = exp_moment_sums(family_generate(fam), P, nu, jj, b, ctx);
      } else if (name == "mod2") {
        FamilyConfig tf = fam;
        tf.box = false;
        tf.torsion = true;
        if (tf.torsion_bound == 0) tf.torsion_bound = 4;
        rep = exp_mod2(family_generate(tf), p_max, ctx);
      } else if (name == "h-sum-ratio") {
        const specfun::DickmanRho rho(3.0);
        rep.experiment = "h-sum-ratio";
        rep.config = {{"y", ys}, {"u", 1.0}, {"N", 1}};
        for (double y : ys) {
          const auto h = signs::h_sum(y, 1.0, std::uint64_t{1});
          const double main = specfun::lm_h_main_term(y, 1.0, 1, rho);
          rep.records.push_back({{"y", y}, {"h_sum", h.total}, {"main_term", main}, {"ratio", h.total / main}});
        }
      } else if (name == "counterexample") {
        const std::uint64_t xx = x ? x : 1000000;
        const auto m = signs::counterexample_moments(xx);
        rep.experiment = "counterexample";
        rep.config = {{"x", xx}};
        for (std::size_t k = 0; k < m.v_x.size(); ++k) {
          rep.records.push_back({{"k", k + 1}, {"V_k_x", m.v_x[k]}, {"V_k_y", m.v_y[k]}});
        }
        rep.aggregate = {{"primes", m.prime_count}, {"sixth_moment_x", m.sixth_x}, {"sixth_moment_y", m.sixth_y},
                         {"max_abs_xy", m.max_abs_xy}};
        rep.verdicts = {{"xy_vanishes", m.max_abs_xy == 0.0}};
      } else if (name == "sato-tate") {
        const std::uint64_t xx = x ? x : 100000;
        const auto table = make_table(parse_form_label(form), xx, 2, ctx);
        const auto hist = signs::st_histogram(forms::theta_angles(table), xx, bins);
        rep.experiment = "sato-tate";
        rep.config = {{"form", table.spec().label}, {"x", xx}, {"bins", bins}};
        for (int i = 0; i < bins; ++i) {
          const double lo = std::numbers::pi * i / bins, hi = std::numbers::pi * (i + 1) / bins;
          rep.records.push_back({{"bin_lo", lo},
                                 {"count", hist.counts[static_cast<std::size_t>(i)]},
                                 {"expected", (chebst::sato_tate_cdf(hi) - chebst::sato_tate_cdf(lo)) * hist.samples}});
        }
        rep.aggregate = {{"samples", hist.samples}, {"discrepancy", hist.discrepancy}};
      } else if (name == "beta-trend") {
        const auto alpha = specfun::StepFunction::capped_alpha(8);
        const auto zero = specfun::beta_first_zero(alpha);
        rep.experiment = "beta-trend";
        rep.config = {{"y", ys}, {"cap", 8}};
        for (double y : ys) {
          const auto s = specfun::empirical_sign_change(y, alpha);
          json r = {{"y", y}, {"limit", s.limit}};
          r["first_negative_n"] = s.n ? json(*s.n) : json(nullptr);
          r["u"] = s.n ? json(s.u) : json(nullptr);
          rep.records.push_back(std::move(r));
        }
        rep.aggregate = {{"first_zero", to_json(zero)}};
      }
      emit(g, out, err, rep);
      return kExitOk;
    }
    if (*selftest_cmd) {
      const auto checks = run_selftest(g.threads);
      ExperimentReport rep;
      rep.experiment = "selftest";
      for (const auto& c : checks) {
        rep.records.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        rep.verdicts[c.name] = c.passed;
      }
      emit(g, out, err, rep);
      for (const auto& c : checks) {
        err << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
      }
      return rep.passed() ? kExitOk : kExitInvariant;
    }
  } catch (const invariant_violation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace heckesign::lab
