#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "heckesign/forms/coefficient_table.hpp"
#include "heckesign/lab/cli.hpp"
#include "heckesign/lab/experiments.hpp"
#include "heckesign/lab/family.hpp"
#include "heckesign/lab/report.hpp"
#include "heckesign/util/errors.hpp"

using namespace heckesign;
using namespace heckesign::lab;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "heckesign");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("family generation") {
  FamilyConfig empty;
  CHECK(family_generate(empty).empty());
  FamilyConfig small;
  small.a_bound = 1;
  small.b_bound = 1;
  const auto f = family_generate(small);
  CHECK(f.size() == 8);
  CHECK(f.front().label == "ec_-1_-1");
  CHECK(family_generate(small) == f);
  small.limit = 3;
  CHECK(family_generate(small).size() == 3);
  CHECK(two_torsion_short_form(0, 1, 2) == std::pair<std::int64_t, std::int64_t>{-1, 0});
  FamilyConfig torsion;
  torsion.box = false;
  torsion.torsion = true;
  torsion.torsion_bound = 2;
  for (const auto& s : family_generate(torsion)) CHECK(forms::curve_discriminant(s.a4, s.a6) != 0);
}

TEST_CASE("form labels") {
  CHECK(parse_form_label("mf_1_16").weight == 16);
  CHECK(parse_form_label("eis_1_4").kind == forms::FormKind::eisenstein_e4);
  const auto e = parse_form_label("ec_-3_7");
  CHECK(e.a4 == -3);
  CHECK(e.a6 == 7);
  CHECK(has_cm(parse_form_label("ec_1_0")));
  CHECK_FALSE(has_cm(e));
  CHECK_THROWS(parse_form_label("mf_2_12"));
  CHECK_THROWS(parse_form_label("ec_0_0"));
}

TEST_CASE("first negative experiment") {
  const RunContext ctx;
  const auto rep = exp_first_negative({forms::FormSpec::level1_newform(12)}, 100, 100, ctx);
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0].at("n_f") == 2);
  CHECK(rep.verdicts.at("median_at_least_2") == true);
  CHECK_THROWS(exp_first_negative({}, 100, 100, ctx));
}

TEST_CASE("prescribed signs experiment") {
  RunContext ctx;
  FamilyConfig cfg;
  cfg.a_bound = 20;
  cfg.b_bound = 20;
  const auto family = family_generate(cfg);
  const auto trivial = exp_prescribed_signs(family, 1, {}, ctx);
  CHECK(trivial.aggregate.at("relaxed_fraction") == 1.0);
  const auto r3 = exp_prescribed_signs(family, 3, {}, ctx);
  CHECK(r3.aggregate.at("relaxed_fraction").get<double>() >= r3.aggregate.at("strict_fraction").get<double>());
  CHECK(r3.config.at("z") == 3);
  CHECK_THROWS(exp_prescribed_signs(family, 23, {}, ctx));
}

TEST_CASE("pair signs flags nothing for distinct non-CM forms") {
  const RunContext ctx;
  const std::uint64_t x = 20000;
  std::vector<forms::CoefficientTable> tables{forms::level1_newform(12, x), forms::level1_newform(16, x),
                                              forms::build_table(forms::FormSpec::elliptic_curve(1, 0), x, 2)};
  const auto rep = exp_pair_signs(tables, x, ctx);
  CHECK(rep.records.size() == 3);
  CHECK(rep.verdicts.at("no_flagged_non_cm_pair") == true);
}

TEST_CASE("moment sums") {
  const RunContext ctx;
  const std::vector<forms::FormSpec> one{forms::FormSpec::elliptic_curve(-1, 1)};
  const auto rep = exp_moment_sums(one, 200, 1, 1, 1.0, ctx);
  const auto t = forms::build_table(one[0], 400, 2);
  double s = 0.0;
  for (const auto p : t.included_primes(400)) {
    if (p > 200) s += t.lambda_p(p) / static_cast<double>(p);
  }
  CHECK(rep.aggregate.at("moment").get<double>() == doctest::Approx(s * s).epsilon(1e-12));
}

TEST_CASE("mod 2 experiment on torsion curves") {
  FamilyConfig cfg;
  cfg.box = false;
  cfg.torsion = true;
  cfg.torsion_bound = 3;
  const auto rep = exp_mod2(family_generate(cfg), 3000, RunContext{});
  CHECK(rep.aggregate.at("violations") == 0);
  CHECK_THROWS_AS(exp_mod2({forms::FormSpec::elliptic_curve(-1, 1)}, 100, RunContext{}), invariant_violation);
}

TEST_CASE("report serialization") {
  ExperimentReport rep;
  rep.experiment = "demo";
  rep.config = {{"x", 10}};
  rep.records = {{{"label", "a"}, {"v", 0.1}}, {{"label", "b, c"}, {"w", 2}}};
  rep.verdicts = {{"ok", true}};
  rep.wall_clock_seconds = 3.0;
  const auto j = rep.to_json();
  for (const char* key : {"experiment", "config", "records", "aggregate", "verdicts", "tolerances"}) {
    CHECK(j.contains(key));
  }
  CHECK_FALSE(j.contains("wall_clock_seconds"));
  CHECK(rep.to_json(true).contains("wall_clock_seconds"));
  std::ostringstream csv;
  write_csv(csv, rep);
  CHECK(csv.str() == "label,v,w\na,0.10000000000000001,\n\"b, c\",,2\n");
  CHECK(rep.passed());
}

TEST_CASE("cli exit codes") {
  CHECK(cli({"--bogus", "kappa"}).code == 2);
  const auto unknown = cli({"kappa", "--nope"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"--format", "xml", "kappa"}).code == 2);
  CHECK(cli({"coeffs", "--form", "mf_1_14"}).code == 2);
  CHECK(cli({"exp", "mod2", "--torsion-bound", "3", "--p-max", "200"}).code == 0);
  CHECK(cli({"exp", "unknown-experiment"}).code == 2);
}

TEST_CASE("cli kappa and coeffs output") {
  const auto k = cli({"kappa", "--tol", "1e-10"});
  REQUIRE(k.code == 0);
  const auto j = json::parse(k.out);
  CHECK(j.at("experiment") == "kappa");
  CHECK(j.at("records")[0].at("kappa").get<double>() == doctest::Approx(1.11171092585));
  const auto c = cli({"coeffs", "--form", "ec_1_0", "--p-max", "13", "--format", "csv"});
  CHECK(c.out == "# schema=coeffs-v1, label=ec_1_0, k=2, N=2\np,a_p\n3,0\n5,2\n7,0\n11,0\n13,-6\n");
}

TEST_CASE("cli config file, output file and thread independence") {
  const auto dir = std::filesystem::temp_directory_path() / "heckesign-cli-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream cfg(dir / "run.ini");
    cfg << "format = csv\nthreads = 1\n[exp]\na-bound = 4\nb-bound = 4\np-max = 500\n";
  }
  const auto out1 = (dir / "one.csv").string(), out2 = (dir / "two.csv").string();
  CHECK(cli({"--config", (dir / "run.ini").string(), "--out", out1, "exp", "first-negative"}).code == 0);
  CHECK(cli({"--config", (dir / "run.ini").string(), "--threads", "3", "--out", out2, "--cache-dir",
             (dir / "cache").string(), "exp", "first-negative"})
            .code == 0);
  auto slurp = [](const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  CHECK(!slurp(out1).empty());
  CHECK(slurp(out1) == slurp(out2));
  CHECK(std::filesystem::exists(dir / "cache" / "ec_-4_-4.csv"));
  std::filesystem::remove_all(dir);
}
