#include "heckesign/lab/report.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace heckesign::lab {

bool ExperimentReport::passed() const {
  for (const auto& [name, v] : verdicts.items()) {
    if (!v.is_boolean() || !v.get<bool>()) return false;
  }
  return true;
}

json ExperimentReport::to_json(bool with_timing) const {
  json j;
  j["experiment"] = experiment;
  j["version"] = kVersion;
  j["config"] = config;
  j["tolerances"] = tolerances;
  j["records"] = records;
  j["aggregate"] = aggregate;
  j["verdicts"] = verdicts;
  if (with_timing) j["wall_clock_seconds"] = wall_clock_seconds;
  return j;
}

void write_json(std::ostream& out, const ExperimentReport& report, bool with_timing) {
  out << report.to_json(with_timing).dump(2) << '\n';
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) return format_number(v.get<double>());
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return s;
}

}  // namespace

void write_csv(std::ostream& out, const ExperimentReport& report) {
  std::set<std::string> keys;
  for (const auto& r : report.records) {
    for (const auto& [k, v] : r.items()) keys.insert(k);
  }
  bool first = true;
  for (const auto& k : keys) {
    out << (first ? "" : ",") << k;
    first = false;
  }
  out << '\n';
  for (const auto& r : report.records) {
    first = true;
    for (const auto& k : keys) {
      out << (first ? "" : ",");
      first = false;
      if (r.contains(k)) out << csv_cell(r.at(k));
    }
    out << '\n';
  }
}

json to_json(const chebst::ContractReport& report) {
  json j;
  j["L"] = report.L;
  j["grid_size"] = report.grid_size;
  j["passed"] = report.all_passed();
  json props = json::object();
  for (const auto& p : report.properties) {
    props[p.name] = {{"passed", p.passed}, {"witness", p.witness}, {"margin", p.margin}};
  }
  j["properties"] = props;
  return j;
}

json to_json(const chebst::PolyYReport& r) {
  json j;
  j["identity_exact"] = r.identity_exact;
  j["chebyshev_form"] = r.chebyshev_form;
  j["monomial_form"] = r.monomial_form;
  j["alpha0"] = r.alpha0;
  j["alpha0_digits"] = r.alpha0_digits;
  j["alpha0_matching_digits"] = r.matching_digits;
  j["alpha0_bracket"] = {r.alpha0_lo.get_d(), r.alpha0_hi.get_d()};
  j["grid_points"] = r.grid_points;
  j["nonpositive_inside"] = {{"passed", r.nonpositive_inside}, {"max", r.inside_max}};
  j["at_most_one"] = {{"passed", r.at_most_one}, {"max", r.overall_max_on_grid}};
  j["max_on_0_2"] = {{"value", r.max_value}, {"at", r.argmax}};
  j["Y_at_2"] = {{"value", r.y_at_2.get_str()}, {"passed", r.y_at_2_exact}};
  j["beta0"] = {{"value", r.beta0.get_str()}, {"passed", r.beta0_exceeds_half}};
  j["passed"] = r.passed();
  return j;
}

json to_json(const specfun::FirstZeroReport& r) {
  json j;
  j["found"] = r.found;
  j["h"] = r.h;
  if (r.cap) j["cap"] = *r.cap;
  j["beta_min"] = r.beta_min;
  j["beta_min_at"] = r.beta_min_at;
  if (r.found) {
    j["u0"] = r.u0;
    j["u0_half_step"] = r.u0_half_step;
    if (r.u0_cap_plus4) j["u0_cap_plus4"] = *r.u0_cap_plus4;
    j["error_bar"] = r.error_bar;
    j["positive_before"] = r.positive_before;
  }
  return j;
}

}  // namespace heckesign::lab
