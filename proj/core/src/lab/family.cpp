#include "heckesign/lab/family.hpp"

#include <set>
#include <stdexcept>

namespace heckesign::lab {

using forms::FormSpec;

std::pair<std::int64_t, std::int64_t> two_torsion_short_form(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == b || b == c || a == c) throw std::invalid_argument("two_torsion_short_form: roots must be distinct");
  const std::int64_t s = a + b + c;
  std::int64_t r[3];
  if (s % 3 == 0) {
    r[0] = a - s / 3;
    r[1] = b - s / 3;
    r[2] = c - s / 3;
  } else {
    r[0] = 9 * a - 3 * s;
    r[1] = 9 * b - 3 * s;
    r[2] = 9 * c - 3 * s;
  }
  return {r[0] * r[1] + r[0] * r[2] + r[1] * r[2], -r[0] * r[1] * r[2]};
}

std::vector<FormSpec> family_generate(const FamilyConfig& config) {
  if (config.a_bound < 0 || config.b_bound < 0 || config.torsion_bound < 0) {
    throw std::invalid_argument("family_generate: bounds must be nonnegative");
  }
  std::vector<FormSpec> out;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  auto add = [&](std::int64_t a4, std::int64_t a6) {
    if (forms::curve_discriminant(a4, a6) == 0) return;
    if (!seen.insert({a4, a6}).second) return;
    out.push_back(FormSpec::elliptic_curve(a4, a6));
  };
  if (config.box) {
    for (std::int64_t a4 = -config.a_bound; a4 <= config.a_bound; ++a4) {
      for (std::int64_t a6 = -config.b_bound; a6 <= config.b_bound; ++a6) add(a4, a6);
    }
  }
  if (config.torsion) {
    const std::int64_t t = config.torsion_bound;
    for (std::int64_t a = -t; a <= t; ++a) {
      for (std::int64_t b = a + 1; b <= t; ++b) {
        for (std::int64_t c = b + 1; c <= t; ++c) {
          const auto [a4, a6] = two_torsion_short_form(a, b, c);
          add(a4, a6);
        }
      }
    }
  }
  if (config.limit > 0 && out.size() > config.limit) out.resize(config.limit);
  return out;
}

FormSpec parse_form_label(const std::string& label) {
  auto fail = [&] { return std::invalid_argument("unknown form label '" + label + "'"); };
  if (label == "eis_1_4") return FormSpec::eisenstein_e4();
  if (label.rfind("mf_1_", 0) == 0) {
    const std::string w = label.substr(5);
    if (w == "12" || w == "16" || w == "20") return FormSpec::level1_newform(std::stoi(w));
    throw fail();
  }
  if (label.rfind("ec_", 0) == 0) {
    const std::string rest = label.substr(3);
    const auto sep = rest.find('_', 1);
    if (sep == std::string::npos) throw fail();
    try {
      std::size_t used_a = 0, used_b = 0;
      const std::string sa = rest.substr(0, sep), sb = rest.substr(sep + 1);
      const std::int64_t a4 = std::stoll(sa, &used_a);
      const std::int64_t a6 = std::stoll(sb, &used_b);
      if (used_a != sa.size() || used_b != sb.size()) throw fail();
      return FormSpec::elliptic_curve(a4, a6);
    } catch (const std::logic_error&) {
      throw fail();
    }
  }
  throw fail();
}

bool has_cm(const FormSpec& spec) {
  return spec.kind == forms::FormKind::elliptic_curve && (spec.a4 == 0 || spec.a6 == 0);
}

}  // namespace heckesign::lab
