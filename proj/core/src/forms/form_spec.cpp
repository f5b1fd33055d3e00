#include "heckesign/forms/form_spec.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "heckesign/util/primes.hpp"

namespace heckesign::forms {

std::string to_string(FormKind kind) {
  switch (kind) {
    case FormKind::level1_newform:
      return "level1_newform";
    case FormKind::elliptic_curve:
      return "elliptic_curve";
    case FormKind::eisenstein_e4:
      return "eisenstein_e4";
  }
  return "unknown";
}

std::int64_t curve_discriminant(std::int64_t a4, std::int64_t a6) {
  const __int128 d = __int128{4} * a4 * a4 * a4 + __int128{27} * a6 * a6;
  if (d > std::numeric_limits<std::int64_t>::max() || d < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("curve discriminant exceeds 64 bits");
  }
  return static_cast<std::int64_t>(d);
}

FormSpec FormSpec::level1_newform(int weight) {
  if (weight != 12 && weight != 16 && weight != 20) {
    throw std::invalid_argument("level-1 newforms are available for weights 12, 16, 20");
  }
  FormSpec s;
  s.kind = FormKind::level1_newform;
  s.weight = weight;
  s.level = 1;
  s.label = "mf_1_" + std::to_string(weight);
  return s;
}

FormSpec FormSpec::elliptic_curve(std::int64_t a4, std::int64_t a6) {
  const std::int64_t disc = curve_discriminant(a4, a6);
  if (disc == 0) throw std::invalid_argument("singular curve: 4*a4^3 + 27*a6^2 = 0");
  FormSpec s;
  s.kind = FormKind::elliptic_curve;
  s.weight = 2;
  s.a4 = a4;
  s.a6 = a6;
  s.excluded_primes.push_back(2);
  const std::uint64_t magnitude = disc < 0 ? static_cast<std::uint64_t>(-(disc + 1)) + 1 : static_cast<std::uint64_t>(disc);
  for (const auto& [p, e] : util::factorize(magnitude)) {
    if (p != 2) s.excluded_primes.push_back(p);
  }
  std::sort(s.excluded_primes.begin(), s.excluded_primes.end());
  s.level = 1;
  for (const auto p : s.excluded_primes) {
    if (s.level > std::numeric_limits<std::uint64_t>::max() / p) throw std::overflow_error("level proxy overflow");
    s.level *= p;
  }
  s.label = "ec_" + std::to_string(a4) + "_" + std::to_string(a6);
  return s;
}

FormSpec FormSpec::eisenstein_e4() {
  FormSpec s;
  s.kind = FormKind::eisenstein_e4;
  s.weight = 4;
  s.level = 1;
  s.label = "eis_1_4";
  return s;
}

std::uint64_t FormSpec::analytic_conductor() const {
  return static_cast<std::uint64_t>(weight) * static_cast<std::uint64_t>(weight) * level;
}

bool FormSpec::is_excluded(std::uint64_t p) const {
  return std::binary_search(excluded_primes.begin(), excluded_primes.end(), p);
}

}  // namespace heckesign::forms
