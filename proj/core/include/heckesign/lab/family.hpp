#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "heckesign/forms/form_spec.hpp"

namespace heckesign::lab {

/// Elliptic-curve families: the box |a4| <= A, |a6| <= B in lexicographic
/// order, and/or the curves y^2 = (x-a)(x-b)(x-c) for a < b < c in
/// [-T, T], taken to short Weierstrass form and deduplicated.
struct FamilyConfig {
  std::int64_t a_bound = 0;
  std::int64_t b_bound = 0;
  bool box = true;
  bool torsion = false;
  std::int64_t torsion_bound = 0;
  std::uint64_t p_max = 1000;
  std::uint64_t seed = 0;
  std::size_t limit = 0;  // 0 keeps every member
};

/// Short model (a4, a6) of y^2 = (x-a)(x-b)(x-c). With s = a+b+c the roots
/// are shifted by s/3 when 3 | s and otherwise mapped to 9a - 3s.
std::pair<std::int64_t, std::int64_t> two_torsion_short_form(std::int64_t a, std::int64_t b, std::int64_t c);

/// Deterministic enumeration; singular pairs are skipped. May be empty.
std::vector<forms::FormSpec> family_generate(const FamilyConfig& config);

/// Parses "mf_1_<k>", "eis_1_4" or "ec_<a4>_<a6>". Throws std::invalid_argument.
forms::FormSpec parse_form_label(const std::string& label);

/// Curves with j = 0 or 1728 (a4 = 0 or a6 = 0) have complex multiplication.
bool has_cm(const forms::FormSpec& spec);

}  // namespace heckesign::lab
