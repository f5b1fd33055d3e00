#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>

#include "heckesign/chebst/chebyshev.hpp"

namespace heckesign::chebst {

/// Y = 13/24 + (1/4) U_2 - (1/4) U_4 + (136/1000) U_6 with exact coefficients.
ChebyshevExpansion polynomial_Y();
/// (17/125) x^6 - (93/100) x^4 + (227/125) x^2 - 283/3000.
RationalPolynomial polynomial_Y_monomial();

inline constexpr const char* kAlpha0Reference = "0.23107202470801418176315245050693402580";

struct PolyYReport {
  bool identity_exact = false;
  std::string chebyshev_form;
  std::string monomial_form;

  double alpha0 = 0.0;
  std::string alpha0_digits;      // 30 decimals from the rational bracket
  int matching_digits = 0;        // agreement with the reference decimals
  mpq_class alpha0_lo, alpha0_hi; // Y(lo) < 0 < Y(hi)

  std::size_t grid_points = 0;
  bool nonpositive_inside = false;  // Y <= 0 on the grid of [-lo, lo]
  double inside_max = 0.0;
  bool at_most_one = false;         // Y <= 1 on the grid of [-2, 2]
  double overall_max_on_grid = 0.0;

  double max_value = 0.0;  // max of Y on [0, 2]
  double argmax = 0.0;

  mpq_class y_at_2;
  bool y_at_2_exact = false;  // Y(2) == 2981/3000

  mpq_class beta0;
  bool beta0_exceeds_half = false;

  bool passed() const {
    return identity_exact && matching_digits >= 12 && nonpositive_inside && at_most_one && y_at_2_exact &&
           beta0_exceeds_half;
  }
};

/// Exact identity, root, inequality and extremum checks for Y. Throws
/// invariant_violation when the exact identity fails.
PolyYReport poly_Y_suite(std::size_t grid_points = 10'000);

}  // namespace heckesign::chebst
