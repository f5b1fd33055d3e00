#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace heckesign::chebst {

/// c_0 + sum_{1 <= l <= L} (c_l cos(2 pi l x) + s_l sin(2 pi l x)) on [0, 1].
struct TrigPolynomial {
  std::vector<double> cos_coeffs;  // c_0..c_L
  std::vector<double> sin_coeffs;  // s_0..s_L, s_0 unused

  int degree() const;
  double operator()(double x) const;
  double constant_term() const { return cos_coeffs.empty() ? 0.0 : cos_coeffs[0]; }
  /// int_0^pi P(theta / pi) dmu_ST = c_0 - c_1 / 2 in closed form.
  double st_integral() const;
  double l2_norm_squared() const;
};

/// Exact cosine coefficients of beta_L for odd L >= 1:
/// (1/(2L+2)) (2 + 2 sum (1 - l/(L+1)) (1 + (-1)^l) cos(2 pi l x)).
std::vector<mpq_class> bmv_beta_L_exact(int L);
TrigPolynomial bmv_beta_L_poly(int L);
double bmv_beta_L(int L, double x);
/// 1 / (L + 1), from the exact coefficients c_0 - c_1 / 2.
double bmv_beta_L_st_integral(int L);

/// Default minorant candidate for the indicator of [0, 1/2]: Vaaler's
/// smoothing of its Fourier series,
///   a(x) = 1/2 + sum_{odd n <= L} (2 / (pi n)) J(n / (L+1)) sin(2 pi n x),
///   J(u) = pi u (1 - u) cot(pi u) + u.
TrigPolynomial vaaler_alpha_L(int L);

struct ContractProperty {
  std::string name;
  bool passed = false;
  double witness = 0.0;  // grid point of the worst margin
  double margin = 0.0;   // worst slack, negative on failure
};

struct ContractReport {
  int L = 0;
  std::size_t grid_size = 0;
  std::vector<ContractProperty> properties;

  bool all_passed() const;
};

/// (1) degree(a) <= L, (2) 0 <= a <= 1 + 1e-12, (3) constant term of a is
/// exactly 1/2, (4) |chi(x) - a(x)| <= b(x) + 1e-12 away from the jumps
/// {0, 1/2, 1}; within 1/(10L) of a jump, a is within b + 1e-12 of either
/// value of chi. Requires grid_size >= 4(L+1).
ContractReport minorant_contract_check(const TrigPolynomial& a, const TrigPolynomial& b, int L,
                                       std::size_t grid_size);

class MinorantPair {
 public:
  /// Runs the contract and throws invariant_violation when it fails.
  MinorantPair(TrigPolynomial a, TrigPolynomial b, int L, std::size_t grid_size = 0);

  /// Vaaler candidate with beta_L.
  static MinorantPair standard(int L);

  const TrigPolynomial& a() const { return a_; }
  const TrigPolynomial& b() const { return b_; }
  int L() const { return L_; }
  const ContractReport& report() const { return report_; }

 private:
  TrigPolynomial a_;
  TrigPolynomial b_;
  int L_;
  ContractReport report_;
};

struct ProductMinorantSample {
  double A = 0.0;
  double B = 0.0;
  double chi = 0.0;
};

struct ProductMinorantResult {
  std::vector<ProductMinorantSample> samples;
  std::size_t violations = 0;  // A - B > prod chi + 1e-9
  double worst_excess = -std::numeric_limits<double>::infinity();
};

/// A = prod a(theta_j/pi), B = sum_j b(theta_j/pi) prod_{q != j} a(theta_q/pi)
/// and prod chi(theta_j) with chi the indicator of [0, pi/2].
ProductMinorantResult product_minorant_eval(const MinorantPair& pair,
                                            const std::vector<std::vector<double>>& points);

/// Uniform tuples in [0, pi]^omega, with every fourth tuple pushed within
/// 1e-6 of a jump in one coordinate.
std::vector<std::vector<double>> minorant_test_points(int omega, std::size_t count, std::uint64_t seed);

/// Ia^{omega-1} (Ia - omega/(L+1)).
double delta_lower(int L, int omega, double Ia);
/// Smallest odd L with L + 1 >= 2 omega / eps.
int choose_L(int omega, double eps);

}  // namespace heckesign::chebst
