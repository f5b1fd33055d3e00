#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace heckesign::forms {

// q-expansions are returned as vectors indexed by the exponent of q, so
// entry n is the coefficient of q^n and the vector has n_max + 1 entries.

/// Delta = q prod_{n>=1} (1 - q^n)^24, coefficients tau(0..n_max).
std::vector<mpz_class> delta_series(std::size_t n_max);

/// E4 = 1 + 240 sum sigma_3(n) q^n.
std::vector<mpz_class> eisenstein_e4(std::size_t n_max);

/// The unique normalized level-1 newform of weight 12, 16 or 20, as
/// Delta, Delta*E4, Delta*E4^2.
std::vector<mpz_class> level1_newform_series(int weight, std::size_t n_max);

/// sigma_3(n) for 0 <= n <= n_max (entry 0 is 0).
std::vector<mpz_class> sigma3_table(std::size_t n_max);

}  // namespace heckesign::forms
