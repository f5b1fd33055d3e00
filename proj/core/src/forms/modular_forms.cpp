#include "heckesign/forms/modular_forms.hpp"

#include <stdexcept>

#include "heckesign/forms/series.hpp"

namespace heckesign::forms {
namespace {

void require_positive(std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("series length n_max must be >= 1");
}

ModularSeries delta_modular(std::size_t length) {
  const auto euler = ModularSeries::from_sparse(length, euler_function_terms(length));
  return euler.pow(24).shifted(1);
}

}  // namespace

std::vector<mpz_class> sigma3_table(std::size_t n_max) {
  std::vector<mpz_class> sigma(n_max + 1, 0);
  for (std::size_t d = 1; d <= n_max; ++d) {
    mpz_class cube = d;
    cube = cube * cube * cube;
    for (std::size_t m = d; m <= n_max; m += d) sigma[m] += cube;
  }
  return sigma;
}

std::vector<mpz_class> delta_series(std::size_t n_max) {
  require_positive(n_max);
  return delta_modular(n_max + 1).to_integers();
}

std::vector<mpz_class> eisenstein_e4(std::size_t n_max) {
  require_positive(n_max);
  auto coeffs = sigma3_table(n_max);
  coeffs[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) coeffs[n] *= 240;
  return coeffs;
}

std::vector<mpz_class> level1_newform_series(int weight, std::size_t n_max) {
  require_positive(n_max);
  const std::size_t length = n_max + 1;
  switch (weight) {
    case 12:
      return delta_series(n_max);
    case 16:
    case 20: {
      const auto e4 = ModularSeries::from_integers(eisenstein_e4(n_max));
      auto product = delta_modular(length) * e4;
      if (weight == 20) product = product * e4;
      return product.to_integers();
    }
    default:
      throw std::invalid_argument("level-1 newforms are available for weights 12, 16, 20");
  }
}

}  // namespace heckesign::forms
