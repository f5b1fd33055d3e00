#pragma once

#include <string>
#include <vector>

namespace heckesign::lab {

struct SelfCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast fixture suite: exact coefficients, first sign changes, kappa, Y,
/// Chebyshev orthonormality, beta_L integrals, the minorant contract,
/// h_y counts, cache round trip and thread-count determinism.
std::vector<SelfCheck> run_selftest(unsigned threads);

}  // namespace heckesign::lab
