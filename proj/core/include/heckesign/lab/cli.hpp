#pragma once

#include <ostream>

namespace heckesign::lab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

/// Command line entry point. Returns 0 on success, 1 on an invariant
/// violation (or failing selftest), 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heckesign::lab
