#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "heckesign/forms/coefficient_table.hpp"
#include "heckesign/lab/family.hpp"
#include "heckesign/lab/report.hpp"

namespace heckesign::lab {

struct RunContext {
  unsigned threads = 1;
  std::optional<std::filesystem::path> cache_dir;
  std::uint64_t seed = 0;
};

/// Builds the table, through the cache when the context has one.
forms::CoefficientTable make_table(const forms::FormSpec& spec, std::uint64_t p_max, std::uint64_t n_max,
                                   const RunContext& ctx);

/// n_f and the first negative prime over the family, tail fractions beyond
/// C log Q and the ratio max n_f / Q^{9/20}.
ExperimentReport exp_first_negative(const std::vector<forms::FormSpec>& family, std::uint64_t p_max,
                                    std::uint64_t n_max, const RunContext& ctx);

/// Fraction of the family whose signs at the primes p <= z match `signs`
/// (default +1), relaxed and strict, against 2^{-pi(z)}. Primes excluded for
/// every member are skipped; members with another excluded prime <= z are
/// dropped and counted.
ExperimentReport exp_prescribed_signs(const std::vector<forms::FormSpec>& family, std::uint64_t z,
                                      const std::map<std::uint64_t, int>& signs, const RunContext& ctx);

/// Relaxed sign agreement for every pair of tables at primes p <= x.
ExperimentReport exp_pair_signs(const std::vector<forms::CoefficientTable>& tables, std::uint64_t x,
                                const RunContext& ctx);

/// sum_f |sum_{P < p <= 2P} b lambda_f(p^nu) / p|^{2j} over the family.
ExperimentReport exp_moment_sums(const std::vector<forms::FormSpec>& family, std::uint64_t P, int nu, int j,
                                 double b, const RunContext& ctx);

/// a(p) mod 2 = 0 for every good odd p <= p_max on full-2-torsion curves.
/// Throws invariant_violation with the first witness otherwise.
ExperimentReport exp_mod2(const std::vector<forms::FormSpec>& family, std::uint64_t p_max, const RunContext& ctx);

}  // namespace heckesign::lab
