#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "heckesign/forms/coefficient_table.hpp"

namespace heckesign::forms {

/// Contents of one coefficient cache file:
///
///   # schema=coeffs-v1, label=<label>, k=<weight>, N=<level>
///   p,a_p
///   3,0
///   5,-2
///   ...
///
/// Rows are sorted by p and hold exact decimal integers.
struct CoefficientCache {
  std::string label;
  int weight = 0;
  std::uint64_t level = 0;
  std::vector<PrimeCoefficient> rows;

  std::uint64_t max_prime() const { return rows.empty() ? 0 : rows.back().p; }
};

std::string format_cache(const CoefficientTable& table);
CoefficientCache parse_cache(const std::string& text);

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& label);

/// Writes <dir>/<label>.csv through a temporary file and an atomic rename.
void write_cache(const std::filesystem::path& dir, const CoefficientTable& table);
std::optional<CoefficientCache> read_cache(const std::filesystem::path& dir, const std::string& label);

/// Rebuilds a table from cached prime coefficients. The cache must match
/// the form's label, weight and level and cover max(p_max, n_max).
CoefficientTable table_from_cache(const FormSpec& spec, const CoefficientCache& cache, std::uint64_t p_max,
                                  std::uint64_t n_max);

/// Uses the cache when it covers the request, otherwise builds and stores.
CoefficientTable load_or_build(const FormSpec& spec, std::uint64_t p_max, std::uint64_t n_max,
                               const std::filesystem::path& dir, unsigned threads = 1);

}  // namespace heckesign::forms
