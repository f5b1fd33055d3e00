#include "heckesign/forms/cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <thread>

#include "heckesign/util/primes.hpp"

namespace heckesign::forms {
namespace {

constexpr const char* kSchema = "coeffs-v1";

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_cache(const CoefficientTable& table) {
  const auto& spec = table.spec();
  std::ostringstream out;
  out << "# schema=" << kSchema << ", label=" << spec.label << ", k=" << spec.weight << ", N=" << spec.level
      << '\n';
  out << "p,a_p\n";
  for (const auto& pc : table.prime_coefficients()) out << pc.p << ',' << pc.a.get_str() << '\n';
  return out.str();
}

CoefficientCache parse_cache(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
    throw std::runtime_error("coefficient cache: missing header line");
  }
  CoefficientCache cache;
  bool schema_ok = false;
  std::istringstream header(line.substr(2));
  std::string field;
  while (std::getline(header, field, ',')) {
    field = trim(field);
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw std::runtime_error("coefficient cache: malformed header field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "schema") {
      schema_ok = value == kSchema;
    } else if (key == "label") {
      cache.label = value;
    } else if (key == "k") {
      cache.weight = std::stoi(value);
    } else if (key == "N") {
      cache.level = std::stoull(value);
    }
  }
  if (!schema_ok) throw std::runtime_error("coefficient cache: unsupported schema");
  if (!std::getline(in, line) || trim(line) != "p,a_p") {
    throw std::runtime_error("coefficient cache: missing column header");
  }
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("coefficient cache: malformed row '" + line + "'");
    PrimeCoefficient pc;
    pc.p = std::stoull(line.substr(0, comma));
    if (pc.a.set_str(trim(line.substr(comma + 1)), 10) != 0) {
      throw std::runtime_error("coefficient cache: bad integer in row '" + line + "'");
    }
    if (!cache.rows.empty() && cache.rows.back().p >= pc.p) {
      throw std::runtime_error("coefficient cache: rows not sorted by p");
    }
    cache.rows.push_back(std::move(pc));
  }
  return cache;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& label) {
  return dir / (label + ".csv");
}

void write_cache(const std::filesystem::path& dir, const CoefficientTable& table) {
  std::filesystem::create_directories(dir);
  const auto target = cache_path(dir, table.spec().label);
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id();
  auto tmp = target;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << format_cache(table);
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::optional<CoefficientCache> read_cache(const std::filesystem::path& dir, const std::string& label) {
  const auto path = cache_path(dir, label);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cache(buffer.str());
}

CoefficientTable table_from_cache(const FormSpec& spec, const CoefficientCache& cache, std::uint64_t p_max,
                                  std::uint64_t n_max) {
  if (cache.label != spec.label || cache.weight != spec.weight || cache.level != spec.level) {
    throw std::runtime_error("coefficient cache does not match form " + spec.label);
  }
  const std::uint64_t bound = std::max(p_max, n_max);
  std::vector<PrimeCoefficient> rows;
  for (const auto& pc : cache.rows) {
    if (pc.p <= bound) rows.push_back(pc);
  }
  return CoefficientTable(spec, p_max, n_max, std::move(rows));
}

CoefficientTable load_or_build(const FormSpec& spec, std::uint64_t p_max, std::uint64_t n_max,
                               const std::filesystem::path& dir, unsigned threads) {
  const std::uint64_t bound = std::max(p_max, n_max);
  if (auto cache = read_cache(dir, spec.label)) {
    // A cache covers `bound` when its largest stored prime is the largest
    // prime <= bound that the engine produces, or beyond it.
    const auto primes = util::primes_up_to(bound);
    std::uint64_t needed = 0;
    for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
      if (!(spec.kind == FormKind::elliptic_curve && *it == 2)) {
        needed = *it;
        break;
      }
    }
    if (cache->max_prime() >= needed) return table_from_cache(spec, *cache, p_max, n_max);
  }
  auto table = build_table(spec, p_max, n_max, threads);
  write_cache(dir, table);
  return table;
}

}  // namespace heckesign::forms
