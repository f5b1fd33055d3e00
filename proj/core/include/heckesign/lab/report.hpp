#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "heckesign/chebst/bmv.hpp"
#include "heckesign/chebst/poly_y.hpp"
#include "heckesign/specfun/beta.hpp"

namespace heckesign::lab {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

/// One experiment run. Serialized as
///   {experiment, version, config, tolerances, records[], aggregate, verdicts}.
/// Wall-clock time is kept out of the serialized form so that repeated runs
/// produce identical bytes; `write_json(..., true)` adds it.
struct ExperimentReport {
  std::string experiment;
  json config = json::object();
  json tolerances = json::object();
  std::vector<json> records;
  json aggregate = json::object();
  json verdicts = json::object();
  double wall_clock_seconds = 0.0;

  /// True when every verdict is true.
  bool passed() const;
  json to_json(bool with_timing = false) const;
};

void write_json(std::ostream& out, const ExperimentReport& report, bool with_timing = false);
/// Header row with the union of record keys in sorted order, one row per
/// record; numbers with 17 significant digits.
void write_csv(std::ostream& out, const ExperimentReport& report);

std::string format_number(double v);

json to_json(const chebst::ContractReport& report);
json to_json(const chebst::PolyYReport& report);
json to_json(const specfun::FirstZeroReport& report);

}  // namespace heckesign::lab
