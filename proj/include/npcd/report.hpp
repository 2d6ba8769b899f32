#pragma once

#include <json.hpp>

#include <iosfwd>

#include "npcd/monte_carlo.hpp"

namespace npcd {

// Report builders shared by the CLI and the test suites. schema_version 1.
// Infinities are serialised as the strings "inf" / "-inf" (JSON has no
// literal for them); timing lives only under keys ending in "_ms" so
// determinism checks can strip it.

nlohmann::json json_extended(double v);

nlohmann::json scenario_to_json(const ScenarioSpec& spec);
ScenarioSpec scenario_from_json(const nlohmann::json& j);

nlohmann::json detector_config_to_json(const DetectorConfig& config);

nlohmann::json detect_report_json(const DetectorConfig& config, const Segmentation& result,
                                  std::uint64_t seed, double wall_ms);

nlohmann::json bench_report_json(const RunReport& report);

// tidy per-replicate table; wall_ms is the only timing column
void write_bench_csv(const RunReport& report, std::ostream& out);

// removes every key ending in "_ms", recursively; used by determinism checks
void strip_timing(nlohmann::json& j);

}  // namespace npcd
