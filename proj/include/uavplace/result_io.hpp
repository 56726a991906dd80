// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "uavplace/pso.hpp"
#include "uavplace/region.hpp"
#include "uavplace/scenario.hpp"

namespace uavp {

inline constexpr const char* kResultSchema = "uavplace-result/1";

struct RunManifest {
  std::string tool;
  std::string version;
  std::string command;
  std::string scenario_path;
  std::string scenario_fnv1a64;
  nlohmann::json effective_config;
  std::vector<std::pair<std::string, double>> timings_ms;
};

// Key-ordered result document. Every field is derived from the inputs, so
// equal inputs serialize to equal bytes.
nlohmann::json result_to_json(const PlacementResult& result, const RegionReport& report,
                              double grid_step_m, const Scenario& s);

// One row per ranked position: x_m,y_m,z_m,fitness_bps,los_count.
std::string result_to_csv(const PlacementResult& result);

nlohmann::json manifest_to_json(const RunManifest& manifest);

// Writes <json_path> plus a companion CSV with the same stem. Rewriting the
// same result yields byte-identical files.
void write_result(const PlacementResult& result, const RegionReport& report,
                  double grid_step_m, const Scenario& s,
                  const std::filesystem::path& json_path);

}  // namespace uavp
