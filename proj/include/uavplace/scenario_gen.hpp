// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uavplace/scenario.hpp"

namespace uavp {

enum class DemandPattern { kUniform, kTwoTier, kLadder };

// Recipe for a reproducible benchmark scenario. The fixed layouts ("fig3",
// "fig3c") ignore the seed for geometry; "scatter" derives buildings and UE
// positions from it.
struct ScenarioTemplate {
  std::string name;
  std::size_t ue_count = 8;
  DemandPattern pattern = DemandPattern::kUniform;
  std::string building_layout = "fig3";  // fig3 | fig3c | scatter
  std::uint64_t seed = 0;                // default seed for bundled generation
  double venue_xy_m = 100.0;
  double z_span_m = 25.0;
  std::size_t building_count = 3;  // scatter only
  int ladder_offset = 0;           // ladder start index (0 or 1)
  int ladder_wrap = 0;             // 0: ascending per UE; k: index cycles mod k
  double nlos_loss_db = kDefaultNlosLossDb;
  bool measured_mcs = false;  // ship measured SNR thresholds instead of derived
};

// Rate ladder entry i paired with a measured minimum SNR in dB. The top
// entries demand far more SNR than the derived thresholds, which keeps their
// coverage radii small.
std::vector<McsEntry> measured_mcs_table();

// Deterministic: equal (template, seed) yields equal scenarios. The result
// always passes scenario validation.
Scenario generate(const ScenarioTemplate& tpl, std::uint64_t seed);

const std::vector<ScenarioTemplate>& scenario_templates();

// Throws ValidationError for unknown names.
const ScenarioTemplate& template_by_name(const std::string& name);

}  // namespace uavp
