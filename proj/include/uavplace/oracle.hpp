// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uavplace/pso.hpp"
#include "uavplace/region.hpp"
#include "uavplace/scenario.hpp"

namespace uavp {

inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

struct OracleResult {
  double best_fitness_bps = 0.0;
  std::vector<Point3> argmax_positions;  // candidate scan order
  std::size_t evaluations = 0;
};

// Exhaustive reference: evaluates the fitness at every candidate and returns
// all positions within kCoOptimalRelTol of the maximum. Invariant to both
// candidate ordering and thread count.
// Throws EmptyCandidateSet on an empty region and CandidateCapExceeded when
// the candidate count exceeds cap.
OracleResult grid_search(const FeasibleRegion& region, const Scenario& s,
                         std::span<const PrismMesh> meshes,
                         std::size_t cap = kDefaultOracleCap, unsigned threads = 1);

// Wraps an exhaustive search outcome in the optimizer's result shape so the
// two can be emitted and compared through one code path.
PlacementResult oracle_placement(const OracleResult& oracle, const FeasibleRegion& region,
                                 const Scenario& s, std::span<const PrismMesh> meshes);

// Independent line-of-sight reference: walks samples-1 interior points along
// the segment and reports blockage when any of them lies inside a footprint
// (crossing-number test local to this module) at or below that prism's roof.
// Endpoints are never sampled. Throws std::invalid_argument for samples < 1000.
bool sampled_los(const Point3& uav, const Point3& ue, std::span<const PolygonPrism> prisms,
                 std::size_t samples);

}  // namespace uavp
