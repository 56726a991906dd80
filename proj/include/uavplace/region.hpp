// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "uavplace/radio.hpp"
#include "uavplace/scenario.hpp"

namespace uavp {

// Ball around one user inside which that user's demand-derived SNR threshold
// is met (line of sight assumed unless built conservatively).
struct CoverageSphere {
  int ue_id{0};
  Point3 center;
  double radius_m{0.0};
  double demand_bps{0.0};
};

// Regular lattice over the venue box, anchored at (x_min, y_min, z_min).
struct GridSpec {
  Point3 origin;
  double step{1.0};
  std::size_t nx{0}, ny{0}, nz{0};

  [[nodiscard]] Point3 point(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return {origin.x + static_cast<double>(ix) * step,
            origin.y + static_cast<double>(iy) * step,
            origin.z + static_cast<double>(iz) * step};
  }
  [[nodiscard]] std::size_t cell(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return (iz * ny + iy) * nx + ix;
  }
  [[nodiscard]] std::size_t cell_count() const { return nx * ny * nz; }
};

GridSpec make_grid(const VenueBounds& venue, double step);

// Discretized deployment region: every lattice point whose covered user set
// equals the chosen association. Candidates are listed in scan order
// (z slices ascending, then y, then x). The occupancy bitmap and candidate
// index bounds exist for nearest-candidate projection.
struct FeasibleRegion {
  std::vector<int> associated_ues;  // ascending ids
  std::vector<Point3> candidates;
  double grid_step_m{1.0};
  GridSpec grid;
  std::vector<std::uint8_t> occupancy;  // 1 per lattice cell that is a candidate
  std::size_t min_ix{0}, max_ix{0};
  std::size_t min_iy{0}, max_iy{0};
  std::size_t min_iz{0}, max_iz{0};
};

struct RegionReport {
  std::size_t candidate_count{0};
  std::vector<int> associated_ues;
  std::vector<int> uncovered_ues;
  Point3 bbox_min;
  Point3 bbox_max;
};

// One sphere per user, radius max_distance(required_snr(demand)). With
// assume_los = false every radius shrinks by the extra-loss factor instead
// (conservative mode).
std::vector<CoverageSphere> build_spheres(const Scenario& s, bool assume_los = true);

// Scans the venue lattice for the maximum-cardinality covered user set and
// returns all points achieving it. Ties between equal-cardinality sets are
// broken by larger summed demand, then more candidate points, then the
// lexicographically smallest id set. Throws EmptyRegion when no lattice
// point is covered by any sphere. Thread count never changes the result.
FeasibleRegion select_region(std::span<const CoverageSphere> spheres, const Scenario& s,
                             unsigned threads = 1);

RegionReport region_report(const FeasibleRegion& region, std::span<const CoverageSphere> spheres);

// Nearest candidate by Euclidean distance; exact distance ties resolve to
// the lexicographically smallest (x, y, z). Throws EmptyCandidateSet.
Point3 nearest_candidate(const FeasibleRegion& region, const Point3& target);

}  // namespace uavp
