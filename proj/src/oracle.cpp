// SPDX-License-Identifier: Apache-2.0
#include "uavplace/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "uavplace/errors.hpp"
#include "uavplace/parallel.hpp"
#include "uavplace/radio.hpp"

namespace uavp {
namespace {

// Crossing-number point-in-polygon, deliberately not shared with the main
// geometry kernel so the two line-of-sight formulations stay independent.
bool footprint_contains(const std::vector<Point2>& corners, double px, double py) {
  bool inside = false;
  const std::size_t n = corners.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = corners[j];
    const Point2& b = corners[i];
    const bool straddles = (b.y > py) != (a.y > py);
    if (straddles && px < (a.x - b.x) * (py - b.y) / (a.y - b.y) + b.x) {
      inside = !inside;
    }
  }
  return inside;
}

}  // namespace

OracleResult grid_search(const FeasibleRegion& region, const Scenario& s,
                         std::span<const PrismMesh> meshes, std::size_t cap,
                         unsigned threads) {
  if (region.candidates.empty()) {
    throw EmptyCandidateSet("grid search needs a non-empty candidate set");
  }
  if (region.candidates.size() > cap) {
    throw CandidateCapExceeded("grid search over " + std::to_string(region.candidates.size()) +
                               " candidates exceeds the cap of " + std::to_string(cap));
  }

  std::vector<double> fitness(region.candidates.size());
  parallel_for(region.candidates.size(), threads, [&](std::size_t i) {
    fitness[i] = evaluate_links(region.candidates[i], s, meshes).served_bps;
  });

  OracleResult result;
  result.evaluations = region.candidates.size();
  result.best_fitness_bps = *std::max_element(fitness.begin(), fitness.end());
  const double threshold = result.best_fitness_bps * (1.0 - kCoOptimalRelTol);
  for (std::size_t i = 0; i < region.candidates.size(); ++i) {
    if (fitness[i] >= threshold) result.argmax_positions.push_back(region.candidates[i]);
  }
  return result;
}

PlacementResult oracle_placement(const OracleResult& oracle, const FeasibleRegion& region,
                                 const Scenario& s, std::span<const PrismMesh> meshes) {
  PlacementResult result;
  result.associated_ues = region.associated_ues;
  result.slot = s.slot;
  result.iterations_run = 1;
  result.fitness_history_bps = {oracle.best_fitness_bps};
  result.early_stopped = false;
  result.optimal_positions.reserve(oracle.argmax_positions.size());
  for (const Point3& p : oracle.argmax_positions) {
    result.optimal_positions.push_back(
        rank_entry(p, evaluate_links(p, s, meshes), result.associated_ues));
  }
  std::sort(result.optimal_positions.begin(), result.optimal_positions.end(), rank_before);
  result.g_best = result.optimal_positions.front().position;
  result.g_best_fitness_bps = result.optimal_positions.front().fitness_bps;
  return result;
}

bool sampled_los(const Point3& uav, const Point3& ue, std::span<const PolygonPrism> prisms,
                 std::size_t samples) {
  if (samples < 1000) {
    throw std::invalid_argument("sampled_los requires at least 1000 samples");
  }
  if (prisms.empty()) return true;

  struct Box {
    double min_x, max_x, min_y, max_y;
  };
  std::vector<Box> boxes;
  boxes.reserve(prisms.size());
  for (const PolygonPrism& prism : prisms) {
    Box box{prism.bottom_corners[0].x, prism.bottom_corners[0].x, prism.bottom_corners[0].y,
            prism.bottom_corners[0].y};
    for (const Point2& c : prism.bottom_corners) {
      box.min_x = std::min(box.min_x, c.x);
      box.max_x = std::max(box.max_x, c.x);
      box.min_y = std::min(box.min_y, c.y);
      box.max_y = std::max(box.max_y, c.y);
    }
    boxes.push_back(box);
  }

  const Vec3 delta = ue - uav;
  for (std::size_t t = 1; t < samples; ++t) {
    const double f = static_cast<double>(t) / static_cast<double>(samples);
    const double px = uav.x + f * delta.x;
    const double py = uav.y + f * delta.y;
    const double pz = uav.z + f * delta.z;
    for (std::size_t i = 0; i < prisms.size(); ++i) {
      if (pz > prisms[i].height) continue;
      const Box& box = boxes[i];
      if (px < box.min_x || px > box.max_x || py < box.min_y || py > box.max_y) continue;
      if (footprint_contains(prisms[i].bottom_corners, px, py)) return false;
    }
  }
  return true;
}

}  // namespace uavp
