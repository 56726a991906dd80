// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "uavplace/radio.hpp"
#include "uavplace/region.hpp"
#include "uavplace/scenario.hpp"

namespace uavp {

// Positions whose fitness is within this relative tolerance of the best
// fitness count as co-optimal and enter the ranked result set.
inline constexpr double kCoOptimalRelTol = 1e-6;

struct PsoConfig {
  std::size_t particles = 30;
  std::size_t max_iterations = 100;
  double inertia = 0.7;
  double cognitive = 1.5;
  double social = 1.5;
  std::size_t early_stop_after = 10;
  std::uint64_t seed = 0;
};

struct Particle {
  Point3 position;  // always a member of region.candidates
  Point3 velocity;  // metres per iteration
  Point3 p_best;
  double p_best_fitness_bps = 0.0;
};

struct RankedPosition {
  Point3 position;
  double fitness_bps = 0.0;
  int los_count = 0;
  double mean_ue_distance_m = 0.0;  // mean over associated UEs
  std::vector<LinkMetrics> links;   // scenario user order
};

struct PlacementResult {
  // Every visited position within kCoOptimalRelTol of the best fitness,
  // sorted by (fitness desc, LoS count desc, mean UE distance asc, lex).
  std::vector<RankedPosition> optimal_positions;
  Point3 g_best;
  double g_best_fitness_bps = 0.0;
  std::size_t iterations_run = 0;
  std::vector<double> fitness_history_bps;  // best-so-far after each iteration
  std::vector<int> associated_ues;
  int slot = 0;
  bool early_stopped = false;
};

// True iff every demand in the scenario is met exactly (aggregate served
// equals the demand total) and every associated link is line of sight.
bool is_perfect(const LinkEvaluation& eval, const Scenario& s,
                std::span<const int> associated_ues);

// Builds one ranked entry from a link evaluation at a position.
RankedPosition rank_entry(const Point3& position, const LinkEvaluation& eval,
                          std::span<const int> associated_ues);

// Ranking order shared by the optimizer and the exhaustive reference:
// fitness desc, LoS count desc, mean UE distance asc, lexicographic position.
bool rank_before(const RankedPosition& a, const RankedPosition& b);

// Particle swarm search over the candidate lattice. Deterministic for a
// fixed (scenario, cfg.seed) regardless of thread count: each particle owns
// a counter-derived random stream, evaluations write to slots they own, and
// all best-tracking updates run in particle-index order.
// Throws EmptyCandidateSet when the region has no candidates and
// ValidationError when cfg violates its invariants.
PlacementResult optimize(const FeasibleRegion& region, const Scenario& s,
                         std::span<const PrismMesh> meshes, const PsoConfig& cfg,
                         unsigned threads = 1);

}  // namespace uavp
