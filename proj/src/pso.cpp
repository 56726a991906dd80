// SPDX-License-Identifier: Apache-2.0
#include "uavplace/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "uavplace/errors.hpp"
#include "uavplace/parallel.hpp"
#include "uavplace/rng.hpp"

namespace uavp {
namespace {

struct VisitedEntry {
  Point3 position;
  double fitness_bps;
  LinkEvaluation eval;
};

std::size_t lattice_cell(const GridSpec& g, const Point3& p) {
  const auto ix = static_cast<std::size_t>(std::llround((p.x - g.origin.x) / g.step));
  const auto iy = static_cast<std::size_t>(std::llround((p.y - g.origin.y) / g.step));
  const auto iz = static_cast<std::size_t>(std::llround((p.z - g.origin.z) / g.step));
  return g.cell(ix, iy, iz);
}

double mean_associated_distance(const LinkEvaluation& eval,
                                std::span<const int> associated_ues) {
  if (associated_ues.empty()) return 0.0;
  double sum = 0.0;
  std::size_t n = 0;
  for (const LinkMetrics& link : eval.links) {
    if (std::binary_search(associated_ues.begin(), associated_ues.end(), link.ue_id)) {
      sum += link.distance_m;
      ++n;
    }
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

void validate_config(const PsoConfig& cfg) {
  if (cfg.particles < 1) throw ValidationError("pso: particles must be >= 1");
  if (cfg.max_iterations < 1) throw ValidationError("pso: max_iterations must be >= 1");
  if (!(cfg.inertia > 0.0 && cfg.inertia < 1.0)) {
    throw ValidationError("pso: inertia must lie in (0, 1)");
  }
  if (!(cfg.cognitive > 0.0)) throw ValidationError("pso: cognitive weight must be > 0");
  if (!(cfg.social > 0.0)) throw ValidationError("pso: social weight must be > 0");
  if (cfg.early_stop_after < 1) throw ValidationError("pso: early_stop_after must be >= 1");
}

}  // namespace

RankedPosition rank_entry(const Point3& position, const LinkEvaluation& eval,
                          std::span<const int> associated_ues) {
  RankedPosition ranked;
  ranked.position = position;
  ranked.fitness_bps = eval.served_bps;
  ranked.los_count = eval.los_count();
  ranked.mean_ue_distance_m = mean_associated_distance(eval, associated_ues);
  ranked.links = eval.links;
  return ranked;
}

bool rank_before(const RankedPosition& a, const RankedPosition& b) {
  if (a.fitness_bps != b.fitness_bps) return a.fitness_bps > b.fitness_bps;
  if (a.los_count != b.los_count) return a.los_count > b.los_count;
  if (a.mean_ue_distance_m != b.mean_ue_distance_m) {
    return a.mean_ue_distance_m < b.mean_ue_distance_m;
  }
  return lex_less(a.position, b.position);
}

bool is_perfect(const LinkEvaluation& eval, const Scenario& s,
                std::span<const int> associated_ues) {
  if (eval.served_bps != s.total_demand_bps()) return false;
  for (const LinkMetrics& link : eval.links) {
    if (std::binary_search(associated_ues.begin(), associated_ues.end(), link.ue_id) &&
        !link.los) {
      return false;
    }
  }
  return true;
}

PlacementResult optimize(const FeasibleRegion& region, const Scenario& s,
                         std::span<const PrismMesh> meshes, const PsoConfig& cfg,
                         unsigned threads) {
  validate_config(cfg);
  if (region.candidates.empty()) {
    throw EmptyCandidateSet("pso needs a non-empty candidate set");
  }

  const GridSpec& grid = region.grid;
  const Point3 bbox_lo = grid.point(region.min_ix, region.min_iy, region.min_iz);
  const Point3 bbox_hi = grid.point(region.max_ix, region.max_iy, region.max_iz);
  const double v_max = 0.5 * norm(bbox_hi - bbox_lo);  // per-axis clamp

  std::vector<Particle> swarm(cfg.particles);
  std::vector<RandomStream> streams;
  streams.reserve(cfg.particles);
  for (std::size_t k = 0; k < cfg.particles; ++k) {
    streams.emplace_back(stream_seed(cfg.seed, k));
    swarm[k].position = region.candidates[streams.back().index(region.candidates.size())];
    swarm[k].velocity = {0.0, 0.0, 0.0};
    swarm[k].p_best = swarm[k].position;
    swarm[k].p_best_fitness_bps = -std::numeric_limits<double>::infinity();
  }

  // Every distinct evaluated lattice point, in first-visit order. The ranked
  // co-optimal set at the end is drawn from this store.
  std::vector<VisitedEntry> visited;
  std::unordered_map<std::size_t, std::size_t> visited_by_cell;

  Point3 g_best = swarm[0].position;
  double g_best_fitness = -std::numeric_limits<double>::infinity();
  std::size_t g_best_index = 0;  // into visited

  PlacementResult result;
  result.associated_ues = region.associated_ues;
  result.slot = s.slot;

  std::size_t iterations_run = 0;
  bool early_stopped = false;

  for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
    iterations_run = it;

    // Evaluation phase: unique unvisited positions this iteration, computed
    // concurrently into owned slots, then merged in discovery order.
    std::vector<std::pair<std::size_t, Point3>> fresh;
    std::unordered_set<std::size_t> queued;
    for (const Particle& particle : swarm) {
      const std::size_t cell = lattice_cell(grid, particle.position);
      if (visited_by_cell.contains(cell) || !queued.insert(cell).second) continue;
      fresh.emplace_back(cell, particle.position);
    }
    std::vector<VisitedEntry> evaluated(fresh.size());
    parallel_for(fresh.size(), threads, [&](std::size_t i) {
      VisitedEntry& entry = evaluated[i];
      entry.position = fresh[i].second;
      entry.eval = evaluate_links(fresh[i].second, s, meshes);
      entry.fitness_bps = entry.eval.served_bps;
    });
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      visited_by_cell.emplace(fresh[i].first, visited.size());
      visited.push_back(std::move(evaluated[i]));
    }

    // Best tracking in particle-index order, strict improvement only.
    for (Particle& particle : swarm) {
      const std::size_t idx = visited_by_cell.at(lattice_cell(grid, particle.position));
      const double fitness = visited[idx].fitness_bps;
      if (fitness > particle.p_best_fitness_bps) {
        particle.p_best_fitness_bps = fitness;
        particle.p_best = particle.position;
      }
      if (fitness > g_best_fitness) {
        g_best_fitness = fitness;
        g_best = particle.position;
        g_best_index = idx;
      }
    }
    result.fitness_history_bps.push_back(g_best_fitness);

    if (it >= cfg.early_stop_after &&
        is_perfect(visited[g_best_index].eval, s, result.associated_ues)) {
      early_stopped = true;
      break;
    }
    if (it == cfg.max_iterations) break;

    // Movement phase: scalar r1/r2 per particle per iteration, per-axis
    // velocity clamp, projection back onto the candidate lattice.
    for (std::size_t k = 0; k < cfg.particles; ++k) {
      Particle& particle = swarm[k];
      const double r1 = streams[k].u01();
      const double r2 = streams[k].u01();
      Point3 v = cfg.inertia * particle.velocity +
                 (cfg.cognitive * r1) * (particle.p_best - particle.position) +
                 (cfg.social * r2) * (g_best - particle.position);
      v.x = std::clamp(v.x, -v_max, v_max);
      v.y = std::clamp(v.y, -v_max, v_max);
      v.z = std::clamp(v.z, -v_max, v_max);
      particle.velocity = v;
      particle.position = nearest_candidate(region, particle.position + v);
    }
  }

  result.iterations_run = iterations_run;
  result.early_stopped = early_stopped;

  const double threshold = g_best_fitness * (1.0 - kCoOptimalRelTol);
  for (const VisitedEntry& entry : visited) {
    if (entry.fitness_bps < threshold) continue;
    result.optimal_positions.push_back(
        rank_entry(entry.position, entry.eval, result.associated_ues));
  }
  std::sort(result.optimal_positions.begin(), result.optimal_positions.end(), rank_before);

  result.g_best = result.optimal_positions.front().position;
  result.g_best_fitness_bps = result.optimal_positions.front().fitness_bps;
  return result;
}

}  // namespace uavp
