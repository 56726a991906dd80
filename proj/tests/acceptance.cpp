// SPDX-License-Identifier: Apache-2.0
// Acceptance gate: runs the seven release criteria end to end and prints one
// [PASS]/[FAIL] line per criterion. Exits 0 only when every criterion holds.
#include <CLI11.hpp>
#include <json.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "uavplace/errors.hpp"
#include "uavplace/geometry.hpp"
#include "uavplace/oracle.hpp"
#include "uavplace/pso.hpp"
#include "uavplace/radio.hpp"
#include "uavplace/region.hpp"
#include "uavplace/rng.hpp"
#include "uavplace/scenario.hpp"
#include "uavplace/scenario_gen.hpp"
#include "uavplace/scenario_io.hpp"

namespace fs = std::filesystem;
using namespace uavp;
using mp50 = boost::multiprecision::cpp_bin_float_50;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

void report(int number, const std::string& name, const Outcome& outcome, double seconds,
            double budget_s) {
  const std::string detail = outcome.detail.empty() ? "" : outcome.detail + "; ";
  if (budget_s > 0.0) {
    std::printf("[%s] criterion %d: %s (%s%.1f s of %.0f s)\n", outcome.pass ? "PASS" : "FAIL",
                number, name.c_str(), detail.c_str(), seconds, budget_s);
  } else {
    std::printf("[%s] criterion %d: %s (%s%.1f s)\n", outcome.pass ? "PASS" : "FAIL", number,
                name.c_str(), detail.c_str(), seconds);
  }
  std::fflush(stdout);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return "<unreadable:" + path.string() + ">";
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int run_cmd(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---------------------------------------------------------------- criterion 1

Outcome criterion_link_budget(double budget_s) {
  Timer timer;
  const mp50 pi = acos(mp50(-1));
  RandomStream rng(stream_seed(0xACCE5501ULL, 1));
  double worst_roundtrip = 0.0;
  double worst_reference = 0.0;
  double worst_capacity = 0.0;

  for (int i = 0; i < 1000; ++i) {
    LinkBudget lb;
    lb.frequency_hz = rng.uniform(0.7e9, 60e9);
    lb.bandwidth_hz = rng.uniform(5e6, 160e6);
    lb.tx_power_w = rng.uniform(1e-3, 10.0);
    lb.tx_gain = rng.uniform(0.5, 30.0);
    lb.rx_gain = rng.uniform(0.5, 30.0);
    lb.noise_floor_w = rng.uniform(1e-14, 1e-10);
    lb.nlos_extra_loss_db = rng.uniform(0.0, 40.0);
    const bool los = rng.u01() < 0.5;
    const double target_snr = rng.uniform(0.25, 1e6);

    const double d = max_distance(lb, target_snr, los);
    const double roundtrip = snr(lb, d, los);
    worst_roundtrip =
        std::max(worst_roundtrip, std::abs(roundtrip - target_snr) / target_snr);

    const mp50 lambda = mp50(kSpeedOfLightMps) / mp50(lb.frequency_hz);
    const mp50 loss =
        los ? mp50(1) : pow(mp50(10), mp50(lb.nlos_extra_loss_db) / 10);
    const mp50 d_ref = lambda / (4 * pi) *
                       sqrt(mp50(lb.tx_power_w) * mp50(lb.tx_gain) * mp50(lb.rx_gain) /
                            (loss * mp50(lb.noise_floor_w) * mp50(target_snr)));
    worst_reference = std::max(
        worst_reference,
        static_cast<double>(abs(mp50(d) - d_ref) / d_ref));

    const double cap = capacity_bps(lb, target_snr);
    const mp50 cap_ref =
        mp50(lb.bandwidth_hz) * log(mp50(1) + mp50(target_snr)) / log(mp50(2));
    worst_capacity = std::max(
        worst_capacity, static_cast<double>(abs(mp50(cap) - cap_ref) / cap_ref));
  }

  Outcome out;
  out.pass = worst_roundtrip <= 1e-9 && worst_reference <= 1e-9 && worst_capacity <= 1e-9 &&
             timer.seconds() < budget_s;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "1000 budgets, worst rel err roundtrip %.2e, distance %.2e, capacity %.2e",
                worst_roundtrip, worst_reference, worst_capacity);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------- criterion 2

double dist2d_point_segment(double px, double py, double ax, double ay, double bx, double by) {
  const double dx = bx - ax;
  const double dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double qx = ax + t * dx - px;
  const double qy = ay + t * dy - py;
  return std::sqrt(qx * qx + qy * qy);
}

bool inside_footprint(const std::vector<Point2>& poly, double x, double y) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const bool crosses = (poly[i].y > y) != (poly[j].y > y);
    if (crosses) {
      const double xi = poly[j].x + (y - poly[j].y) / (poly[i].y - poly[j].y) *
                                        (poly[i].x - poly[j].x);
      if (x < xi) inside = !inside;
    }
  }
  return inside;
}

double boundary_distance(const std::vector<Point2>& poly, double x, double y) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    best = std::min(best, dist2d_point_segment(x, y, poly[j].x, poly[j].y, poly[i].x, poly[i].y));
  }
  return best;
}

enum class PointClass { kFar, kDeep, kAmbiguous };

PointClass classify_against(const PolygonPrism& prism, const Point3& p, double margin) {
  if (p.z > prism.height + margin) return PointClass::kFar;
  const double d = boundary_distance(prism.bottom_corners, p.x, p.y);
  const bool inside = inside_footprint(prism.bottom_corners, p.x, p.y);
  if (inside) {
    if (d > margin && p.z < prism.height - margin) return PointClass::kDeep;
    return PointClass::kAmbiguous;
  }
  return d > margin ? PointClass::kFar : PointClass::kAmbiguous;
}

PolygonPrism rect_prism(int id, double x0, double y0, double w, double d, double h) {
  return {id, {{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + d}, {x0, y0 + d}}, h};
}

PolygonPrism l_prism(int id, double x0, double y0, double w, double d, double h) {
  return {id,
          {{x0, y0},
           {x0 + w, y0},
           {x0 + w, y0 + d / 2},
           {x0 + w / 2, y0 + d / 2},
           {x0 + w / 2, y0 + d},
           {x0, y0 + d}},
          h};
}

PolygonPrism u_prism(int id, double x0, double y0, double w, double d, double h) {
  const double arm = w / 4;
  const double floor_t = d / 3;
  return {id,
          {{x0, y0},
           {x0 + w, y0},
           {x0 + w, y0 + d},
           {x0 + w - arm, y0 + d},
           {x0 + w - arm, y0 + floor_t},
           {x0 + arm, y0 + floor_t},
           {x0 + arm, y0 + d},
           {x0, y0 + d}},
          h};
}

PolygonPrism tri_prism(int id, double x0, double y0, double w, double d, double h) {
  return {id, {{x0, y0}, {x0 + w, y0}, {x0 + w / 2, y0 + d}}, h};
}

Outcome criterion_los_agreement(double budget_s) {
  Timer timer;
  constexpr double kMargin = 0.5;
  constexpr std::size_t kSamples = 10000;
  RandomStream rng(stream_seed(0xACCE5502ULL, 2));

  int accepted = 0;
  int blocked = 0;
  int clear = 0;
  int rejected = 0;
  int nonconvex_cases = 0;
  int disagreements = 0;
  std::string first_failure;

  while (accepted < 1000 && timer.seconds() < budget_s - 2.0) {
    std::vector<PolygonPrism> prisms;
    const std::size_t prism_count = 1 + rng.index(3);
    bool nonconvex = false;
    for (std::size_t k = 0; k < prism_count; ++k) {
      const std::size_t shape = rng.index(4);
      const double x0 = rng.uniform(0.0, 80.0);
      const double y0 = rng.uniform(0.0, 80.0);
      const double w = rng.uniform(8.0, 20.0);
      const double d = rng.uniform(8.0, 20.0);
      const double h = rng.uniform(4.0, 20.0);
      const int id = static_cast<int>(k) + 1;
      switch (shape) {
        case 0: prisms.push_back(rect_prism(id, x0, y0, w, d, h)); break;
        case 1: prisms.push_back(l_prism(id, x0, y0, w, d, h)); nonconvex = true; break;
        case 2: prisms.push_back(u_prism(id, x0, y0, w, d, h)); nonconvex = true; break;
        default: prisms.push_back(tri_prism(id, x0, y0, w, d, h)); break;
      }
    }

    const Point3 a{rng.uniform(-10.0, 90.0), rng.uniform(-10.0, 90.0), rng.uniform(0.05, 30.0)};
    const Point3 b{rng.uniform(-10.0, 90.0), rng.uniform(-10.0, 90.0), rng.uniform(0.05, 30.0)};
    const double len = std::hypot(b.x - a.x, b.y - a.y, b.z - a.z);
    if (len < 1.0) continue;

    // Endpoints must sit robustly outside every prism, mirroring the domain:
    // aerial points deploy above the skyline and user positions are rejected
    // inside footprints. A segment buried inside a solid has no surface
    // crossing for the exact kernel to find.
    bool endpoints_clear = true;
    for (const PolygonPrism& prism : prisms) {
      if (classify_against(prism, a, kMargin) != PointClass::kFar ||
          classify_against(prism, b, kMargin) != PointClass::kFar) {
        endpoints_clear = false;
        break;
      }
    }
    if (!endpoints_clear) {
      ++rejected;
      continue;
    }

    // Robustness scan over the same interior sample points the reference
    // uses. A verdict is kept only when flipping every boundary-band point
    // could not change it; everything else is regenerated. This realizes
    // the boundary-band exclusion: sample spacing (len/10^4) is far below
    // the margin, so an accepted-clear segment cannot cross a wall between
    // samples, and an accepted-blocked segment has a decisively interior
    // point.
    bool any_deep = false;
    bool any_ambiguous = false;
    for (std::size_t i = 1; i < kSamples && !any_deep; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(kSamples);
      const Point3 p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)};
      for (const PolygonPrism& prism : prisms) {
        const PointClass c = classify_against(prism, p, kMargin);
        if (c == PointClass::kDeep) any_deep = true;
        if (c == PointClass::kAmbiguous) any_ambiguous = true;
      }
    }
    if (!any_deep && any_ambiguous) {
      ++rejected;
      continue;
    }

    const std::vector<PrismMesh> meshes = triangulate_all(prisms);
    const bool exact = has_los(a, b, meshes);
    const bool sampled = sampled_los(a, b, prisms, kSamples);
    if (exact != sampled) {
      ++disagreements;
      if (first_failure.empty()) {
        char buf[240];
        std::snprintf(buf, sizeof(buf),
                      "first disagreement at (%.17g,%.17g,%.17g)->(%.17g,%.17g,%.17g) exact=%d",
                      a.x, a.y, a.z, b.x, b.y, b.z, exact ? 1 : 0);
        first_failure = buf;
        for (const PolygonPrism& prism : prisms) {
          first_failure += " prism" + std::to_string(prism.id) + " h=" +
                           std::to_string(prism.height) + " [";
          for (const Point2& c : prism.bottom_corners) {
            first_failure += "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
          }
          first_failure += "]";
        }
      }
    }
    ++accepted;
    if (nonconvex) ++nonconvex_cases;
    if (sampled) ++clear; else ++blocked;
  }

  Outcome out;
  out.pass = disagreements == 0 && accepted >= 1000 && blocked >= 50 && clear >= 50 &&
             nonconvex_cases >= 100 && timer.seconds() < budget_s;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "%d cases (%d blocked, %d clear, %d non-convex, %d regenerated), "
                "%d disagreements",
                accepted, blocked, clear, nonconvex_cases, rejected, disagreements);
  out.detail = buf;
  if (!first_failure.empty()) out.detail += "; " + first_failure;
  return out;
}

// ---------------------------------------------------------------- criterion 3

Outcome criterion_region_certificate(double budget_s) {
  Timer timer;
  int done = 0;
  int skipped_empty = 0;
  int bad_candidates = 0;
  int bad_maximality = 0;

  for (std::uint64_t seed = 1; done < 50 && seed <= 200; ++seed) {
    const Scenario s = generate(template_by_name("random_medium"), seed);
    const std::vector<CoverageSphere> spheres = build_spheres(s);
    FeasibleRegion region;
    try {
      region = select_region(spheres, s);
    } catch (const EmptyRegion&) {
      ++skipped_empty;
      continue;
    }
    ++done;

    std::map<int, const CoverageSphere*> by_id;
    for (const CoverageSphere& sphere : spheres) by_id[sphere.ue_id] = &sphere;

    for (const Point3& cand : region.candidates) {
      if (!s.venue.contains(cand)) { ++bad_candidates; break; }
      for (const int ue : region.associated_ues) {
        const CoverageSphere& sphere = *by_id.at(ue);
        const double dx = cand.x - sphere.center.x;
        const double dy = cand.y - sphere.center.y;
        const double dz = cand.z - sphere.center.z;
        if (std::sqrt(dx * dx + dy * dy + dz * dz) > sphere.radius_m + 1e-9) {
          ++bad_candidates;
          break;
        }
      }
    }

    // Exhaustive maximality: rebuild the covered set of every lattice point
    // and rerun the whole tie chain (cardinality, demand sum, candidate
    // count, lexicographic ids) from scratch.
    const GridSpec grid = make_grid(s.venue, s.grid_step_m);
    std::map<std::uint32_t, std::size_t> mask_counts;
    for (std::size_t iz = 0; iz < grid.nz; ++iz) {
      for (std::size_t iy = 0; iy < grid.ny; ++iy) {
        for (std::size_t ix = 0; ix < grid.nx; ++ix) {
          const Point3 p = grid.point(ix, iy, iz);
          std::uint32_t mask = 0;
          for (std::size_t u = 0; u < spheres.size(); ++u) {
            const double dx = p.x - spheres[u].center.x;
            const double dy = p.y - spheres[u].center.y;
            const double dz = p.z - spheres[u].center.z;
            if (dx * dx + dy * dy + dz * dz <= spheres[u].radius_m * spheres[u].radius_m) {
              mask |= 1u << u;
            }
          }
          if (mask != 0) ++mask_counts[mask];
        }
      }
    }

    std::uint32_t best_mask = 0;
    std::size_t best_count = 0;
    double best_demand = -1.0;
    std::size_t best_points = 0;
    std::vector<int> best_ids;
    for (const auto& [mask, points] : mask_counts) {
      std::size_t cardinality = 0;
      double demand = 0.0;
      std::vector<int> ids;
      for (std::size_t u = 0; u < spheres.size(); ++u) {
        if (mask & (1u << u)) {
          ++cardinality;
          demand += spheres[u].demand_bps;
          ids.push_back(spheres[u].ue_id);
        }
      }
      const bool better =
          cardinality > best_count ||
          (cardinality == best_count && demand > best_demand) ||
          (cardinality == best_count && demand == best_demand && points > best_points) ||
          (cardinality == best_count && demand == best_demand && points == best_points &&
           ids < best_ids);
      if (better) {
        best_mask = mask;
        best_count = cardinality;
        best_demand = demand;
        best_points = points;
        best_ids = ids;
      }
    }

    if (best_ids != region.associated_ues ||
        mask_counts[best_mask] != region.candidates.size()) {
      ++bad_maximality;
    }
  }

  Outcome out;
  out.pass = done == 50 && bad_candidates == 0 && bad_maximality == 0 &&
             timer.seconds() < budget_s;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "%d scenarios (%d empty skipped), %d certificate failures, "
                "%d maximality failures",
                done, skipped_empty, bad_candidates, bad_maximality);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------- criterion 4

Outcome criterion_pso_vs_oracle(double budget_s) {
  Timer timer;
  int scenarios = 0;
  int runs = 0;
  int exact = 0;
  int within_1pct = 0;
  int monotone = 0;

  for (std::uint64_t seed = 1; scenarios < 20 && seed <= 100; ++seed) {
    const Scenario s = generate(template_by_name("random_small"), seed);
    const std::vector<PrismMesh> meshes = triangulate_all(s.buildings);
    FeasibleRegion region;
    try {
      region = select_region(build_spheres(s), s);
    } catch (const EmptyRegion&) {
      continue;
    }
    if (region.candidates.size() > 5000) continue;
    ++scenarios;

    const OracleResult oracle = grid_search(region, s, meshes);
    for (std::uint64_t pso_seed = 1; pso_seed <= 5; ++pso_seed) {
      PsoConfig cfg;
      cfg.seed = pso_seed;
      const PlacementResult result = optimize(region, s, meshes, cfg);
      ++runs;
      if (result.g_best_fitness_bps == oracle.best_fitness_bps) ++exact;
      if (result.g_best_fitness_bps >= 0.99 * oracle.best_fitness_bps) ++within_1pct;
      if (std::is_sorted(result.fitness_history_bps.begin(),
                         result.fitness_history_bps.end())) {
        ++monotone;
      }
    }
  }

  Outcome out;
  out.pass = scenarios == 20 && runs == 100 && exact >= 95 && within_1pct == 100 &&
             monotone == 100 && timer.seconds() < budget_s;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "%d runs: %d exact optimum, %d within 1%%, %d monotone histories", runs,
                exact, within_1pct, monotone);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------- criterion 5

struct UseCaseOutcome {
  bool ok = true;
  std::string note;
};

UseCaseOutcome check_saturating_case(const fs::path& path, double expected_bps) {
  UseCaseOutcome out;
  const Scenario s = load_scenario(path);
  const std::vector<PrismMesh> meshes = triangulate_all(s.buildings);
  const FeasibleRegion region = select_region(build_spheres(s), s);
  const PlacementResult result = optimize(region, s, meshes, PsoConfig{});

  if (result.g_best_fitness_bps != expected_bps) {
    out.ok = false;
    out.note = path.filename().string() + " fitness " +
               std::to_string(result.g_best_fitness_bps);
    return out;
  }
  if (result.optimal_positions.empty()) {
    out.ok = false;
    out.note = path.filename().string() + " empty co-optimal set";
    return out;
  }
  for (const RankedPosition& ranked : result.optimal_positions) {
    if (ranked.los_count != static_cast<int>(s.users.size())) {
      out.ok = false;
      out.note = path.filename().string() + " co-optimal position without full sight";
      return out;
    }
  }
  return out;
}

Outcome criterion_use_cases(const fs::path& data_dir, double budget_s) {
  Timer timer;
  Outcome out;
  out.pass = true;
  std::string notes;

  const UseCaseOutcome a = check_saturating_case(data_dir / "usecase_a.json", 468e6);
  if (!a.ok) { out.pass = false; notes += a.note + "; "; }
  const UseCaseOutcome b = check_saturating_case(data_dir / "usecase_b.json", 702e6);
  if (!b.ok) { out.pass = false; notes += b.note + "; "; }

  const Scenario c = load_scenario(data_dir / "usecase_c.json");
  const std::vector<CoverageSphere> spheres = build_spheres(c);
  const FeasibleRegion region = select_region(spheres, c);
  const RegionReport report = region_report(region, spheres);
  if (region.associated_ues.size() != 6) {
    out.pass = false;
    notes += "usecase_c cardinality " + std::to_string(region.associated_ues.size()) + "; ";
  }
  std::vector<const UserEquipment*> by_demand;
  for (const UserEquipment& ue : c.users) by_demand.push_back(&ue);
  std::sort(by_demand.begin(), by_demand.end(),
            [](const UserEquipment* x, const UserEquipment* y) {
              return x->demand_bps > y->demand_bps;
            });
  std::set<int> hungriest{by_demand[0]->id, by_demand[1]->id};
  std::set<int> uncovered(report.uncovered_ues.begin(), report.uncovered_ues.end());
  if (uncovered != hungriest) {
    out.pass = false;
    notes += "usecase_c uncovered list is not the two highest demands; ";
  }

  if (timer.seconds() >= budget_s) out.pass = false;
  out.detail = notes.empty()
                   ? "A fitness 468e6 all-sight, B 702e6 all-sight, C strands its two "
                     "highest demands"
                   : notes;
  return out;
}

// ---------------------------------------------------------------- criterion 6

Outcome criterion_determinism(const std::string& cli, const fs::path& data_dir,
                              const fs::path& work) {
  Outcome out;
  out.pass = true;
  std::string notes;

  for (const char* name : {"usecase_a", "usecase_b", "usecase_c"}) {
    const std::string scenario = (data_dir / (std::string(name) + ".json")).string();
    std::vector<std::string> run_bytes;
    for (int run = 1; run <= 3; ++run) {
      const fs::path out_dir = work / (std::string(name) + "_run" + std::to_string(run));
      const std::string cmd = "'" + cli + "' solve --scenario '" + scenario +
                              "' --seed 7 --out '" + out_dir.string() + "' >/dev/null 2>&1";
      if (run_cmd(cmd) != 0) {
        out.pass = false;
        notes += std::string(name) + " solve failed; ";
        break;
      }
      run_bytes.push_back(slurp(out_dir / "result.json"));
    }
    if (run_bytes.size() == 3 &&
        (run_bytes[0] != run_bytes[1] || run_bytes[0] != run_bytes[2])) {
      out.pass = false;
      notes += std::string(name) + " differs across runs; ";
    }

    const fs::path t1 = work / (std::string(name) + "_t1");
    const fs::path t8 = work / (std::string(name) + "_t8");
    const std::string c1 = "'" + cli + "' solve --scenario '" + scenario +
                           "' --seed 7 --threads 1 --out '" + t1.string() + "' >/dev/null 2>&1";
    const std::string c8 = "'" + cli + "' solve --scenario '" + scenario +
                           "' --seed 7 --threads 8 --out '" + t8.string() + "' >/dev/null 2>&1";
    if (run_cmd(c1) != 0 || run_cmd(c8) != 0) {
      out.pass = false;
      notes += std::string(name) + " threaded solve failed; ";
      continue;
    }
    if (slurp(t1 / "result.json") != slurp(t8 / "result.json")) {
      out.pass = false;
      notes += std::string(name) + " differs between 1 and 8 threads; ";
    }
    if (!run_bytes.empty() && run_bytes[0] != slurp(t1 / "result.json")) {
      out.pass = false;
      notes += std::string(name) + " differs between default and 1 thread; ";
    }
  }

  out.detail = notes.empty() ? "3 scenarios x 3 runs byte-identical, 1 vs 8 threads identical"
                             : notes;
  return out;
}

// ---------------------------------------------------------------- criterion 7

Outcome criterion_cli_contract(const std::string& script, const std::string& cli,
                               const fs::path& data_dir) {
  Outcome out;
  const std::string cmd =
      "bash '" + script + "' '" + cli + "' '" + data_dir.string() + "'";
  const int code = run_cmd(cmd);
  out.pass = code == 0;
  out.detail = "contract script exit " + std::to_string(code);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Release acceptance gate"};
  std::string cli_path;
  std::string data_dir;
  std::string script_path;
  app.add_option("--cli", cli_path, "Path to the command line tool")->required();
  app.add_option("--data", data_dir, "Directory with the bundled scenarios")->required();
  app.add_option("--script", script_path, "CLI contract script")->required();
  CLI11_PARSE(app, argc, argv);

  const fs::path work =
      fs::temp_directory_path() / ("uavplace_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(work);

  int passed = 0;
  const auto tally = [&](int number, const char* name, const Outcome& outcome, double seconds,
                         double budget) {
    report(number, name, outcome, seconds, budget);
    if (outcome.pass) ++passed;
  };

  {
    Timer t;
    const Outcome o = criterion_link_budget(5.0);
    tally(1, "link-budget inversion and high-precision reference", o, t.seconds(), 5.0);
  }
  {
    Timer t;
    const Outcome o = criterion_los_agreement(30.0);
    tally(2, "sight kernel vs sampled reference", o, t.seconds(), 30.0);
  }
  {
    Timer t;
    const Outcome o = criterion_region_certificate(60.0);
    tally(3, "region coverage certificate and maximality", o, t.seconds(), 60.0);
  }
  {
    Timer t;
    const Outcome o = criterion_pso_vs_oracle(300.0);
    tally(4, "swarm optimum vs exhaustive search", o, t.seconds(), 300.0);
  }
  {
    Timer t;
    const Outcome o = criterion_use_cases(data_dir, 120.0);
    tally(5, "bundled use-case reproduction", o, t.seconds(), 120.0);
  }
  {
    Timer t;
    const Outcome o = criterion_determinism(cli_path, data_dir, work);
    tally(6, "byte-identical results across runs and thread counts", o, t.seconds(), 0.0);
  }
  {
    Timer t;
    const Outcome o = criterion_cli_contract(script_path, cli_path, data_dir);
    tally(7, "command line contract", o, t.seconds(), 0.0);
  }

  fs::remove_all(work);
  std::printf("acceptance: %d/7 passed\n", passed);
  return passed == 7 ? 0 : 1;
}
