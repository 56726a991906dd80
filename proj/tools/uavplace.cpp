// SPDX-License-Identifier: Apache-2.0
// Command-line front end: load -> spheres -> region -> optimize -> report,
// plus diagnostic verbs for line-of-sight checks, link evaluation, scenario
// generation, and the exhaustive reference search.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uavplace/errors.hpp"
#include "uavplace/geometry.hpp"
#include "uavplace/oracle.hpp"
#include "uavplace/parallel.hpp"
#include "uavplace/pso.hpp"
#include "uavplace/radio.hpp"
#include "uavplace/region.hpp"
#include "uavplace/result_io.hpp"
#include "uavplace/scenario.hpp"
#include "uavplace/scenario_gen.hpp"
#include "uavplace/scenario_io.hpp"
#include "uavplace/version.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct CommonArgs {
  std::string scenario_path;
  double grid_step = 0.0;  // 0: keep the scenario's step
  unsigned threads = 0;    // 0: hardware concurrency
  std::string out_dir = "out";
  bool nlos_spheres = false;
};

struct SolveArgs : CommonArgs {
  std::uint64_t seed = 0;
  std::size_t particles = 30;
  std::size_t iterations = 100;
  bool dump_region = false;
};

struct OracleArgs : CommonArgs {
  std::size_t cap = uavp::kDefaultOracleCap;
};

uavp::Scenario load_with_overrides(const CommonArgs& args) {
  uavp::Scenario s = uavp::load_scenario(args.scenario_path);
  if (args.grid_step > 0.0) {
    s.grid_step_m = args.grid_step;
    uavp::validate_scenario(s);
  }
  return s;
}

void print_top_table(const uavp::PlacementResult& result) {
  std::printf("rank      x_m      y_m      z_m  fitness_mbps  los  mean_ue_dist_m\n");
  const std::size_t rows = std::min<std::size_t>(5, result.optimal_positions.size());
  for (std::size_t i = 0; i < rows; ++i) {
    const uavp::RankedPosition& r = result.optimal_positions[i];
    std::printf("%4zu %8.2f %8.2f %8.2f  %12.3f  %3d  %14.2f\n", i + 1, r.position.x,
                r.position.y, r.position.z, r.fitness_bps / 1e6, r.los_count,
                r.mean_ue_distance_m);
  }
  std::printf("co-optimal positions: %zu\n", result.optimal_positions.size());
}

json region_json(const uavp::RegionReport& report, double grid_step_m) {
  json j{{"candidate_count", report.candidate_count},
         {"associated_ues", report.associated_ues},
         {"uncovered_ues", report.uncovered_ues},
         {"grid_step_m", grid_step_m}};
  if (report.candidate_count > 0) {
    j["bbox_min"] = json{{"x_m", report.bbox_min.x}, {"y_m", report.bbox_min.y},
                         {"z_m", report.bbox_min.z}};
    j["bbox_max"] = json{{"x_m", report.bbox_max.x}, {"y_m", report.bbox_max.y},
                         {"z_m", report.bbox_max.z}};
  } else {
    j["bbox_min"] = nullptr;
    j["bbox_max"] = nullptr;
  }
  return j;
}

uavp::RunManifest make_manifest(const CommonArgs& args, const std::string& command,
                                const uavp::Scenario& s, json pso_config) {
  uavp::RunManifest manifest;
  manifest.tool = "uavplace";
  manifest.version = uavp::kVersion;
  manifest.command = command;
  manifest.scenario_path = args.scenario_path;
  manifest.scenario_fnv1a64 = uavp::fnv1a64_hex(uavp::read_text_file(args.scenario_path));
  manifest.effective_config =
      json{{"grid_step_m", s.grid_step_m},
           {"threads", uavp::resolve_threads(args.threads)},
           {"nlos_spheres", args.nlos_spheres},
           {"radio", uavp::scenario_to_json(s)["radio"]},
           {"pso", std::move(pso_config)}};
  return manifest;
}

int run_solve(const SolveArgs& args, const std::string& command) {
  const Clock::time_point t_load = Clock::now();
  uavp::Scenario s = load_with_overrides(args);
  uavp::PsoConfig cfg;
  cfg.seed = args.seed;
  cfg.particles = args.particles;
  cfg.max_iterations = args.iterations;
  uavp::RunManifest manifest = make_manifest(
      args, command, s,
      json{{"seed", cfg.seed},
           {"particles", cfg.particles},
           {"iterations", cfg.max_iterations},
           {"inertia", cfg.inertia},
           {"cognitive", cfg.cognitive},
           {"social", cfg.social},
           {"early_stop_after", cfg.early_stop_after}});
  manifest.timings_ms.emplace_back("load", elapsed_ms(t_load));

  const Clock::time_point t_spheres = Clock::now();
  const std::vector<uavp::CoverageSphere> spheres =
      uavp::build_spheres(s, /*assume_los=*/!args.nlos_spheres);
  const std::vector<uavp::PrismMesh> meshes = uavp::triangulate_all(s.buildings);
  manifest.timings_ms.emplace_back("spheres", elapsed_ms(t_spheres));

  const Clock::time_point t_region = Clock::now();
  const uavp::FeasibleRegion region = uavp::select_region(spheres, s, args.threads);
  const uavp::RegionReport report = uavp::region_report(region, spheres);
  manifest.timings_ms.emplace_back("region", elapsed_ms(t_region));

  const Clock::time_point t_optimize = Clock::now();
  const uavp::PlacementResult result = uavp::optimize(region, s, meshes, cfg, args.threads);
  manifest.timings_ms.emplace_back("optimize", elapsed_ms(t_optimize));

  const Clock::time_point t_write = Clock::now();
  const std::filesystem::path out_dir(args.out_dir);
  uavp::write_result(result, report, s.grid_step_m, s, out_dir / "result.json");
  if (args.dump_region) {
    uavp::write_text_file(out_dir / "region.json",
                          region_json(report, s.grid_step_m).dump(2) + "\n");
  }
  manifest.timings_ms.emplace_back("write", elapsed_ms(t_write));
  uavp::write_text_file(out_dir / "manifest.json",
                        uavp::manifest_to_json(manifest).dump(2) + "\n");

  print_top_table(result);
  return 0;
}

int run_oracle(const OracleArgs& args, const std::string& command) {
  const Clock::time_point t_load = Clock::now();
  uavp::Scenario s = load_with_overrides(args);
  uavp::RunManifest manifest =
      make_manifest(args, command, s, json{{"mode", "exhaustive"}, {"cap", args.cap}});
  manifest.timings_ms.emplace_back("load", elapsed_ms(t_load));

  const std::vector<uavp::CoverageSphere> spheres =
      uavp::build_spheres(s, /*assume_los=*/!args.nlos_spheres);
  const std::vector<uavp::PrismMesh> meshes = uavp::triangulate_all(s.buildings);

  const Clock::time_point t_region = Clock::now();
  const uavp::FeasibleRegion region = uavp::select_region(spheres, s, args.threads);
  const uavp::RegionReport report = uavp::region_report(region, spheres);
  manifest.timings_ms.emplace_back("region", elapsed_ms(t_region));

  const Clock::time_point t_search = Clock::now();
  const uavp::OracleResult oracle =
      uavp::grid_search(region, s, meshes, args.cap, args.threads);
  const uavp::PlacementResult result = uavp::oracle_placement(oracle, region, s, meshes);
  manifest.timings_ms.emplace_back("search", elapsed_ms(t_search));

  const std::filesystem::path out_dir(args.out_dir);
  uavp::write_result(result, report, s.grid_step_m, s, out_dir / "result.json");
  uavp::write_text_file(out_dir / "manifest.json",
                        uavp::manifest_to_json(manifest).dump(2) + "\n");

  print_top_table(result);
  std::printf("evaluations: %zu\n", oracle.evaluations);
  return 0;
}

int run_los_check(const std::string& scenario_path, const std::vector<double>& uav,
                  const std::vector<double>& ue) {
  const uavp::Scenario s = uavp::load_scenario(scenario_path);
  const uavp::Point3 a{uav[0], uav[1], uav[2]};
  const uavp::Point3 b{ue[0], ue[1], ue[2]};
  if (a == b) throw uavp::ValidationError("the two endpoints must be distinct");
  const std::vector<uavp::PrismMesh> meshes = uavp::triangulate_all(s.buildings);
  const std::vector<int> blockers = uavp::blocking_prisms(a, b, meshes);
  if (blockers.empty()) {
    std::printf("LoS\n");
  } else {
    std::printf("NLoS\n");
    for (const int id : blockers) std::printf("blocking building id: %d\n", id);
  }
  return 0;
}

int run_evaluate(const std::string& scenario_path, const std::vector<double>& uav) {
  const uavp::Scenario s = uavp::load_scenario(scenario_path);
  const uavp::Point3 p{uav[0], uav[1], uav[2]};
  if (!s.venue.contains(p)) {
    throw uavp::ValidationError("position is outside the venue bounds");
  }
  const std::vector<uavp::PrismMesh> meshes = uavp::triangulate_all(s.buildings);
  const uavp::LinkEvaluation eval = uavp::evaluate_links(p, s, meshes);
  std::printf("ue_id  distance_m  los  snr_db  capacity_mbps  served_mbps  demand_met\n");
  for (const uavp::LinkMetrics& m : eval.links) {
    std::printf("%5d  %10.2f  %3s  %6.2f  %13.3f  %11.3f  %10s\n", m.ue_id, m.distance_m,
                m.los ? "yes" : "no", 10.0 * std::log10(m.snr_linear), m.capacity_bps / 1e6,
                m.served_bps / 1e6, m.demand_met ? "yes" : "no");
  }
  std::printf("aggregate served_mbps: %.3f\n", eval.served_bps / 1e6);
  std::printf("aggregate capacity_mbps: %.3f\n", eval.capacity_sum_bps / 1e6);
  std::printf("capacity cap violated: %s\n", eval.c_max_violated ? "yes" : "no");
  return 0;
}

int run_gen(const std::string& template_name, std::uint64_t seed, std::string out_path) {
  const uavp::ScenarioTemplate& tpl = uavp::template_by_name(template_name);
  const uavp::Scenario s = uavp::generate(tpl, seed);
  if (out_path.empty()) out_path = tpl.name + ".json";
  uavp::save_scenario(s, out_path);
  std::printf("%s\n", out_path.c_str());
  return 0;
}

void emit_error_json(const std::string& kind, const std::string& message, int exit_code) {
  const json err{{"error", kind}, {"message", message}, {"exit_code", exit_code}};
  std::fprintf(stderr, "%s\n", err.dump().c_str());
}

void add_common_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--scenario", args.scenario_path, "Scenario JSON path")->required();
  cmd->add_option("--grid-step", args.grid_step, "Override the lattice step (m)");
  cmd->add_option("--threads", args.threads, "Worker cap; 0 = hardware concurrency");
  cmd->add_option("--out", args.out_dir, "Output directory");
  cmd->add_flag("--nlos-spheres", args.nlos_spheres,
                "Build coverage spheres with the obstructed-link loss applied");
}

}  // namespace

int main(int argc, char** argv) {
  std::string command;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) command += ' ';
    command += argv[i];
  }

  CLI::App app{"Optimal aerial access point placement over an obstacle-rich venue"};
  app.set_version_flag("--version", uavp::kVersion);
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Particle swarm search over the feasible region");
  add_common_flags(solve, solve_args);
  solve->add_option("--seed", solve_args.seed, "Random seed");
  solve->add_option("--particles", solve_args.particles, "Swarm size");
  solve->add_option("--iterations", solve_args.iterations, "Maximum iterations");
  solve->add_flag("--dump-region", solve_args.dump_region, "Also write region.json");

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive search over all candidates");
  add_common_flags(oracle, oracle_args);
  oracle->add_option("--cap", oracle_args.cap, "Maximum candidate count");

  std::string los_scenario;
  std::vector<double> los_uav;
  std::vector<double> los_ue;
  CLI::App* los = app.add_subcommand("los-check", "Classify one link as LoS or NLoS");
  los->add_option("--scenario", los_scenario, "Scenario JSON path")->required();
  los->add_option("--uav", los_uav, "Aerial point x y z (m)")->expected(3)->required();
  los->add_option("--ue", los_ue, "Ground point x y z (m)")->expected(3)->required();

  std::string eval_scenario;
  std::vector<double> eval_uav;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Per-UE link metrics at a position");
  evaluate->add_option("--scenario", eval_scenario, "Scenario JSON path")->required();
  evaluate->add_option("--uav", eval_uav, "Aerial point x y z (m)")->expected(3)->required();

  std::string gen_template;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Write a benchmark scenario");
  gen->add_option("--template", gen_template, "Template name")->required();
  gen->add_option("--seed", gen_seed, "Generation seed");
  gen->add_option("--out", gen_out, "Output file (default <template>.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    emit_error_json("UsageError", e.what(), 1);
    return 1;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args, command);
    if (oracle->parsed()) return run_oracle(oracle_args, command);
    if (los->parsed()) return run_los_check(los_scenario, los_uav, los_ue);
    if (evaluate->parsed()) return run_evaluate(eval_scenario, eval_uav);
    if (gen->parsed()) return run_gen(gen_template, gen_seed, gen_out);
  } catch (const uavp::Error& e) {
    emit_error_json(e.kind(), e.what(), static_cast<int>(e.exit_code()));
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    emit_error_json("InternalError", e.what(), 1);
    return 1;
  }
  return 0;
}
