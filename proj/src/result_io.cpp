// SPDX-License-Identifier: Apache-2.0
#include "uavplace/result_io.hpp"

#include <cmath>
#include <map>

#include "uavplace/scenario_io.hpp"

namespace uavp {
namespace {

using nlohmann::json;

json point_json(const Point3& p) {
  return json{{"x_m", p.x}, {"y_m", p.y}, {"z_m", p.z}};
}

// Shortest round-trip decimal form, shared with the JSON writer so the CSV
// is byte-stable too.
std::string number_text(double v) { return json(v).dump(); }

json per_ue_json(const std::vector<LinkMetrics>& links, const std::map<int, double>& demands) {
  json rows = json::array();
  for (const LinkMetrics& link : links) {
    rows.push_back(json{{"ue_id", link.ue_id},
                        {"distance_m", link.distance_m},
                        {"los", link.los},
                        {"snr_linear", link.snr_linear},
                        {"snr_db", 10.0 * std::log10(link.snr_linear)},
                        {"capacity_bps", link.capacity_bps},
                        {"served_bps", link.served_bps},
                        {"demand_bps", demands.at(link.ue_id)},
                        {"demand_met", link.demand_met}});
  }
  return rows;
}

json aggregate_json(const std::vector<LinkMetrics>& links, const Scenario& s) {
  double served = 0.0;
  double capacity_sum = 0.0;
  int los_count = 0;
  for (const LinkMetrics& link : links) {
    served += link.served_bps;
    capacity_sum += link.capacity_bps;
    if (link.los) ++los_count;
  }
  const bool violated = s.link_budget.channel_capacity_cap_bps.has_value() &&
                        capacity_sum > *s.link_budget.channel_capacity_cap_bps;
  return json{{"served_bps", served},
              {"capacity_sum_bps", capacity_sum},
              {"c_max_violated", violated},
              {"los_count", los_count}};
}

}  // namespace

json result_to_json(const PlacementResult& result, const RegionReport& report,
                    double grid_step_m, const Scenario& s) {
  std::map<int, double> demands;
  for (const UserEquipment& ue : s.users) demands[ue.id] = ue.demand_bps;

  json ranking = json::array();
  for (const RankedPosition& ranked : result.optimal_positions) {
    ranking.push_back(json{{"position", point_json(ranked.position)},
                           {"fitness_bps", ranked.fitness_bps},
                           {"los_count", ranked.los_count},
                           {"mean_ue_distance_m", ranked.mean_ue_distance_m},
                           {"per_ue", per_ue_json(ranked.links, demands)}});
  }

  json region{{"candidate_count", report.candidate_count},
              {"associated_ues", report.associated_ues},
              {"uncovered_ues", report.uncovered_ues},
              {"grid_step_m", grid_step_m}};
  if (report.candidate_count > 0) {
    region["bbox_min"] = point_json(report.bbox_min);
    region["bbox_max"] = point_json(report.bbox_max);
  } else {
    region["bbox_min"] = nullptr;
    region["bbox_max"] = nullptr;
  }

  json doc{{"schema", kResultSchema},
           {"slot", result.slot},
           {"g_best", point_json(result.g_best)},
           {"fitness_bps", result.g_best_fitness_bps},
           {"iterations_run", result.iterations_run},
           {"early_stopped", result.early_stopped},
           {"fitness_history_bps", result.fitness_history_bps},
           {"associated_ues", result.associated_ues},
           {"ranking", ranking},
           {"region", region}};
  if (!result.optimal_positions.empty()) {
    doc["per_ue"] = per_ue_json(result.optimal_positions.front().links, demands);
    doc["aggregate"] = aggregate_json(result.optimal_positions.front().links, s);
  } else {
    doc["per_ue"] = json::array();
    doc["aggregate"] = nullptr;
  }
  return doc;
}

std::string result_to_csv(const PlacementResult& result) {
  std::string csv = "x_m,y_m,z_m,fitness_bps,los_count\n";
  for (const RankedPosition& ranked : result.optimal_positions) {
    csv += number_text(ranked.position.x);
    csv += ',';
    csv += number_text(ranked.position.y);
    csv += ',';
    csv += number_text(ranked.position.z);
    csv += ',';
    csv += number_text(ranked.fitness_bps);
    csv += ',';
    csv += std::to_string(ranked.los_count);
    csv += '\n';
  }
  return csv;
}

json manifest_to_json(const RunManifest& manifest) {
  json timings = json::object();
  for (const auto& [stage, ms] : manifest.timings_ms) timings[stage] = ms;
  return json{{"tool", manifest.tool},
              {"version", manifest.version},
              {"command", manifest.command},
              {"scenario_path", manifest.scenario_path},
              {"scenario_fnv1a64", manifest.scenario_fnv1a64},
              {"effective_config", manifest.effective_config},
              {"timings_ms", timings}};
}

void write_result(const PlacementResult& result, const RegionReport& report,
                  double grid_step_m, const Scenario& s,
                  const std::filesystem::path& json_path) {
  const json doc = result_to_json(result, report, grid_step_m, s);
  write_text_file(json_path, doc.dump(2) + "\n");
  std::filesystem::path csv_path = json_path;
  csv_path.replace_extension(".csv");
  write_text_file(csv_path, result_to_csv(result));
}

}  // namespace uavp
