// SPDX-License-Identifier: Apache-2.0
#include "uavplace/scenario_gen.hpp"

#include <stdexcept>

#include "uavplace/errors.hpp"
#include "uavplace/rng.hpp"

namespace uavp {
namespace {

LinkBudget template_link_budget(double nlos_loss_db) {
  LinkBudget lb;
  lb.frequency_mhz = kDefaultFrequencyMhz;
  lb.bandwidth_mhz = kDefaultBandwidthMhz;
  lb.tx_power_dbm = kDefaultTxPowerDbm;
  lb.tx_gain_dbi = kDefaultAntennaGainDbi;
  lb.rx_gain_dbi = kDefaultAntennaGainDbi;
  lb.noise_floor_dbm = kDefaultNoiseFloorDbm;
  lb.frequency_hz = lb.frequency_mhz * 1e6;
  lb.bandwidth_hz = lb.bandwidth_mhz * 1e6;
  lb.tx_power_w = dbm_to_watts(lb.tx_power_dbm);
  lb.tx_gain = db_to_linear(lb.tx_gain_dbi);
  lb.rx_gain = db_to_linear(lb.rx_gain_dbi);
  lb.noise_floor_w = dbm_to_watts(lb.noise_floor_dbm);
  lb.nlos_extra_loss_db = nlos_loss_db;
  return lb;
}

PolygonPrism rectangle(int id, double x0, double y0, double x1, double y1, double height) {
  PolygonPrism prism;
  prism.id = id;
  prism.bottom_corners = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  prism.height = height;
  return prism;
}

// Three buildings around an open center corridor; the tallest reaches the
// flight floor.
std::vector<PolygonPrism> fig3_buildings() {
  std::vector<PolygonPrism> buildings;
  buildings.push_back(rectangle(1, 15.0, 55.0, 40.0, 75.0, 12.0));
  buildings.push_back(rectangle(2, 60.0, 15.0, 85.0, 35.0, 15.0));
  PolygonPrism ell;
  ell.id = 3;
  ell.bottom_corners = {{15.0, 15.0}, {35.0, 15.0}, {35.0, 25.0},
                        {25.0, 25.0}, {25.0, 35.0}, {15.0, 35.0}};
  ell.height = 9.0;
  buildings.push_back(ell);
  return buildings;
}

// Spread around the buildings with clearance from every footprint, so a
// well-placed aerial point sees all of them at once.
const std::vector<Point2>& fig3_ue_xy() {
  static const std::vector<Point2> xy = {{8.0, 45.0},  {50.0, 50.0}, {92.0, 45.0},
                                         {50.0, 88.0}, {22.0, 92.0}, {78.0, 62.0},
                                         {90.0, 88.0}, {45.0, 8.0}};
  return xy;
}

// Six low-demand users cluster in the open corridor; the two highest-demand
// users sit in the far corner where their small coverage radii cannot reach
// the flight floor.
const std::vector<Point2>& fig3c_ue_xy() {
  static const std::vector<Point2> xy = {{10.0, 50.0}, {50.0, 50.0}, {45.0, 30.0},
                                         {55.0, 60.0}, {40.0, 40.0}, {45.0, 45.0},
                                         {92.0, 92.0}, {95.0, 95.0}};
  return xy;
}

std::size_t ladder_index(const ScenarioTemplate& tpl, std::size_t ue_index,
                         std::size_t table_size) {
  std::size_t idx = tpl.ladder_wrap > 0
                        ? ue_index % static_cast<std::size_t>(tpl.ladder_wrap)
                        : ue_index;
  idx += static_cast<std::size_t>(tpl.ladder_offset);
  if (idx >= table_size) {
    throw ValidationError("ladder index " + std::to_string(idx) +
                          " exceeds the rate table of size " + std::to_string(table_size));
  }
  return idx;
}

void assign_demands(const ScenarioTemplate& tpl, Scenario& s) {
  const std::vector<McsEntry>& table = s.mcs_table;
  for (std::size_t i = 0; i < s.users.size(); ++i) {
    std::size_t idx = 0;
    switch (tpl.pattern) {
      case DemandPattern::kUniform:
        idx = 0;
        break;
      case DemandPattern::kTwoTier:
        idx = i < s.users.size() / 2 ? 1 : 0;
        break;
      case DemandPattern::kLadder:
        idx = ladder_index(tpl, i, table.size());
        break;
    }
    s.users[i].demand_mbps = table[idx].rate_mbps;
    s.users[i].demand_bps = table[idx].rate_bps;
  }
}

void fill_fixed_layout(const ScenarioTemplate& tpl, Scenario& s) {
  if (tpl.ue_count > 8) {
    throw ValidationError("fixed layouts define at most 8 user positions");
  }
  s.buildings = fig3_buildings();
  const std::vector<Point2>& xy =
      tpl.building_layout == "fig3c" ? fig3c_ue_xy() : fig3_ue_xy();
  for (std::size_t i = 0; i < tpl.ue_count; ++i) {
    UserEquipment ue;
    ue.id = static_cast<int>(i) + 1;
    ue.position = {xy[i].x, xy[i].y, 0.0};
    s.users.push_back(ue);
  }
  s.venue.x_min = 0.0;
  s.venue.x_max = 100.0;
  s.venue.y_min = 0.0;
  s.venue.y_max = 100.0;
  s.venue.z_min = s.tallest_building_m();
  s.venue.z_max = s.venue.z_min + tpl.z_span_m;
}

void fill_scatter_layout(const ScenarioTemplate& tpl, Scenario& s, RandomStream& rs) {
  const double extent = tpl.venue_xy_m;
  for (std::size_t b = 0; b < tpl.building_count; ++b) {
    const double cx = rs.uniform(5.0, extent - 5.0);
    const double cy = rs.uniform(5.0, extent - 5.0);
    const double half_w = rs.uniform(1.5, 4.0);
    const double half_h = rs.uniform(1.5, 4.0);
    const double height = rs.uniform(4.0, 10.0);
    s.buildings.push_back(rectangle(static_cast<int>(b) + 1, cx - half_w, cy - half_h,
                                    cx + half_w, cy + half_h, height));
  }
  for (std::size_t i = 0; i < tpl.ue_count; ++i) {
    UserEquipment ue;
    ue.id = static_cast<int>(i) + 1;
    for (int guard = 0;; ++guard) {
      if (guard >= 10000) throw std::logic_error("scatter placement failed to find open ground");
      const double x = rs.uniform(kUeMarginM, extent - kUeMarginM);
      const double y = rs.uniform(kUeMarginM, extent - kUeMarginM);
      bool clear = true;
      for (const PolygonPrism& prism : s.buildings) {
        if (locate_point({x, y}, prism.bottom_corners) != PointLocation::kOutside) {
          clear = false;
          break;
        }
      }
      if (clear) {
        ue.position = {x, y, 0.0};
        break;
      }
    }
    s.users.push_back(ue);
  }
  s.venue.x_min = 0.0;
  s.venue.x_max = extent;
  s.venue.y_min = 0.0;
  s.venue.y_max = extent;
  s.venue.z_min = s.tallest_building_m();
  s.venue.z_max = s.venue.z_min + tpl.z_span_m;
}

}  // namespace

std::vector<McsEntry> measured_mcs_table() {
  const double rates_mbps[] = {58.5, 117.0, 175.5, 234.0, 351.0, 468.0, 526.5, 585.0, 702.0};
  const double snr_db[] = {15.0, 18.0, 20.0, 22.0, 24.0, 26.0, 35.0, 37.0, 40.0};
  std::vector<McsEntry> table;
  for (int i = 0; i < 9; ++i) {
    McsEntry entry;
    entry.index = i;
    entry.rate_mbps = rates_mbps[i];
    entry.rate_bps = rates_mbps[i] * 1e6;
    entry.min_snr_db = snr_db[i];
    entry.min_snr_linear = db_to_linear(snr_db[i]);
    table.push_back(entry);
  }
  return table;
}

Scenario generate(const ScenarioTemplate& tpl, std::uint64_t seed) {
  Scenario s;
  s.slot = 0;
  s.grid_step_m = kDefaultGridStepM;
  s.link_budget = template_link_budget(tpl.nlos_loss_db);
  s.mcs_table =
      tpl.measured_mcs ? measured_mcs_table() : default_mcs_table(s.link_budget.bandwidth_hz);

  RandomStream rs(seed);
  if (tpl.building_layout == "fig3" || tpl.building_layout == "fig3c") {
    fill_fixed_layout(tpl, s);
  } else if (tpl.building_layout == "scatter") {
    fill_scatter_layout(tpl, s, rs);
  } else {
    throw ValidationError("unknown building layout: " + tpl.building_layout);
  }
  assign_demands(tpl, s);
  validate_scenario(s);
  return s;
}

const std::vector<ScenarioTemplate>& scenario_templates() {
  static const std::vector<ScenarioTemplate> templates = [] {
    std::vector<ScenarioTemplate> all;

    ScenarioTemplate a;
    a.name = "usecase_a";
    a.pattern = DemandPattern::kUniform;
    a.building_layout = "fig3";
    a.nlos_loss_db = 30.0;
    all.push_back(a);

    ScenarioTemplate b = a;
    b.name = "usecase_b";
    b.pattern = DemandPattern::kTwoTier;
    all.push_back(b);

    ScenarioTemplate c;
    c.name = "usecase_c";
    c.pattern = DemandPattern::kLadder;
    c.building_layout = "fig3c";
    c.nlos_loss_db = 30.0;
    c.measured_mcs = true;
    all.push_back(c);

    ScenarioTemplate c_alt = c;
    c_alt.name = "usecase_c_alt";
    c_alt.ladder_offset = 1;
    all.push_back(c_alt);

    ScenarioTemplate small;
    small.name = "random_small";
    small.pattern = DemandPattern::kLadder;
    small.building_layout = "scatter";
    small.venue_xy_m = 30.0;
    small.z_span_m = 4.0;
    small.building_count = 3;
    // Wrapping at four rungs mixes venue-wide spheres with ones a few
    // metres across, so region selection has real trade-offs to make.
    small.ladder_wrap = 4;
    all.push_back(small);

    ScenarioTemplate medium = small;
    medium.name = "random_medium";
    medium.venue_xy_m = 56.0;
    medium.z_span_m = 10.0;
    medium.building_count = 5;
    all.push_back(medium);

    return all;
  }();
  return templates;
}

const ScenarioTemplate& template_by_name(const std::string& name) {
  for (const ScenarioTemplate& tpl : scenario_templates()) {
    if (tpl.name == name) return tpl;
  }
  throw ValidationError("unknown scenario template: " + name);
}

}  // namespace uavp
