// SPDX-License-Identifier: Apache-2.0
#include "uavplace/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "uavplace/errors.hpp"

namespace uavp {
namespace {

constexpr std::array<double, 9> kDefaultRatesMbps = {58.5,  117.0, 175.5, 234.0, 351.0,
                                                     468.0, 526.5, 585.0, 702.0};

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

std::vector<McsEntry> default_mcs_table(double bandwidth_hz) {
  std::vector<McsEntry> table;
  table.reserve(kDefaultRatesMbps.size());
  for (std::size_t i = 0; i < kDefaultRatesMbps.size(); ++i) {
    McsEntry e;
    e.index = static_cast<int>(i);
    e.rate_mbps = kDefaultRatesMbps[i];
    e.rate_bps = e.rate_mbps * 1e6;
    e.min_snr_linear = std::exp2(e.rate_bps / bandwidth_hz) - 1.0;
    e.min_snr_db = linear_to_db(e.min_snr_linear);
    table.push_back(e);
  }
  return table;
}

void validate_scenario(const Scenario& s) {
  require(!s.users.empty(), "users: must not be empty");

  const LinkBudget& lb = s.link_budget;
  require(finite(lb.frequency_hz) && lb.frequency_hz > 0.0, "radio.frequency_mhz: must be > 0");
  require(finite(lb.bandwidth_hz) && lb.bandwidth_hz > 0.0, "radio.bandwidth_mhz: must be > 0");
  require(finite(lb.tx_power_w) && lb.tx_power_w > 0.0, "radio.tx_power_dbm: must be finite");
  require(finite(lb.tx_gain) && lb.tx_gain > 0.0, "radio.tx_gain_dbi: must be finite");
  require(finite(lb.rx_gain) && lb.rx_gain > 0.0, "radio.rx_gain_dbi: must be finite");
  require(finite(lb.noise_floor_w) && lb.noise_floor_w > 0.0,
          "radio.noise_floor_dbm: must be finite");
  require(finite(lb.nlos_extra_loss_db) && lb.nlos_extra_loss_db >= 0.0,
          "radio.nlos_loss_db: must be >= 0");
  if (lb.channel_capacity_cap_bps) {
    require(finite(*lb.channel_capacity_cap_bps) && *lb.channel_capacity_cap_bps > 0.0,
            "c_max_mbps: must be > 0");
  }

  require(finite(s.grid_step_m) && s.grid_step_m > 0.0, "grid_step_m: must be > 0");
  require(s.slot >= 0, "slot: must be >= 0");

  for (std::size_t i = 0; i < s.buildings.size(); ++i) {
    const PolygonPrism& b = s.buildings[i];
    const std::string at = "buildings[" + std::to_string(i) + "]";
    require(b.bottom_corners.size() >= 3, at + ".bottom_corners: needs at least 3 corners");
    for (const Point2& c : b.bottom_corners) {
      require(finite(c.x) && finite(c.y), at + ".bottom_corners: coordinates must be finite");
    }
    require(finite(b.height) && b.height > 0.0, at + ".height: must be > 0");
    require(polygon_is_simple(b.bottom_corners),
            at + ".bottom_corners: footprint must be a simple polygon");
  }

  require(!s.mcs_table.empty(), "mcs_table: must not be empty");
  for (std::size_t i = 0; i < s.mcs_table.size(); ++i) {
    const McsEntry& e = s.mcs_table[i];
    const std::string at = "mcs_table[" + std::to_string(i) + "]";
    require(finite(e.rate_bps) && e.rate_bps > 0.0, at + ".rate_mbps: must be > 0");
    require(finite(e.min_snr_linear) && e.min_snr_linear > 0.0, at + ".min_snr_db: must be finite");
    if (i > 0) {
      require(e.rate_bps > s.mcs_table[i - 1].rate_bps,
              at + ".rate_mbps: rates must be strictly ascending");
      require(e.min_snr_linear > s.mcs_table[i - 1].min_snr_linear,
              at + ".min_snr_db: thresholds must be strictly increasing with rate");
    }
  }

  const VenueBounds& v = s.venue;
  require(finite(v.x_min) && finite(v.x_max) && finite(v.y_min) && finite(v.y_max) &&
              finite(v.z_min) && finite(v.z_max),
          "venue: bounds must be finite");
  require(v.x_min <= v.x_max, "venue: x_min must be <= x_max");
  require(v.y_min <= v.y_max, "venue: y_min must be <= y_max");
  require(v.z_min <= v.z_max, "venue: z_min must be <= z_max");
  require(v.z_min >= s.tallest_building_m(),
          "venue: z_min must be at least the tallest building height");
  require(v.z_max <= kAltitudeCeilingM, "venue: z_max must be <= the 100 m altitude ceiling");

  const double max_rate = s.mcs_table.back().rate_bps;
  for (std::size_t i = 0; i < s.users.size(); ++i) {
    const UserEquipment& ue = s.users[i];
    const std::string at = "users[" + std::to_string(i) + "]";
    require(finite(ue.position.x) && finite(ue.position.y), at + ": position must be finite");
    require(ue.position.z == 0.0, at + ": users sit on the ground plane (z = 0)");
    require(finite(ue.demand_bps) && ue.demand_bps > 0.0, at + ".demand_mbps: must be > 0");
    for (std::size_t j = 0; j < i; ++j) {
      require(s.users[j].id != ue.id, at + ".id: duplicate user id");
    }
    require(v.x_min <= ue.position.x - kUeMarginM && ue.position.x + kUeMarginM <= v.x_max &&
                v.y_min <= ue.position.y - kUeMarginM && ue.position.y + kUeMarginM <= v.y_max,
            at + ": position must sit inside the x/y bounds with a " +
                std::to_string(static_cast<int>(kUeMarginM)) + " m margin");
    if (ue.demand_bps > max_rate) {
      throw DemandExceedsTable(at + ".demand_mbps: exceeds the highest MCS rate");
    }
    for (std::size_t j = 0; j < s.buildings.size(); ++j) {
      const Point2 p{ue.position.x, ue.position.y};
      require(locate_point(p, s.buildings[j].bottom_corners) != PointLocation::kInside,
              at + ": position lies strictly inside buildings[" + std::to_string(j) + "]");
    }
  }
}

}  // namespace uavp
