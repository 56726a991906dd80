// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "uavplace/geometry.hpp"

namespace uavp {

// All internal computation runs in linear SI units (W, Hz, bit/s, m).
// Decibel and megaunit forms exist only at the JSON boundary; the parsed
// boundary values are retained verbatim so a rewrite is byte-stable.

inline constexpr double kSpeedOfLightMps = 299792458.0;
// Users must sit at least this far inside the x/y venue bounds; the same
// margin pads derived bounds around the user bounding box.
inline constexpr double kUeMarginM = 2.0;
// Hard ceiling for the top of the deployment volume.
inline constexpr double kAltitudeCeilingM = 100.0;
inline constexpr double kDefaultGridStepM = 1.0;
inline constexpr double kDefaultFrequencyMhz = 5250.0;
inline constexpr double kDefaultBandwidthMhz = 20.0;
inline constexpr double kDefaultTxPowerDbm = 20.0;
inline constexpr double kDefaultAntennaGainDbi = 0.0;
inline constexpr double kDefaultNoiseFloorDbm = -85.0;
inline constexpr double kDefaultNlosLossDb = 20.0;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
inline double dbm_to_watts(double dbm) { return db_to_linear(dbm) / 1000.0; }
inline double watts_to_dbm(double watts) { return linear_to_db(watts * 1000.0); }

// Ground user with a fixed throughput demand for the current slot.
struct UserEquipment {
  int id{0};
  Point3 position;        // z is always 0
  double demand_bps{0.0};
  double demand_mbps{0.0};  // boundary original
};

// Radio parameters shared by every link. noise_floor_w stores the total
// in-band noise power (density-bandwidth product), so bandwidth never enters
// the SNR expression again.
struct LinkBudget {
  double frequency_hz{0.0};
  double bandwidth_hz{0.0};
  double tx_power_w{0.0};
  double tx_gain{1.0};
  double rx_gain{1.0};
  double noise_floor_w{0.0};
  double nlos_extra_loss_db{0.0};
  std::optional<double> channel_capacity_cap_bps;

  // boundary originals
  double frequency_mhz{0.0};
  double bandwidth_mhz{0.0};
  double tx_power_dbm{0.0};
  double tx_gain_dbi{0.0};
  double rx_gain_dbi{0.0};
  double noise_floor_dbm{0.0};
  std::optional<double> c_max_mbps;

  [[nodiscard]] double wavelength_m() const { return kSpeedOfLightMps / frequency_hz; }
};

// One modulation-and-coding rung: the rate it carries and the minimum SNR
// that sustains it.
struct McsEntry {
  int index{0};
  double rate_bps{0.0};
  double min_snr_linear{0.0};

  // boundary originals
  double rate_mbps{0.0};
  double min_snr_db{0.0};
};

// Axis-aligned deployment volume for the aerial access point.
struct VenueBounds {
  double x_min{0.0}, x_max{0.0};
  double y_min{0.0}, y_max{0.0};
  double z_min{0.0}, z_max{0.0};

  [[nodiscard]] bool contains_xy(double x, double y) const {
    return x_min <= x && x <= x_max && y_min <= y && y <= y_max;
  }
  [[nodiscard]] bool contains(const Point3& p) const {
    return contains_xy(p.x, p.y) && z_min <= p.z && p.z <= z_max;
  }
};

// One deployment snapshot: a fixed venue, buildings and user demands for a
// single time slot. Multi-slot traces are handled by solving one scenario
// per slot; `slot` is carried through to the result unchanged.
struct Scenario {
  VenueBounds venue;
  std::vector<PolygonPrism> buildings;
  std::vector<UserEquipment> users;
  LinkBudget link_budget;
  std::vector<McsEntry> mcs_table;
  double grid_step_m{kDefaultGridStepM};
  int slot{0};

  [[nodiscard]] double total_demand_bps() const {
    double sum = 0.0;
    for (const UserEquipment& ue : users) sum += ue.demand_bps;
    return sum;
  }
  [[nodiscard]] double tallest_building_m() const {
    double h = 0.0;
    for (const PolygonPrism& b : buildings) h = std::max(h, b.height);
    return h;
  }
};

// 802.11ac-style rate ladder used when a scenario does not bring its own
// table (Mbit/s): 58.5, 117, 175.5, 234, 351, 468, 526.5, 585, 702.
// Thresholds default to the Shannon inversion 2^(rate/bandwidth) - 1 at the
// scenario bandwidth, the weakest assumption that keeps the rate reachable.
std::vector<McsEntry> default_mcs_table(double bandwidth_hz);

// Throws ValidationError / DemandExceedsTable, naming the first violated
// invariant. Assumes boundary originals are populated.
void validate_scenario(const Scenario& s);

}  // namespace uavp
