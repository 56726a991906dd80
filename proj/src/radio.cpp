// SPDX-License-Identifier: Apache-2.0
#include "uavplace/radio.hpp"

#include <cmath>
#include <numbers>

#include "uavplace/errors.hpp"

namespace uavp {
namespace {

// (4*pi)^2 of the free-space path loss denominator.
const double kFourPiSq = 16.0 * std::numbers::pi * std::numbers::pi;

}  // namespace

double distance_m(const Point3& a, const Point3& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

double loss_factor(bool los, double nlos_extra_loss_db) {
  return los ? 1.0 : db_to_linear(nlos_extra_loss_db);
}

double snr(const LinkBudget& lb, double distance, bool los) {
  if (!(distance > 0.0)) throw ZeroDistance("snr needs a positive separation");
  const double lambda = lb.wavelength_m();
  const double numerator = lb.tx_power_w * lb.tx_gain * lb.rx_gain * lambda * lambda;
  const double denominator = kFourPiSq * distance * distance *
                             loss_factor(los, lb.nlos_extra_loss_db) * lb.noise_floor_w;
  return numerator / denominator;
}

double capacity_bps(const LinkBudget& lb, double snr_linear) {
  return lb.bandwidth_hz * std::log2(1.0 + snr_linear);
}

double required_snr(double demand_bps, std::span<const McsEntry> table) {
  for (const McsEntry& e : table) {
    if (e.rate_bps >= demand_bps) return e.min_snr_linear;
  }
  throw DemandExceedsTable("demand exceeds the highest MCS rate");
}

double max_distance(const LinkBudget& lb, double snr_req, bool los_assumed) {
  const double lambda = lb.wavelength_m();
  const double numerator = lb.tx_power_w * lb.tx_gain * lb.rx_gain * lambda * lambda;
  const double denominator =
      kFourPiSq * loss_factor(los_assumed, lb.nlos_extra_loss_db) * lb.noise_floor_w * snr_req;
  return std::sqrt(numerator / denominator);
}

LinkEvaluation evaluate_links(const Point3& uav, const Scenario& s,
                              std::span<const PrismMesh> meshes) {
  LinkEvaluation eval;
  eval.links.reserve(s.users.size());
  for (const UserEquipment& ue : s.users) {
    LinkMetrics m;
    m.ue_id = ue.id;
    m.distance_m = distance_m(uav, ue.position);
    m.los = has_los(uav, ue.position, meshes);
    m.snr_linear = snr(s.link_budget, m.distance_m, m.los);
    m.capacity_bps = capacity_bps(s.link_budget, m.snr_linear);
    m.demand_met = m.capacity_bps >= ue.demand_bps;
    m.served_bps = m.demand_met ? ue.demand_bps : m.capacity_bps;
    eval.links.push_back(m);
    eval.served_bps += m.served_bps;
    eval.capacity_sum_bps += m.capacity_bps;
  }
  if (s.link_budget.channel_capacity_cap_bps) {
    eval.c_max_violated = eval.capacity_sum_bps > *s.link_budget.channel_capacity_cap_bps;
  }
  return eval;
}

}  // namespace uavp
