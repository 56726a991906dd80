// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "uavplace/scenario.hpp"

namespace uavp {

// Free-space propagation with one scalar obstruction penalty: blocked links
// pay the configured extra loss, nothing else is environment-dependent.

double distance_m(const Point3& a, const Point3& b);

// 1 for line of sight, otherwise the linear form of the extra loss.
double loss_factor(bool los, double nlos_extra_loss_db);

// Linear receive SNR at separation d. Throws ZeroDistance when d <= 0.
double snr(const LinkBudget& lb, double distance, bool los);

// Shannon capacity of the configured bandwidth at the given SNR.
double capacity_bps(const LinkBudget& lb, double snr_linear);

// Threshold of the slowest MCS entry whose rate covers the demand.
// Throws DemandExceedsTable when even the top rate is too slow.
double required_snr(double demand_bps, std::span<const McsEntry> table);

// Largest separation that still delivers snr_req; algebraic inverse of snr().
double max_distance(const LinkBudget& lb, double snr_req, bool los_assumed);

// Per-link outcome at one candidate position.
struct LinkMetrics {
  int ue_id{0};
  double distance_m{0.0};
  bool los{false};
  double snr_linear{0.0};
  double capacity_bps{0.0};
  double served_bps{0.0};  // min(demand, capacity)
  bool demand_met{false};
};

struct LinkEvaluation {
  std::vector<LinkMetrics> links;  // one per user, scenario order
  double served_bps{0.0};          // aggregate fitness
  double capacity_sum_bps{0.0};
  bool c_max_violated{false};

  [[nodiscard]] int los_count() const {
    int n = 0;
    for (const LinkMetrics& l : links) n += l.los ? 1 : 0;
    return n;
  }
};

// Evaluates every user link from one position: LoS test, SNR, capacity,
// served rate min(demand, capacity). The aggregate is the placement fitness.
LinkEvaluation evaluate_links(const Point3& uav, const Scenario& s,
                              std::span<const PrismMesh> meshes);

}  // namespace uavp
