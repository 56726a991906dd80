// SPDX-License-Identifier: Apache-2.0
#include "uavplace/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "uavplace/errors.hpp"
#include "uavplace/parallel.hpp"

namespace uavp {
namespace {

struct SliceScan {
  std::size_t max_cardinality{0};
  // Distinct covered sets of slice-maximal cardinality, with the number of
  // lattice points realizing each. std::map keeps deterministic order.
  std::map<std::vector<int>, std::size_t> sets;
};

struct SliceCollect {
  std::vector<Point3> candidates;
  std::size_t min_ix{0}, max_ix{0}, min_iy{0}, max_iy{0};
  bool any{false};
};

double covered2(const CoverageSphere& sph, const Point3& p) {
  const double dx = p.x - sph.center.x;
  const double dy = p.y - sph.center.y;
  const double dz = p.z - sph.center.z;
  return dx * dx + dy * dy + dz * dz;
}

bool covers(const CoverageSphere& sph, const Point3& p) {
  return covered2(sph, p) <= sph.radius_m * sph.radius_m;
}

}  // namespace

GridSpec make_grid(const VenueBounds& venue, double step) {
  GridSpec g;
  g.origin = {venue.x_min, venue.y_min, venue.z_min};
  g.step = step;
  // The 1e-9 slack keeps spans that are exact multiples of the step from
  // losing their last lattice plane to rounding.
  g.nx = static_cast<std::size_t>(std::floor((venue.x_max - venue.x_min) / step + 1e-9)) + 1;
  g.ny = static_cast<std::size_t>(std::floor((venue.y_max - venue.y_min) / step + 1e-9)) + 1;
  g.nz = static_cast<std::size_t>(std::floor((venue.z_max - venue.z_min) / step + 1e-9)) + 1;
  return g;
}

std::vector<CoverageSphere> build_spheres(const Scenario& s, bool assume_los) {
  std::vector<CoverageSphere> spheres;
  spheres.reserve(s.users.size());
  for (const UserEquipment& ue : s.users) {
    CoverageSphere sph;
    sph.ue_id = ue.id;
    sph.center = ue.position;
    sph.demand_bps = ue.demand_bps;
    const double snr_req = required_snr(ue.demand_bps, s.mcs_table);
    sph.radius_m = max_distance(s.link_budget, snr_req, assume_los);
    spheres.push_back(sph);
  }
  return spheres;
}

FeasibleRegion select_region(std::span<const CoverageSphere> spheres, const Scenario& s,
                             unsigned threads) {
  const GridSpec grid = make_grid(s.venue, s.grid_step_m);

  // Spheres in ascending id order so covered sets come out sorted.
  std::vector<CoverageSphere> ordered(spheres.begin(), spheres.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const CoverageSphere& a, const CoverageSphere& b) { return a.ue_id < b.ue_id; });

  // Pass 1: find the maximum covered-set cardinality and every distinct set
  // realizing it. Slices are scanned independently and merged in order, so
  // the thread count cannot influence the outcome.
  std::vector<SliceScan> slices(grid.nz);
  parallel_for(grid.nz, threads, [&](std::size_t iz) {
    SliceScan& out = slices[iz];
    std::vector<int> ids;
    ids.reserve(ordered.size());
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      for (std::size_t ix = 0; ix < grid.nx; ++ix) {
        const Point3 p = grid.point(ix, iy, iz);
        ids.clear();
        for (const CoverageSphere& sph : ordered) {
          if (covers(sph, p)) ids.push_back(sph.ue_id);
        }
        if (ids.empty() || ids.size() < out.max_cardinality) continue;
        if (ids.size() > out.max_cardinality) {
          out.max_cardinality = ids.size();
          out.sets.clear();
        }
        ++out.sets[ids];
      }
    }
  });

  std::size_t best_cardinality = 0;
  for (const SliceScan& sl : slices) best_cardinality = std::max(best_cardinality, sl.max_cardinality);
  if (best_cardinality == 0) {
    throw EmptyRegion("no lattice point is covered by any coverage sphere");
  }

  std::map<std::vector<int>, std::size_t> contenders;
  for (const SliceScan& sl : slices) {
    if (sl.max_cardinality != best_cardinality) continue;
    for (const auto& [set, count] : sl.sets) contenders[set] += count;
  }

  std::map<int, double> demand_by_id;
  for (const CoverageSphere& sph : ordered) demand_by_id[sph.ue_id] = sph.demand_bps;
  auto demand_sum = [&demand_by_id](const std::vector<int>& set) {
    double sum = 0.0;
    for (const int id : set) sum += demand_by_id.at(id);
    return sum;
  };

  // Map order is lexicographic, so scanning with strict improvement makes
  // the final tie fall to the lexicographically smallest id set.
  const std::vector<int>* chosen = nullptr;
  double chosen_demand = -1.0;
  std::size_t chosen_count = 0;
  for (const auto& [set, count] : contenders) {
    const double d = demand_sum(set);
    if (chosen == nullptr || d > chosen_demand ||
        (d == chosen_demand && count > chosen_count)) {
      chosen = &set;
      chosen_demand = d;
      chosen_count = count;
    }
  }

  FeasibleRegion region;
  region.associated_ues = *chosen;
  region.grid_step_m = s.grid_step_m;
  region.grid = grid;
  region.occupancy.assign(grid.cell_count(), 0);

  std::vector<const CoverageSphere*> required;
  std::vector<const CoverageSphere*> excluded;
  for (const CoverageSphere& sph : ordered) {
    const bool in_set = std::binary_search(region.associated_ues.begin(),
                                           region.associated_ues.end(), sph.ue_id);
    (in_set ? required : excluded).push_back(&sph);
  }

  // Pass 2: collect every lattice point whose covered set equals the chosen
  // association. Equality, not superset: an extra covered user would have
  // produced a larger cardinality in pass 1.
  std::vector<SliceCollect> collected(grid.nz);
  parallel_for(grid.nz, threads, [&](std::size_t iz) {
    SliceCollect& out = collected[iz];
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      for (std::size_t ix = 0; ix < grid.nx; ++ix) {
        const Point3 p = grid.point(ix, iy, iz);
        bool ok = true;
        for (const CoverageSphere* sph : required) {
          if (!covers(*sph, p)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (const CoverageSphere* sph : excluded) {
          if (covers(*sph, p)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        region.occupancy[grid.cell(ix, iy, iz)] = 1;
        out.candidates.push_back(p);
        if (!out.any) {
          out.min_ix = out.max_ix = ix;
          out.min_iy = out.max_iy = iy;
          out.any = true;
        } else {
          out.min_ix = std::min(out.min_ix, ix);
          out.max_ix = std::max(out.max_ix, ix);
          out.min_iy = std::min(out.min_iy, iy);
          out.max_iy = std::max(out.max_iy, iy);
        }
      }
    }
  });

  bool first = true;
  for (std::size_t iz = 0; iz < grid.nz; ++iz) {
    const SliceCollect& sl = collected[iz];
    if (!sl.any) continue;
    region.candidates.insert(region.candidates.end(), sl.candidates.begin(), sl.candidates.end());
    if (first) {
      region.min_ix = sl.min_ix;
      region.max_ix = sl.max_ix;
      region.min_iy = sl.min_iy;
      region.max_iy = sl.max_iy;
      region.min_iz = region.max_iz = iz;
      first = false;
    } else {
      region.min_ix = std::min(region.min_ix, sl.min_ix);
      region.max_ix = std::max(region.max_ix, sl.max_ix);
      region.min_iy = std::min(region.min_iy, sl.min_iy);
      region.max_iy = std::max(region.max_iy, sl.max_iy);
      region.max_iz = iz;
    }
  }
  return region;
}

RegionReport region_report(const FeasibleRegion& region, std::span<const CoverageSphere> spheres) {
  RegionReport report;
  report.candidate_count = region.candidates.size();
  report.associated_ues = region.associated_ues;
  for (const CoverageSphere& sph : spheres) {
    if (!std::binary_search(region.associated_ues.begin(), region.associated_ues.end(),
                            sph.ue_id)) {
      report.uncovered_ues.push_back(sph.ue_id);
    }
  }
  std::sort(report.uncovered_ues.begin(), report.uncovered_ues.end());

  report.bbox_min = {std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity()};
  report.bbox_max = {-std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()};
  for (const Point3& p : region.candidates) {
    report.bbox_min.x = std::min(report.bbox_min.x, p.x);
    report.bbox_min.y = std::min(report.bbox_min.y, p.y);
    report.bbox_min.z = std::min(report.bbox_min.z, p.z);
    report.bbox_max.x = std::max(report.bbox_max.x, p.x);
    report.bbox_max.y = std::max(report.bbox_max.y, p.y);
    report.bbox_max.z = std::max(report.bbox_max.z, p.z);
  }
  return report;
}

Point3 nearest_candidate(const FeasibleRegion& region, const Point3& target) {
  if (region.candidates.empty()) {
    throw EmptyCandidateSet("projection needs a non-empty candidate set");
  }
  const GridSpec& g = region.grid;
  auto snap = [&g](double value, double origin, std::size_t lo, std::size_t hi) {
    const double raw = std::round((value - origin) / g.step);
    const double clamped = std::clamp(raw, static_cast<double>(lo), static_cast<double>(hi));
    return static_cast<long long>(clamped);
  };
  const long long sx = snap(target.x, g.origin.x, region.min_ix, region.max_ix);
  const long long sy = snap(target.y, g.origin.y, region.min_iy, region.max_iy);
  const long long sz = snap(target.z, g.origin.z, region.min_iz, region.max_iz);

  // Any cell at Chebyshev index distance r from the snapped cell is at least
  // r*step - m away in Euclidean terms, where m bounds the offset between
  // the target and the snapped cell along any axis.
  const Point3 snapped = g.point(static_cast<std::size_t>(sx), static_cast<std::size_t>(sy),
                                 static_cast<std::size_t>(sz));
  const double m = std::max({std::abs(target.x - snapped.x), std::abs(target.y - snapped.y),
                             std::abs(target.z - snapped.z)});

  const long long r_max = std::max(
      {sx - static_cast<long long>(region.min_ix), static_cast<long long>(region.max_ix) - sx,
       sy - static_cast<long long>(region.min_iy), static_cast<long long>(region.max_iy) - sy,
       sz - static_cast<long long>(region.min_iz), static_cast<long long>(region.max_iz) - sz});

  double best_d2 = std::numeric_limits<double>::infinity();
  Point3 best{};
  auto consider = [&](long long ix, long long iy, long long iz) {
    if (ix < static_cast<long long>(region.min_ix) || ix > static_cast<long long>(region.max_ix) ||
        iy < static_cast<long long>(region.min_iy) || iy > static_cast<long long>(region.max_iy) ||
        iz < static_cast<long long>(region.min_iz) || iz > static_cast<long long>(region.max_iz)) {
      return;
    }
    const auto ux = static_cast<std::size_t>(ix);
    const auto uy = static_cast<std::size_t>(iy);
    const auto uz = static_cast<std::size_t>(iz);
    if (!region.occupancy[g.cell(ux, uy, uz)]) return;
    const Point3 p = g.point(ux, uy, uz);
    const double d2 = norm2(p - target);
    if (d2 < best_d2 || (d2 == best_d2 && lex_less(p, best))) {
      best_d2 = d2;
      best = p;
    }
  };

  for (long long r = 0; r <= r_max; ++r) {
    if (best_d2 < std::numeric_limits<double>::infinity()) {
      const double reach = static_cast<double>(r) * g.step - m;
      if (reach > 0.0 && reach * reach > best_d2) break;
    }
    for (long long dx = -r; dx <= r; ++dx) {
      for (long long dy = -r; dy <= r; ++dy) {
        if (std::max(std::abs(dx), std::abs(dy)) == r) {
          for (long long dz = -r; dz <= r; ++dz) consider(sx + dx, sy + dy, sz + dz);
        } else {
          consider(sx + dx, sy + dy, sz - r);
          if (r > 0) consider(sx + dx, sy + dy, sz + r);
        }
      }
    }
  }
  return best;
}

}  // namespace uavp
