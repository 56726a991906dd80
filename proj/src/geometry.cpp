// SPDX-License-Identifier: Apache-2.0
#include "uavplace/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "uavplace/errors.hpp"

namespace uavp {
namespace {

// Twice-area threshold below which an ear candidate counts as degenerate.
constexpr double kMinEarArea2 = 1e-12;
// Determinant threshold below which a segment is parallel to a triangle.
constexpr double kDetEps = 1e-12;

double orient2(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orient_sign(const Point2& a, const Point2& b, const Point2& c) {
  const double v = orient2(a, b, c);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool within_bbox(const Point2& a, const Point2& b, const Point2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Any contact between the two closed segments, including collinear overlap.
bool segments_touch(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2) {
  const int o1 = orient_sign(p1, p2, q1);
  const int o2 = orient_sign(p1, p2, q2);
  const int o3 = orient_sign(q1, q2, p1);
  const int o4 = orient_sign(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && within_bbox(p1, p2, q1)) return true;
  if (o2 == 0 && within_bbox(p1, p2, q2)) return true;
  if (o3 == 0 && within_bbox(q1, q2, p1)) return true;
  if (o4 == 0 && within_bbox(q1, q2, p2)) return true;
  return false;
}

double point_segment_dist2(const Point2& a, const Point2& b, const Point2& p) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  const double qx = a.x + t * dx;
  const double qy = a.y + t * dy;
  return (p.x - qx) * (p.x - qx) + (p.y - qy) * (p.y - qy);
}

// Closed point-in-triangle test for a counter-clockwise triangle, with a
// small slack so boundary contact rejects the ear (conservative).
bool triangle_contains(const Point2& a, const Point2& b, const Point2& c, const Point2& p) {
  return orient2(a, b, p) >= -kMinEarArea2 && orient2(b, c, p) >= -kMinEarArea2 &&
         orient2(c, a, p) >= -kMinEarArea2;
}

// True when no mesh triangle can meet the segment: the 2D projection misses
// the padded footprint bounding box, or the segment stays above the roof
// wherever its projection overlaps the box. z is linear in t, so its minimum
// over the clipped interval is attained at an interval endpoint.
bool broad_phase_may_block(const Segment3& s, const PrismMesh& m) {
  constexpr double pad = 1e-6;
  const double lox = m.min_x - pad;
  const double hix = m.max_x + pad;
  const double loy = m.min_y - pad;
  const double hiy = m.max_y + pad;

  double t0 = 0.0;
  double t1 = 1.0;
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  auto clip = [&t0, &t1](double p, double q) {
    if (p == 0.0) return q >= 0.0;
    const double r = q / p;
    if (p < 0.0) {
      if (r > t1) return false;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return false;
      if (r < t1) t1 = r;
    }
    return true;
  };
  if (!clip(-dx, s.a.x - lox)) return false;
  if (!clip(dx, hix - s.a.x)) return false;
  if (!clip(-dy, s.a.y - loy)) return false;
  if (!clip(dy, hiy - s.a.y)) return false;

  const double dz = s.b.z - s.a.z;
  const double za = s.a.z + t0 * dz;
  const double zb = s.a.z + t1 * dz;
  return std::min(za, zb) <= m.height + pad;
}

bool mesh_blocks(const Segment3& s, const PrismMesh& m) {
  for (const Triangle3& tri : m.triangles) {
    if (segment_intersects_triangle(s, tri)) return true;
  }
  return false;
}

}  // namespace

double polygon_signed_area2(std::span<const Point2> poly) {
  double acc = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    acc += a.x * b.y - b.x * a.y;
  }
  return acc;
}

bool polygon_is_simple(std::span<const Point2> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    if (a.x == b.x && a.y == b.y) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    const Point2& c = poly[(i + 2) % n];
    // A spike folding back along the incoming edge is a self-overlap that
    // the non-adjacent pair scan below cannot see.
    if (orient_sign(a, b, c) == 0 && (c.x - b.x) * (b.x - a.x) + (c.y - b.y) * (b.y - a.y) < 0.0) {
      return false;
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n])) return false;
    }
  }
  return true;
}

PointLocation locate_point(const Point2& p, std::span<const Point2> poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (point_segment_dist2(poly[i], poly[(i + 1) % n], p) <= kOnEdgeEps * kOnEdgeEps) {
      return PointLocation::kBoundary;
    }
  }
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside ? PointLocation::kInside : PointLocation::kOutside;
}

std::vector<std::array<int, 3>> triangulate_polygon(std::span<const Point2> poly) {
  const std::size_t n = poly.size();
  if (n < 3) throw DegenerateFootprint("footprint needs at least 3 corners");

  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  if (polygon_signed_area2(poly) < 0.0) std::reverse(v.begin(), v.end());

  std::vector<std::array<int, 3>> tris;
  tris.reserve(n - 2);
  while (v.size() > 3) {
    bool clipped = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const int ip = v[(i + v.size() - 1) % v.size()];
      const int iv = v[i];
      const int in = v[(i + 1) % v.size()];
      if (orient2(poly[ip], poly[iv], poly[in]) <= kMinEarArea2) continue;
      bool ear = true;
      for (const int other : v) {
        if (other == ip || other == iv || other == in) continue;
        if (triangle_contains(poly[ip], poly[iv], poly[in], poly[other])) {
          ear = false;
          break;
        }
      }
      if (!ear) continue;
      tris.push_back({ip, iv, in});
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
      break;
    }
    if (!clipped) throw DegenerateFootprint("footprint has no clippable ear");
  }
  if (orient2(poly[v[0]], poly[v[1]], poly[v[2]]) <= kMinEarArea2) {
    throw DegenerateFootprint("footprint collapses to collinear corners");
  }
  tris.push_back({v[0], v[1], v[2]});
  return tris;
}

PrismMesh triangulate(const PolygonPrism& prism) {
  if (prism.height <= 0.0) throw DegenerateFootprint("prism height must be > 0");
  const auto& c = prism.bottom_corners;
  const auto cap = triangulate_polygon(c);
  const std::size_t n = c.size();

  PrismMesh m;
  m.source = prism;
  m.height = prism.height;
  m.min_x = m.min_y = std::numeric_limits<double>::infinity();
  m.max_x = m.max_y = -std::numeric_limits<double>::infinity();
  for (const Point2& p : c) {
    m.min_x = std::min(m.min_x, p.x);
    m.max_x = std::max(m.max_x, p.x);
    m.min_y = std::min(m.min_y, p.y);
    m.max_y = std::max(m.max_y, p.y);
  }

  auto bot = [&c](int i) { return Point3{c[static_cast<std::size_t>(i)].x, c[static_cast<std::size_t>(i)].y, 0.0}; };
  auto top = [&c, &prism](int i) {
    return Point3{c[static_cast<std::size_t>(i)].x, c[static_cast<std::size_t>(i)].y, prism.height};
  };

  m.triangles.reserve(4 * n - 4);
  for (std::size_t i = 0; i < n; ++i) {
    const int a = static_cast<int>(i);
    const int b = static_cast<int>((i + 1) % n);
    m.triangles.push_back({bot(a), bot(b), top(b)});
    m.triangles.push_back({bot(a), top(b), top(a)});
  }
  for (const auto& t : cap) {
    m.triangles.push_back({bot(t[0]), bot(t[2]), bot(t[1])});
    m.triangles.push_back({top(t[0]), top(t[1]), top(t[2])});
  }
  return m;
}

std::vector<PrismMesh> triangulate_all(std::span<const PolygonPrism> prisms) {
  std::vector<PrismMesh> meshes;
  meshes.reserve(prisms.size());
  for (const PolygonPrism& p : prisms) meshes.push_back(triangulate(p));
  return meshes;
}

bool segment_intersects_triangle(const Segment3& seg, const Triangle3& tri) {
  const Vec3 dir = seg.b - seg.a;
  const Vec3 e1 = tri.v1 - tri.v0;
  const Vec3 e2 = tri.v2 - tri.v0;
  const Vec3 pv = cross(dir, e2);
  const double det = dot(e1, pv);
  if (std::abs(det) < kDetEps) return false;
  const double inv = 1.0 / det;
  const Vec3 tv = seg.a - tri.v0;
  const double u = dot(tv, pv) * inv;
  if (u < -kBaryEps) return false;
  const Vec3 qv = cross(tv, e1);
  const double v = dot(dir, qv) * inv;
  if (v < -kBaryEps || u + v > 1.0 + kBaryEps) return false;
  const double t = dot(e2, qv) * inv;
  return t > kParamEps && t < 1.0 - kParamEps;
}

bool has_los(const Point3& a, const Point3& b, std::span<const PrismMesh> meshes) {
  const Segment3 s{a, b};
  for (const PrismMesh& m : meshes) {
    if (!broad_phase_may_block(s, m)) continue;
    if (mesh_blocks(s, m)) return false;
  }
  return true;
}

bool has_los_exhaustive(const Point3& a, const Point3& b, std::span<const PrismMesh> meshes) {
  const Segment3 s{a, b};
  for (const PrismMesh& m : meshes) {
    if (mesh_blocks(s, m)) return false;
  }
  return true;
}

std::vector<int> blocking_prisms(const Point3& a, const Point3& b,
                                 std::span<const PrismMesh> meshes) {
  const Segment3 s{a, b};
  std::vector<int> ids;
  for (const PrismMesh& m : meshes) {
    if (mesh_blocks(s, m)) ids.push_back(m.source.id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace uavp
