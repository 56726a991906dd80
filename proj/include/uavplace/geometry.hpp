// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace uavp {

// Open-interval tolerance for segment-triangle hits: contacts with parametric
// t outside (kParamEps, 1 - kParamEps) are endpoint grazing and do not block.
inline constexpr double kParamEps = 1e-9;
// Slack on barycentric coordinates so hits exactly on triangle edges that are
// interior to a face pair are not lost to rounding.
inline constexpr double kBaryEps = 1e-9;
// Perpendicular distance (meters) below which a point counts as lying on a
// polygon edge. Boundary points classify as inside (conservative for blockage).
inline constexpr double kOnEdgeEps = 1e-9;

struct Point2 {
  double x{0.0};
  double y{0.0};
};

struct Point3 {
  double x{0.0};
  double y{0.0};
  double z{0.0};
};

using Vec3 = Point3;

inline Vec3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline bool operator==(const Point3& a, const Point3& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

// Lexicographic (x, y, z) order, used for deterministic tie-breaking.
inline bool lex_less(const Point3& a, const Point3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

// Directed segment between two distinct points.
struct Segment3 {
  Point3 a;
  Point3 b;
};

struct Triangle3 {
  Point3 v0;
  Point3 v1;
  Point3 v2;
};

// Extruded building: a simple polygon footprint on the ground plane and a
// positive height. Top corners are always derived, never stored.
struct PolygonPrism {
  int id{0};
  std::vector<Point2> bottom_corners;
  double height{0.0};
};

// Watertight triangle mesh of one prism plus the cached bounds the broad
// phase needs. `source` keeps the originating prism for reporting.
struct PrismMesh {
  std::vector<Triangle3> triangles;
  PolygonPrism source;
  double min_x{0.0}, max_x{0.0};
  double min_y{0.0}, max_y{0.0};
  double height{0.0};
};

// Twice the signed area of the polygon; positive for counter-clockwise order.
double polygon_signed_area2(std::span<const Point2> poly);

// True when no two non-adjacent edges touch and no edge has zero length.
bool polygon_is_simple(std::span<const Point2> poly);

enum class PointLocation { kOutside, kBoundary, kInside };

// Even-odd classification with an explicit boundary band of kOnEdgeEps.
PointLocation locate_point(const Point2& p, std::span<const Point2> poly);

// Boundary counts as inside.
inline bool point_in_polygon(const Point2& p, std::span<const Point2> poly) {
  return locate_point(p, poly) != PointLocation::kOutside;
}

// Ear-clipping triangulation. Returns index triples into `poly`, oriented
// counter-clockwise. Throws DegenerateFootprint when no ear exists.
std::vector<std::array<int, 3>> triangulate_polygon(std::span<const Point2> poly);

// Builds the closed surface mesh: two triangles per lateral face and
// triangulated top and bottom caps (n corners yield 4n - 4 triangles).
PrismMesh triangulate(const PolygonPrism& prism);

std::vector<PrismMesh> triangulate_all(std::span<const PolygonPrism> prisms);

// Watertight Moeller-Trumbore segment test. Endpoint contact, parallel
// segments and grazing within the epsilon band report no intersection.
bool segment_intersects_triangle(const Segment3& seg, const Triangle3& tri);

// True when the open segment between `a` and `b` crosses no mesh triangle.
// A bounding-box broad phase skips meshes that provably cannot intersect;
// it never changes the answer.
bool has_los(const Point3& a, const Point3& b, std::span<const PrismMesh> meshes);

// Narrow-phase-only variant used to audit the broad phase.
bool has_los_exhaustive(const Point3& a, const Point3& b, std::span<const PrismMesh> meshes);

// Ids of every prism whose mesh blocks the segment, ascending.
std::vector<int> blocking_prisms(const Point3& a, const Point3& b,
                                 std::span<const PrismMesh> meshes);

}  // namespace uavp
