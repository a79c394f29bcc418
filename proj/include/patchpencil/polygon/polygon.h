#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "patchpencil/exactalg/bipoly.h"

namespace patchpencil::polygon {

struct LatticePoint {
  long i = 0;
  long j = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Closed lattice segment; a == b denotes a single point.
struct Edge {
  LatticePoint a;
  LatticePoint b;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Twice the signed area of the triangle (o, a, b).
long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b);

/// Convex lattice polygon, counterclockwise, no three consecutive vertices
/// collinear, rotated to start at its lexicographically smallest vertex.
/// Points (one vertex) and segments (two vertices) are representable.
class Polygon {
 public:
  /// Convex hull of a nonempty point set.
  static Polygon hull(std::vector<LatticePoint> points);
  /// Takes the vertex list verbatim after checking convexity and
  /// orientation; throws on clockwise or collinear input.
  static Polygon from_vertices(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  /// 0 for a point, 1 for a segment, 2 otherwise.
  int dimension() const { return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1; }
  long twice_area() const;
  std::vector<Edge> edges() const;
  bool contains(const LatticePoint& p) const;
  bool contains(const Polygon& other) const;
  bool has_edge(const Edge& e) const;

  std::string to_string() const;
  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  explicit Polygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}
  std::vector<LatticePoint> vertices_;
};

/// Rank of a Hirzebruch surface and the bidegree of a curve on it.
struct SurfaceParams {
  long n = 0;
  long k = 1;
  long l = 0;
};

void validate(const SurfaceParams& s);

exactalg::Exponent to_exponent(const LatticePoint& p);
LatticePoint to_point(const exactalg::Exponent& e);

/// Convex hull of the support of a nonzero polynomial.
Polygon newton_polygon(const exactalg::BiPoly& p);

/// The polygon (0,0), (nk+l, 0), (l, k), (0, k) carrying the equations of
/// bidegree (k, l) curves on the n-th Hirzebruch surface.
Polygon sigma_polygon(const SurfaceParams& s);

/// Terms of p supported on the closed segment e. The line through e must
/// support the Newton polygon of p (all of the support on one side).
exactalg::BiPoly edge_truncation(const exactalg::BiPoly& p, const Edge& e);

/// 1-dimensional intersection of two polygons' boundaries, if any.
std::optional<Edge> shared_edge(const Polygon& a, const Polygon& b);

/// Interiors of two 2-dimensional convex polygons are disjoint.
bool interiors_disjoint(const Polygon& a, const Polygon& b);

}  // namespace patchpencil::polygon
