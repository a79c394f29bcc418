#include "patchpencil/polygon/polygon.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "patchpencil/error.h"

namespace patchpencil::polygon {

using exactalg::BiPoly;

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.i - o.i) * (b.j - o.j) - (a.j - o.j) * (b.i - o.i);
}

namespace {

void rotate_to_min(std::vector<LatticePoint>& v) {
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
}

bool on_segment(const LatticePoint& p, const Edge& e) {
  if (cross(e.a, e.b, p) != 0) return false;
  return std::min(e.a.i, e.b.i) <= p.i && p.i <= std::max(e.a.i, e.b.i) && std::min(e.a.j, e.b.j) <= p.j &&
         p.j <= std::max(e.a.j, e.b.j);
}

}  // namespace

Polygon Polygon::hull(std::vector<LatticePoint> pts) {
  if (pts.empty()) fail(ErrorKind::Precondition, "convex hull of an empty point set");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return Polygon(pts);
  // Andrew's monotone chain, strict turns only.
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  rotate_to_min(h);
  return Polygon(h);
}

Polygon Polygon::from_vertices(std::vector<LatticePoint> v) {
  if (v.empty()) fail(ErrorKind::Precondition, "polygon needs at least one vertex");
  if (v.size() == 2 && v[0] == v[1]) fail(ErrorKind::Precondition, "repeated polygon vertex");
  if (v.size() >= 3) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
      if (cross(v[i], v[(i + 1) % n], v[(i + 2) % n]) <= 0)
        fail(ErrorKind::Precondition, "polygon vertices must be convex, counterclockwise and non-collinear");
    // A convex CCW turn sequence could still wind more than once.
    long winding_area = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) winding_area += cross(v[0], v[i], v[i + 1]);
    Polygon probe = hull(v);
    if (probe.vertices().size() != n || probe.twice_area() != winding_area)
      fail(ErrorKind::Precondition, "polygon vertices do not form a simple convex polygon");
  }
  if (v.size() == 2) std::sort(v.begin(), v.end());
  rotate_to_min(v);
  return Polygon(v);
}

long Polygon::twice_area() const {
  long a = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % n];
    a += p.i * q.j - q.i * p.j;
  }
  return a;
}

std::vector<Edge> Polygon::edges() const {
  std::vector<Edge> out;
  if (vertices_.size() == 2) out.push_back({vertices_[0], vertices_[1]});
  if (vertices_.size() >= 3)
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      out.push_back({vertices_[i], vertices_[(i + 1) % vertices_.size()]});
  return out;
}

bool Polygon::contains(const LatticePoint& p) const {
  if (vertices_.size() == 1) return p == vertices_[0];
  if (vertices_.size() == 2) return on_segment(p, {vertices_[0], vertices_[1]});
  for (const auto& e : edges())
    if (cross(e.a, e.b, p) < 0) return false;
  return true;
}

bool Polygon::contains(const Polygon& other) const {
  return std::all_of(other.vertices_.begin(), other.vertices_.end(), [&](const auto& p) { return contains(p); });
}

bool Polygon::has_edge(const Edge& e) const {
  for (const auto& f : edges())
    if (f == e || (f.a == e.b && f.b == e.a)) return true;
  return false;
}

std::string Polygon::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    os << (i ? ", " : "") << "(" << vertices_[i].i << "," << vertices_[i].j << ")";
  os << "]";
  return os.str();
}

void validate(const SurfaceParams& s) {
  if (s.n < 0 || s.l < 0 || s.k < 1)
    fail(ErrorKind::Precondition, "surface parameters need n >= 0, k >= 1, l >= 0");
}

exactalg::Exponent to_exponent(const LatticePoint& p) {
  return {static_cast<int>(p.i), static_cast<int>(p.j)};
}

LatticePoint to_point(const exactalg::Exponent& e) { return {e.first, e.second}; }

Polygon newton_polygon(const BiPoly& p) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "Newton polygon of the zero polynomial");
  std::vector<LatticePoint> pts;
  for (const auto& e : p.support()) pts.push_back(to_point(e));
  return Polygon::hull(std::move(pts));
}

Polygon sigma_polygon(const SurfaceParams& s) {
  validate(s);
  return Polygon::hull({{0, 0}, {s.n * s.k + s.l, 0}, {s.l, s.k}, {0, s.k}});
}

BiPoly edge_truncation(const BiPoly& p, const Edge& e) {
  std::map<exactalg::Exponent, exactalg::Rat> kept;
  if (e.a == e.b) {
    const auto c = p.coeff(static_cast<int>(e.a.i), static_cast<int>(e.a.j));
    if (c != 0) kept.emplace(to_exponent(e.a), c);
    return BiPoly(kept);
  }
  bool left = false, right = false;
  for (const auto& [ex, c] : p.terms()) {
    const LatticePoint q = to_point(ex);
    const long s = cross(e.a, e.b, q);
    left = left || s > 0;
    right = right || s < 0;
    if (on_segment(q, e)) kept.emplace(ex, c);
  }
  if (left && right) fail(ErrorKind::Precondition, "edge does not support the Newton polygon");
  return BiPoly(kept);
}

std::optional<Edge> shared_edge(const Polygon& a, const Polygon& b) {
  for (const auto& e : a.edges()) {
    for (const auto& f : b.edges()) {
      if (cross(e.a, e.b, f.a) != 0 || cross(e.a, e.b, f.b) != 0) continue;
      // Collinear: intersect the parameter ranges along e.
      const LatticePoint dir{e.b.i - e.a.i, e.b.j - e.a.j};
      auto param = [&](const LatticePoint& p) { return (p.i - e.a.i) * dir.i + (p.j - e.a.j) * dir.j; };
      const long len = param(e.b);
      long f0 = param(f.a), f1 = param(f.b);
      LatticePoint p0 = f.a, p1 = f.b;
      if (f0 > f1) {
        std::swap(f0, f1);
        std::swap(p0, p1);
      }
      const long lo = std::max(0L, f0), hi = std::min(len, f1);
      if (lo >= hi) continue;
      const LatticePoint start = lo == 0 ? e.a : p0;
      const LatticePoint end = hi == len ? e.b : p1;
      return Edge{start, end};
    }
  }
  return std::nullopt;
}

bool interiors_disjoint(const Polygon& a, const Polygon& b) {
  if (a.dimension() < 2 || b.dimension() < 2) return true;
  auto separates = [](const Edge& e, const Polygon& other) {
    return std::all_of(other.vertices().begin(), other.vertices().end(),
                       [&](const auto& p) { return cross(e.a, e.b, p) <= 0; });
  };
  for (const auto& e : a.edges())
    if (separates(e, b)) return true;
  for (const auto& e : b.edges())
    if (separates(e, a)) return true;
  return false;
}

}  // namespace patchpencil::polygon
