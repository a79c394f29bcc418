#include "patchpencil/polygon/regularity.h"

#include <array>
#include <set>

#include "patchpencil/error.h"
#include "patchpencil/polygon/exact_lp.h"

namespace patchpencil::polygon {

using exactalg::Rat;

namespace {

// Barycentric coordinates of p with respect to a non-degenerate triangle.
std::array<Rat, 3> barycentric(const std::array<LatticePoint, 3>& t, const LatticePoint& p) {
  const Rat whole = cross(t[0], t[1], t[2]);
  return {Rat(cross(p, t[1], t[2])) / whole, Rat(cross(t[0], p, t[2])) / whole, Rat(cross(t[0], t[1], p)) / whole};
}

std::array<LatticePoint, 3> frame(const Polygon& cell) {
  const auto& v = cell.vertices();
  if (v.size() < 3) fail(ErrorKind::Precondition, "degenerate cell has no affine frame");
  return {v[0], v[1], v[2]};  // consecutive vertices of a strictly convex polygon
}

}  // namespace

Rat lifted_value(const Polygon& cell, const std::map<LatticePoint, Rat>& heights, const LatticePoint& p) {
  const auto t = frame(cell);
  const auto b = barycentric(t, p);
  Rat v = 0;
  for (int k = 0; k < 3; ++k) v += b[k] * heights.at(t[k]);
  return v;
}

RegularityResult is_regular(const Subdivision& s) {
  validate_subdivision(s);
  std::set<LatticePoint> vertex_set;
  for (const auto& c : s.cells) vertex_set.insert(c.polygon.vertices().begin(), c.polygon.vertices().end());
  const std::vector<LatticePoint> verts(vertex_set.begin(), vertex_set.end());
  std::map<LatticePoint, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;

  // Variables: h_v = pos_v - neg_v for each vertex, then the margin t.
  const std::size_t nv = verts.size();
  const std::size_t t_var = 2 * nv;
  LinearProgram lp;
  lp.num_vars = 2 * nv + 1;
  lp.objective.assign(lp.num_vars, Rat(0));
  lp.objective[t_var] = 1;

  // Row for h(p) - affine_A(p), optionally minus t.
  auto bend_row = [&](const Polygon& cell, const LatticePoint& p, bool with_margin) {
    std::vector<Rat> row(lp.num_vars, Rat(0));
    auto add_height = [&](const LatticePoint& q, const Rat& c) {
      row[2 * index.at(q)] += c;
      row[2 * index.at(q) + 1] -= c;
    };
    add_height(p, 1);
    const auto t = frame(cell);
    const auto b = barycentric(t, p);
    for (int k = 0; k < 3; ++k) add_height(t[k], -b[k]);
    if (with_margin) row[t_var] = -1;
    return row;
  };

  for (const auto& c : s.cells) {
    // Every vertex inside the closed cell lies on its lifted plane.
    for (const auto& v : verts) {
      if (!c.polygon.contains(v)) continue;
      const auto t = frame(c.polygon);
      if (v == t[0] || v == t[1] || v == t[2]) continue;
      lp.constraints.push_back({bend_row(c.polygon, v, false), Relation::Equal, 0});
    }
  }
  for (const auto& a : s.cells) {
    for (const auto& b : s.cells) {
      if (&a == &b) continue;
      const auto e = shared_edge(a.polygon, b.polygon);
      if (!e) continue;
      // Vertices of b off the shared line must sit strictly above a's plane.
      for (const auto& v : b.polygon.vertices())
        if (cross(e->a, e->b, v) != 0)
          lp.constraints.push_back({bend_row(a.polygon, v, true), Relation::GreaterEq, 0});
    }
  }
  std::vector<Rat> cap(lp.num_vars, Rat(0));
  cap[t_var] = 1;
  lp.constraints.push_back({cap, Relation::LessEq, 1});

  const auto sol = maximize(lp);
  RegularityResult out;
  if (sol.status != LpStatus::Optimal) fail(ErrorKind::Inconsistent, "regularity program is not solvable");
  out.margin = sol.value;
  out.regular = sol.value > 0;
  if (out.regular)
    for (std::size_t i = 0; i < nv; ++i) out.heights[verts[i]] = sol.x[2 * i] - sol.x[2 * i + 1];
  return out;
}

}  // namespace patchpencil::polygon
