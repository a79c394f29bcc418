#include "patchpencil/polygon/subdivision.h"

#include "patchpencil/error.h"

namespace patchpencil::polygon {

const Cell& Subdivision::cell(const std::string& label) const {
  for (const auto& c : cells)
    if (c.label == label) return c;
  fail(ErrorKind::Precondition, "no cell labeled " + label);
}

void validate_subdivision(const Subdivision& s) {
  if (s.target.dimension() < 2) fail(ErrorKind::Precondition, "subdivision target must be 2-dimensional");
  if (s.cells.empty()) fail(ErrorKind::Precondition, "subdivision has no cells");
  long area = 0;
  for (std::size_t a = 0; a < s.cells.size(); ++a) {
    const auto& c = s.cells[a];
    if (c.polygon.dimension() < 2) fail(ErrorKind::Precondition, "cell " + c.label + " is degenerate");
    if (!s.target.contains(c.polygon)) fail(ErrorKind::Precondition, "cell " + c.label + " leaves the target");
    area += c.polygon.twice_area();
    for (std::size_t b = 0; b < a; ++b)
      if (!interiors_disjoint(c.polygon, s.cells[b].polygon))
        fail(ErrorKind::Precondition, "cells " + s.cells[b].label + " and " + c.label + " overlap");
  }
  // Disjoint interiors inside the target plus equal area means the cells cover it.
  if (area != s.target.twice_area()) fail(ErrorKind::Precondition, "cells do not cover the target");
}

Subdivision fan_subdivision(int d) {
  if (d < 3) fail(ErrorKind::Precondition, "the fan subdivision needs d >= 3");
  const long D = d;
  const LatticePoint apex{0, D};
  const std::vector<long> base{0, 1, D - 1, D, D + 1, 2 * D - 1, 2 * D};
  const std::vector<std::string> labels{"P1", "C", "P2", "P3", "Ctilde", "P4"};
  Subdivision s{Polygon::hull({{0, 0}, {2 * D, 0}, apex}), {}};
  for (std::size_t i = 0; i < labels.size(); ++i)
    s.cells.push_back({labels[i], Polygon::hull({{base[i], 0}, {base[i + 1], 0}, apex})});
  validate_subdivision(s);
  return s;
}

nlohmann::json to_json(const Polygon& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : p.vertices()) out.push_back({v.i, v.j});
  return out;
}

Polygon polygon_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "polygon must be an array of [i, j] pairs");
  std::vector<LatticePoint> pts;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
      fail(ErrorKind::Parse, "polygon vertex must be an integer pair");
    pts.push_back({v[0].get<long>(), v[1].get<long>()});
  }
  try {
    return Polygon::from_vertices(pts);
  } catch (const Error& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

nlohmann::json to_json(const Subdivision& s) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : s.cells) cells.push_back({{"label", c.label}, {"vertices", to_json(c.polygon)}});
  return {{"target", to_json(s.target)}, {"cells", cells}};
}

Subdivision subdivision_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("target") || !j.contains("cells") || !j["cells"].is_array())
    fail(ErrorKind::Parse, "subdivision must have target and cells");
  Subdivision s{polygon_from_json(j["target"]), {}};
  for (const auto& c : j["cells"]) {
    if (!c.is_object() || !c.contains("vertices")) fail(ErrorKind::Parse, "cell must have vertices");
    std::string label = c.contains("label") && c["label"].is_string() ? c["label"].get<std::string>()
                                                                       : "cell" + std::to_string(s.cells.size());
    s.cells.push_back({label, polygon_from_json(c["vertices"])});
  }
  return s;
}

}  // namespace patchpencil::polygon
