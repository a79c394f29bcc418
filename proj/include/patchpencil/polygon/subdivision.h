#pragma once

#include <string>
#include <vector>

#include <json.hpp>
#include "patchpencil/polygon/polygon.h"

namespace patchpencil::polygon {

struct Cell {
  std::string label;
  Polygon polygon;
};

struct Subdivision {
  Polygon target;
  std::vector<Cell> cells;

  const Cell& cell(const std::string& label) const;
};

/// Throws a Precondition error unless the cells are 2-dimensional, lie in
/// the target, have pairwise disjoint interiors and cover its area.
void validate_subdivision(const Subdivision& s);

/// Fan of six triangles with apex (0,d) over the base points
/// 0, 1, d-1, d, d+1, 2d-1, 2d, labeled P1, C, P2, P3, Ctilde, P4.
Subdivision fan_subdivision(int d);

nlohmann::json to_json(const Subdivision& s);
Subdivision subdivision_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Polygon& p);
Polygon polygon_from_json(const nlohmann::json& j);

}  // namespace patchpencil::polygon
