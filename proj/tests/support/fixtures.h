#pragma once

#include <string>

#include "patchpencil/polygon/subdivision.h"

namespace fixture {

using patchpencil::polygon::LatticePoint;
using patchpencil::polygon::Polygon;
using patchpencil::polygon::Subdivision;

/// Outer triangle (0,0),(6,0),(0,6) around the inner triangle (1,1),(4,1),(1,4),
/// with the three quadrilaterals between them cut by diagonals twisting the
/// same way: the standard non-regular triangulation. flip_one turns one
/// diagonal the other way, which makes it regular.
inline Subdivision pinwheel(bool flip_one = false) {
  const LatticePoint A[3] = {{0, 0}, {6, 0}, {0, 6}};
  const LatticePoint B[3] = {{1, 1}, {4, 1}, {1, 4}};
  Subdivision s{Polygon::hull({A[0], A[1], A[2]}), {}};
  s.cells.push_back({"inner", Polygon::hull({B[0], B[1], B[2]})});
  for (int i = 0; i < 3; ++i) {
    const int k = (i + 1) % 3;
    if (flip_one && i == 0) {
      s.cells.push_back({"a" + std::to_string(i), Polygon::hull({A[i], A[k], B[i]})});
      s.cells.push_back({"b" + std::to_string(i), Polygon::hull({A[k], B[k], B[i]})});
    } else {
      s.cells.push_back({"a" + std::to_string(i), Polygon::hull({A[i], A[k], B[k]})});
      s.cells.push_back({"b" + std::to_string(i), Polygon::hull({A[i], B[k], B[i]})});
    }
  }
  return s;
}

}  // namespace fixture
