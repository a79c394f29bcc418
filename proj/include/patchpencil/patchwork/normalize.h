#pragma once

#include <string>
#include <vector>

#include "patchpencil/exactalg/bipoly.h"
#include "patchpencil/polygon/subdivision.h"

namespace patchpencil::patchwork {

using exactalg::BiPoly;
using exactalg::Rat;

struct Piece {
  std::string label;
  BiPoly poly;
  polygon::Polygon cell;
};

/// P(X, Y) -> c * P(lambda X, mu Y) with lambda, mu > 0 and c of either sign.
struct Scaling {
  Rat c = 1;
  Rat lambda = 1;
  Rat mu = 1;
};

BiPoly apply(const Scaling& s, const BiPoly& p);

/// Finds per-piece scalings making the truncations of neighbouring pieces to
/// their shared edge identical. Scalings propagate along a spanning tree of
/// the adjacency graph, rooted at the first piece of each component with the
/// identity; remaining edges are verified. Throws Inconsistent naming the
/// edge (or the cycle through it) when no scaling exists.
std::vector<Scaling> normalize_pieces(const std::vector<Piece>& pieces, const polygon::Subdivision& s);

/// Pieces with their scalings applied.
std::vector<Piece> normalized(const std::vector<Piece>& pieces, const std::vector<Scaling>& scalings);

}  // namespace patchpencil::patchwork
