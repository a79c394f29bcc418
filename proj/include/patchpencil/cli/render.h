#pragma once

#include <string>

#include "patchpencil/patchwork/glue.h"
#include "patchpencil/polygon/subdivision.h"

namespace patchpencil::cli {

inline constexpr int kCanvasWidth = 800;
inline constexpr int kCanvasHeight = 400;

/// Two-panel SVG: the labeled subdivision on the left, the event strip on
/// the right (T as filled lenses, AllReal as columns of d dots, a tick at 0).
/// Events are spaced by rank, not by position. Output is byte-stable.
std::string render_svg(const patchwork::LScheme& scheme, const polygon::Subdivision& subdivision);

}  // namespace patchpencil::cli
