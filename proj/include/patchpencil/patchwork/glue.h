#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "patchpencil/patchwork/normalize.h"
#include "patchpencil/patchwork/profile.h"

namespace patchpencil::patchwork {

struct GluedEvent {
  /// Index of the source piece in base order; band 0 is nearest to 0.
  int band = 0;
  Half side = Half::Positive;
  EventKind kind = EventKind::GenericCount;
  int order = 0;
  std::string source;
  /// Exact position in the source piece's own coordinate.
  AlgebraicNumber position = AlgebraicNumber::rational(0);
};

struct LScheme {
  /// Ordered along the base, negative side first.
  std::vector<GluedEvent> events;
  /// Generic real-root counts before, between and after events.
  std::vector<int> generic_counts;
  /// Index of the first positive-side event (the place of 0).
  std::size_t zero_index = 0;

  /// "T" per MaxTangency and "R" per AllReal event, in order.
  std::vector<std::string> word() const;
  std::string word_string() const;
};

/// Fan pieces (triangles with a common apex (0,d) and bases on the X-axis)
/// with their two half-profiles, in any order.
struct ProfiledPiece {
  Piece piece;
  FiberProfile negative;
  FiberProfile positive;
};

/// Computes both half-profiles of every piece as independent parallel tasks.
std::vector<ProfiledPiece> profile_pieces(const std::vector<Piece>& pieces, long refine_budget = 4096);

/// Scale-ordered concatenation. Pieces are sorted by base segment; the
/// positive events of piece i fill the i-th positive band, its negative
/// events the i-th band counted leftwards from 0, each band keeping the
/// piece's own order. Rejects non-fan input, overlapping bases, and
/// generic counts that disagree across a band boundary or across 0.
LScheme glue_lscheme(const std::vector<ProfiledPiece>& pieces, int d);

nlohmann::json to_json(const LScheme& s);
LScheme lscheme_from_json(const nlohmann::json& j);

}  // namespace patchpencil::patchwork
