#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "patchpencil/exactalg/unipoly.h"
#include "patchpencil/polygon/polygon.h"

namespace patchpencil::obstruct {

using exactalg::Rat;
using exactalg::UniPoly;
using polygon::SurfaceParams;

enum class Letter { T, R };

char to_char(Letter l);

/// T: a real fiber met at a single point with multiplicity d.
/// R: a real fiber met in d distinct real points.
struct WordEntry {
  Letter kind;
  Rat position;
};

struct EventWord {
  std::vector<WordEntry> entries;

  std::string to_string() const;  // "T T R ..."
};

/// Entries must be non-empty with strictly increasing positions.
void validate(const EventWord& w);

/// Parses letters T/R separated by whitespace or commas. Without positions
/// the entries sit at 1, 2, ...; only their order matters.
EventWord parse_event_word(const std::string& letters,
                           const std::optional<std::vector<Rat>>& positions = std::nullopt);

/// Y^d + a_2(X) Y^{d-2} + ... + a_d(X); coeffs[0] is a_2.
struct NormalForm {
  int d = 0;
  std::vector<UniPoly> coeffs;

  /// The fiber polynomial in Y over X = x.
  UniPoly fiber(const Rat& x) const;
};

/// d >= 2, d - 1 coefficients, deg a_j <= n j + l.
void validate(const NormalForm& f, const SurfaceParams& s);

struct A2Check {
  bool real_rooted = false;  // d roots counted with multiplicity
  bool consistent = false;
  Rat a2;
  bool equality_case = false;  // q == Y^d
};

/// For monic q = Y^d + 0 Y^{d-1} + a_2 Y^{d-2} + ...: when q is real-rooted,
/// a_2 <= 0 with equality exactly for Y^d.
A2Check lemma_a2_check(const UniPoly& q);

/// Degree bound on a_2 for curves of the given bidegree: 2n + l.
long a2_degree_bound(const SurfaceParams& s);

/// Lower bound on the number of real roots of a_2 (with multiplicity) that
/// the word forces: one per T, plus one per pair of consecutive R entries
/// with an odd number of T between them.
long min_roots_required(const EventWord& w);

enum class Outcome { Infeasible, NoObstruction };

std::string to_string(Outcome o);

struct Verdict {
  Outcome outcome;
  long degree_bound = 0;
  long min_roots = 0;
  std::vector<Rat> forced_zeros;
  std::vector<std::pair<Rat, Rat>> odd_gaps;
};

/// Infeasible iff min_roots > degree_bound. A word without R entries
/// reports min_roots 0 (a_2 may vanish identically). NoObstruction is not a
/// realizability claim.
Verdict decide(const SurfaceParams& s, const EventWord& w);

nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace patchpencil::obstruct
