#include "patchpencil/patchwork/glue.h"

#include <algorithm>
#include <future>

#include "patchpencil/error.h"

namespace patchpencil::patchwork {

using polygon::LatticePoint;

std::vector<std::string> LScheme::word() const {
  std::vector<std::string> out;
  for (const auto& e : events) {
    if (e.kind == EventKind::MaxTangency) out.push_back("T");
    if (e.kind == EventKind::AllReal) out.push_back("R");
  }
  return out;
}

std::string LScheme::word_string() const {
  std::string s;
  for (const auto& w : word()) s += (s.empty() ? "" : " ") + w;
  return s;
}

std::vector<ProfiledPiece> profile_pieces(const std::vector<Piece>& pieces, long refine_budget) {
  std::vector<std::future<FiberProfile>> neg, pos;
  for (const auto& p : pieces) {
    neg.push_back(std::async(std::launch::async, [&p, refine_budget] {
      return fiber_profile(p.poly, Half::Negative, refine_budget);
    }));
    pos.push_back(std::async(std::launch::async, [&p, refine_budget] {
      return fiber_profile(p.poly, Half::Positive, refine_budget);
    }));
  }
  std::vector<ProfiledPiece> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    try {
      out.push_back({pieces[i], neg[i].get(), pos[i].get()});
    } catch (const Error& e) {
      throw Error(e.kind(), "piece " + pieces[i].label + ": " + e.what());
    }
  }
  return out;
}

namespace {

// Left base point of a fan triangle, validating the shape.
long base_left(const polygon::Polygon& cell, int d, const std::string& label) {
  const auto& v = cell.vertices();
  std::vector<long> base;
  bool apex = false;
  for (const auto& p : v) {
    if (p == LatticePoint{0, d})
      apex = true;
    else if (p.j == 0)
      base.push_back(p.i);
  }
  if (v.size() != 3 || !apex || base.size() != 2)
    fail(ErrorKind::Precondition, "cell " + label + " is not a fan triangle with apex (0," + std::to_string(d) + ")");
  return std::min(base[0], base[1]);
}

void append(LScheme& s, const ProfiledPiece& p, int band, const FiberProfile& prof, const std::string& where) {
  if (!s.generic_counts.empty() && s.generic_counts.back() != prof.generic_counts.front())
    fail(ErrorKind::Inconsistent, "generic real-root count jumps " + where + " (band of " + p.piece.label + ")");
  if (s.generic_counts.empty()) s.generic_counts.push_back(prof.generic_counts.front());
  for (std::size_t k = 0; k < prof.events.size(); ++k) {
    const auto& e = prof.events[k];
    s.events.push_back({band, prof.half, e.kind, e.order, p.piece.label, e.position});
    s.generic_counts.push_back(prof.generic_counts[k + 1]);
  }
}

}  // namespace

LScheme glue_lscheme(const std::vector<ProfiledPiece>& input, int d) {
  if (input.empty()) fail(ErrorKind::Precondition, "nothing to glue");
  std::vector<std::pair<long, std::size_t>> order;
  for (std::size_t i = 0; i < input.size(); ++i) {
    const auto& p = input[i];
    if (p.negative.half != Half::Negative || p.positive.half != Half::Positive)
      fail(ErrorKind::Precondition, "profiles of " + p.piece.label + " are attached to the wrong halves");
    order.emplace_back(base_left(p.piece.cell, d, p.piece.label), i);
  }
  std::sort(order.begin(), order.end());
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto& prev = input[order[k - 1].second].piece.cell.vertices();
    long prev_right = 0;
    for (const auto& v : prev) prev_right = std::max(prev_right, v.i);
    if (order[k].first < prev_right)
      fail(ErrorKind::Precondition, "base segments of " + input[order[k - 1].second].piece.label + " and " +
                                        input[order[k].second].piece.label + " overlap");
  }

  LScheme s;
  const int n = static_cast<int>(order.size());
  for (int band = n - 1; band >= 0; --band) {
    const auto& p = input[order[band].second];
    append(s, p, band, p.negative, "between negative bands");
  }
  s.zero_index = s.events.size();
  for (int band = 0; band < n; ++band) {
    const auto& p = input[order[band].second];
    append(s, p, band, p.positive, band == 0 ? "across 0" : "between positive bands");
  }
  return s;
}

nlohmann::json to_json(const LScheme& s) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& e : s.events)
    events.push_back({{"band", e.band},
                      {"side", to_string(e.side)},
                      {"kind", to_string(e.kind)},
                      {"order", e.order},
                      {"source", e.source},
                      {"position", exactalg::to_json(e.position)}});
  return {{"events", events}, {"generic_counts", s.generic_counts}, {"zero_index", s.zero_index},
          {"word", s.word_string()}};
}

LScheme lscheme_from_json(const nlohmann::json& j) {
  try {
    LScheme s;
    for (const auto& e : j.at("events"))
      s.events.push_back({e.at("band").get<int>(), half_from_string(e.at("side").get<std::string>()),
                          event_kind_from_string(e.at("kind").get<std::string>()), e.at("order").get<int>(),
                          e.at("source").get<std::string>(), exactalg::algebraic_from_json(e.at("position"))});
    s.generic_counts = j.at("generic_counts").get<std::vector<int>>();
    s.zero_index = j.at("zero_index").get<std::size_t>();
    if (s.generic_counts.size() != s.events.size() + 1 || s.zero_index > s.events.size())
      fail(ErrorKind::Parse, "scheme counts do not match its events");
    return s;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed scheme document: ") + e.what());
  }
}

}  // namespace patchpencil::patchwork
