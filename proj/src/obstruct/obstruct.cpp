#include "patchpencil/obstruct/obstruct.h"

#include <sstream>

#include "patchpencil/error.h"
#include "patchpencil/exactalg/rational.h"
#include "patchpencil/exactalg/sturm.h"

namespace patchpencil::obstruct {

char to_char(Letter l) { return l == Letter::T ? 'T' : 'R'; }

std::string EventWord::to_string() const {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += ' ';
    out += to_char(e.kind);
  }
  return out;
}

void validate(const EventWord& w) {
  if (w.entries.empty()) fail(ErrorKind::Precondition, "event word is empty");
  for (std::size_t k = 1; k < w.entries.size(); ++k)
    if (!(w.entries[k - 1].position < w.entries[k].position))
      fail(ErrorKind::Precondition, "event positions must be strictly increasing");
}

EventWord parse_event_word(const std::string& letters, const std::optional<std::vector<Rat>>& positions) {
  EventWord w;
  for (char ch : letters) {
    if (ch == ' ' || ch == ',' || ch == '\t') continue;
    if (ch != 'T' && ch != 'R')
      fail(ErrorKind::Parse, std::string("unknown event letter '") + ch + "'");
    w.entries.push_back({ch == 'T' ? Letter::T : Letter::R, Rat(static_cast<long>(w.entries.size() + 1))});
  }
  if (positions) {
    if (positions->size() != w.entries.size())
      fail(ErrorKind::Parse, "got " + std::to_string(positions->size()) + " positions for " +
                                 std::to_string(w.entries.size()) + " events");
    for (std::size_t k = 0; k < w.entries.size(); ++k) w.entries[k].position = (*positions)[k];
  }
  validate(w);
  return w;
}

UniPoly NormalForm::fiber(const Rat& x) const {
  UniPoly q = UniPoly::monomial(Rat(1), d);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    q += UniPoly::monomial(coeffs[k].eval(x), d - 2 - static_cast<int>(k));
  return q;
}

void validate(const NormalForm& f, const SurfaceParams& s) {
  polygon::validate(s);
  if (f.d < 2) fail(ErrorKind::Precondition, "normal form needs d >= 2");
  if (f.coeffs.size() != static_cast<std::size_t>(f.d - 1))
    fail(ErrorKind::Precondition, "normal form needs coefficients a_2..a_d");
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    const long j = static_cast<long>(k) + 2;
    if (f.coeffs[k].degree() > s.n * j + s.l)
      fail(ErrorKind::Precondition, "a_" + std::to_string(j) + " exceeds degree " + std::to_string(s.n * j + s.l));
  }
}

A2Check lemma_a2_check(const UniPoly& q) {
  const int d = q.degree();
  if (d < 2) fail(ErrorKind::Precondition, "need degree >= 2");
  if (q.lc() != 1) fail(ErrorKind::Precondition, "polynomial is not monic");
  if (q[d - 1] != 0) fail(ErrorKind::Precondition, "not in normal form");
  A2Check out;
  out.a2 = q[d - 2];
  int counted = 0;
  for (const auto& m : exactalg::squarefree_mult_structure(q)) counted += m.multiplicity * m.real_roots;
  out.real_rooted = counted == d;
  out.equality_case = q == UniPoly::monomial(Rat(1), d);
  out.consistent = !out.real_rooted || out.a2 < 0 || (out.a2 == 0 && out.equality_case);
  return out;
}

long a2_degree_bound(const SurfaceParams& s) {
  polygon::validate(s);
  return 2 * s.n + s.l;
}

namespace {

struct Count {
  std::vector<Rat> zeros;
  std::vector<std::pair<Rat, Rat>> gaps;
  bool has_r = false;
};

Count count(const EventWord& w) {
  validate(w);
  Count c;
  std::optional<Rat> last_r;
  long between = 0;
  for (const auto& e : w.entries) {
    if (e.kind == Letter::T) {
      c.zeros.push_back(e.position);
      ++between;
      continue;
    }
    c.has_r = true;
    if (last_r && between % 2 == 1) c.gaps.emplace_back(*last_r, e.position);
    last_r = e.position;
    between = 0;
  }
  return c;
}

}  // namespace

long min_roots_required(const EventWord& w) {
  const auto c = count(w);
  return static_cast<long>(c.zeros.size() + c.gaps.size());
}

std::string to_string(Outcome o) { return o == Outcome::Infeasible ? "Infeasible" : "NoObstruction"; }

Verdict decide(const SurfaceParams& s, const EventWord& w) {
  auto c = count(w);
  Verdict v;
  v.degree_bound = a2_degree_bound(s);
  // Without an R entry a_2 may vanish identically, which meets every T.
  if (c.has_r) {
    v.min_roots = static_cast<long>(c.zeros.size() + c.gaps.size());
    v.forced_zeros = std::move(c.zeros);
    v.odd_gaps = std::move(c.gaps);
  }
  v.outcome = v.min_roots > v.degree_bound ? Outcome::Infeasible : Outcome::NoObstruction;
  return v;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json zeros = nlohmann::json::array(), gaps = nlohmann::json::array();
  for (const auto& z : v.forced_zeros) zeros.push_back(exactalg::format_rat(z));
  for (const auto& [a, b] : v.odd_gaps) gaps.push_back({exactalg::format_rat(a), exactalg::format_rat(b)});
  return {{"outcome", to_string(v.outcome)},
          {"D", v.degree_bound},
          {"M", v.min_roots},
          {"forced_zeros", zeros},
          {"odd_gaps", gaps}};
}

Verdict verdict_from_json(const nlohmann::json& j) {
  try {
    Verdict v;
    const auto o = j.at("outcome").get<std::string>();
    if (o == "Infeasible")
      v.outcome = Outcome::Infeasible;
    else if (o == "NoObstruction")
      v.outcome = Outcome::NoObstruction;
    else
      fail(ErrorKind::Parse, "unknown outcome '" + o + "'");
    v.degree_bound = j.at("D").get<long>();
    v.min_roots = j.at("M").get<long>();
    for (const auto& z : j.at("forced_zeros")) v.forced_zeros.push_back(exactalg::parse_rat(z.get<std::string>()));
    for (const auto& g : j.at("odd_gaps"))
      v.odd_gaps.emplace_back(exactalg::parse_rat(g.at(0).get<std::string>()),
                              exactalg::parse_rat(g.at(1).get<std::string>()));
    if ((v.outcome == Outcome::Infeasible) != (v.min_roots > v.degree_bound))
      fail(ErrorKind::Parse, "verdict outcome disagrees with its certificate");
    return v;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("verdict: ") + e.what());
  }
}

}  // namespace patchpencil::obstruct
