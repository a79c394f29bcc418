#include "patchpencil/exactalg/bipoly.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "patchpencil/error.h"

namespace patchpencil::exactalg {

BiPoly::BiPoly(const std::map<Exponent, Rat>& terms) {
  for (const auto& [e, c] : terms) {
    if (e.first < 0 || e.second < 0) fail(ErrorKind::Precondition, "negative exponent in polynomial");
    if (c != 0) {
      Rat v(c);
      v.canonicalize();
      terms_.emplace(e, v);
    }
  }
}

BiPoly BiPoly::monomial(const Rat& c, int i, int j) {
  return BiPoly(std::map<Exponent, Rat>{{Exponent{i, j}, c}});
}

BiPoly BiPoly::from_y_coeffs(const std::vector<UniPoly>& coeffs) {
  BiPoly out;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    for (int i = 0; i <= coeffs[j].degree(); ++i)
      if (coeffs[j][i] != 0) out.terms_.emplace(Exponent{i, static_cast<int>(j)}, coeffs[j][i]);
  return out;
}

void BiPoly::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Exponent> BiPoly::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

BiPoly BiPoly::diff_x() const {
  BiPoly out;
  for (const auto& [e, c] : terms_)
    if (e.first > 0) out.add_term({e.first - 1, e.second}, c * e.first);
  return out;
}

BiPoly BiPoly::diff_y() const {
  BiPoly out;
  for (const auto& [e, c] : terms_)
    if (e.second > 0) out.add_term({e.first, e.second - 1}, c * e.second);
  return out;
}

UniPoly BiPoly::at_x(const Rat& x) const {
  const int dy = degree_y();
  if (dy < 0) return {};
  std::vector<Rat> v(static_cast<std::size_t>(dy) + 1, Rat(0));
  for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e.second)] += c * pow(x, e.first);
  return UniPoly(std::move(v));
}

std::vector<UniPoly> BiPoly::y_coeffs() const {
  const int dy = degree_y();
  if (dy < 0) return {};
  std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(dy) + 1);
  for (const auto& [e, c] : terms_) {
    auto& row = raw[static_cast<std::size_t>(e.second)];
    if (row.size() <= static_cast<std::size_t>(e.first)) row.resize(static_cast<std::size_t>(e.first) + 1, Rat(0));
    row[static_cast<std::size_t>(e.first)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(std::move(row));
  return out;
}

UniPoly BiPoly::lc_y() const {
  auto c = y_coeffs();
  return c.empty() ? UniPoly{} : c.back();
}

BiPoly BiPoly::scaled(const Rat& c, const Rat& lambda, const Rat& mu) const {
  BiPoly out;
  for (const auto& [e, v] : terms_) out.add_term(e, c * v * pow(lambda, e.first) * pow(mu, e.second));
  return out;
}

BiPoly BiPoly::map_exponents(const std::function<Exponent(Exponent)>& f) const {
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponent m = f(e);
    if (m.first < 0 || m.second < 0)
      fail(ErrorKind::Precondition, "not polynomial after transform");
    if (!out.terms_.emplace(m, c).second)
      fail(ErrorKind::Precondition, "exponent map is not injective on the support");
  }
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

BiPoly operator*(const Rat& c, const BiPoly& a) {
  BiPoly out;
  for (const auto& [e, v] : a.terms_) out.add_term(e, c * v);
  return out;
}

BiPoly pow(const BiPoly& p, int e) {
  BiPoly result = BiPoly::monomial(Rat(1), 0, 0);
  for (int k = 0; k < e; ++k) result = result * p;
  return result;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending in Y, then in X.
  std::vector<std::pair<Exponent, Rat>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  for (const auto& [e, c] : ordered) {
    Rat mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const bool unit = mag == 1;
    const bool bare = e.first == 0 && e.second == 0;
    if (!unit || bare) os << mag.get_str();
    bool need_star = !unit || bare;
    auto emit = [&](char var, int k) {
      if (k == 0) return;
      if (need_star) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
      need_star = true;
    };
    emit('X', e.first);
    emit('Y', e.second);
  }
  return os.str();
}

nlohmann::json to_json(const BiPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e.first, e.second, format_rat(c)});
  return out;
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "polynomial must be a JSON array of monomials");
  std::map<Exponent, Rat> terms;
  for (const auto& m : j) {
    if (!m.is_array() || m.size() != 3 || !m[0].is_number_integer() || !m[1].is_number_integer() ||
        m[0].get<long>() < 0 || m[1].get<long>() < 0 || !m[2].is_string())
      fail(ErrorKind::Parse, "monomial must be [i, j, \"num/den\"] with natural exponents");
    const Exponent e{m[0].get<int>(), m[1].get<int>()};
    if (!terms.emplace(e, parse_rat(m[2].get<std::string>())).second)
      fail(ErrorKind::Parse, "duplicate monomial (" + std::to_string(e.first) + ", " +
                                 std::to_string(e.second) + ")");
  }
  return BiPoly(terms);
}

}  // namespace patchpencil::exactalg
