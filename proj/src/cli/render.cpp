#include "patchpencil/cli/render.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

namespace patchpencil::cli {

namespace {

using patchwork::EventKind;

constexpr double kPanel = 400.0;
constexpr double kMargin = 30.0;
constexpr double kAxisY = 200.0;

constexpr std::array<const char*, 6> kFills{"#dbe8f5", "#f6dfc8", "#dcefd7", "#efd9ec", "#f3efc6", "#d6eeee"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Lattice coordinates to the left panel, Y up.
struct Frame {
  double x0, y0, scale;
  double x(long i) const { return kMargin + (static_cast<double>(i) - x0) * scale; }
  double y(long j) const { return kCanvasHeight - kMargin - (static_cast<double>(j) - y0) * scale; }
};

Frame frame_for(const polygon::Polygon& target) {
  long min_i = target.vertices()[0].i, max_i = min_i, min_j = target.vertices()[0].j, max_j = min_j;
  for (const auto& v : target.vertices()) {
    min_i = std::min(min_i, v.i);
    max_i = std::max(max_i, v.i);
    min_j = std::min(min_j, v.j);
    max_j = std::max(max_j, v.j);
  }
  const double w = static_cast<double>(std::max(1L, max_i - min_i));
  const double h = static_cast<double>(std::max(1L, max_j - min_j));
  const double scale = std::min((kPanel - 2 * kMargin) / w, (kCanvasHeight - 2 * kMargin) / h);
  return {static_cast<double>(min_i), static_cast<double>(min_j), scale};
}

void draw_subdivision(std::ostringstream& out, const polygon::Subdivision& s) {
  const Frame f = frame_for(s.target);
  out << "<g id=\"subdivision\">\n";
  for (std::size_t k = 0; k < s.cells.size(); ++k) {
    const auto& cell = s.cells[k];
    out << "<polygon class=\"cell\" points=\"";
    double cx = 0, cy = 0;
    const auto& vs = cell.polygon.vertices();
    for (std::size_t v = 0; v < vs.size(); ++v) {
      if (v) out << ' ';
      out << num(f.x(vs[v].i)) << ',' << num(f.y(vs[v].j));
      cx += f.x(vs[v].i);
      cy += f.y(vs[v].j);
    }
    out << "\" fill=\"" << kFills[k % kFills.size()] << "\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
    cx /= static_cast<double>(vs.size());
    cy /= static_cast<double>(vs.size());
    out << "<text class=\"cell-label\" x=\"" << num(cx) << "\" y=\"" << num(cy + 4)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(cell.label) << "</text>\n";
  }
  // Vertices of the cells, each drawn once.
  std::vector<polygon::LatticePoint> points;
  for (const auto& cell : s.cells)
    points.insert(points.end(), cell.polygon.vertices().begin(), cell.polygon.vertices().end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& p : points)
    out << "<circle class=\"vertex\" cx=\"" << num(f.x(p.i)) << "\" cy=\"" << num(f.y(p.j)) << "\" r=\"2.5\" fill=\"#222\"/>\n";
  out << "</g>\n";
}

void draw_strip(std::ostringstream& out, const patchwork::LScheme& scheme) {
  const double left = kPanel + kMargin, right = kCanvasWidth - kMargin;
  out << "<g id=\"events\">\n";
  out << "<line class=\"axis\" x1=\"" << num(left) << "\" y1=\"" << num(kAxisY) << "\" x2=\"" << num(right)
      << "\" y2=\"" << num(kAxisY) << "\" stroke=\"#222\" stroke-width=\"1\"/>\n";

  // Rank layout: shown events plus one slot for the origin.
  struct Slot {
    bool zero;
    const patchwork::GluedEvent* event;
  };
  std::vector<Slot> slots;
  for (std::size_t k = 0; k <= scheme.events.size(); ++k) {
    if (k == scheme.zero_index) slots.push_back({true, nullptr});
    if (k == scheme.events.size()) break;
    const auto& e = scheme.events[k];
    if (e.kind == EventKind::MaxTangency || e.kind == EventKind::AllReal) slots.push_back({false, &e});
  }
  if (scheme.events.empty()) {
    out << "</g>\n";
    return;
  }
  const double step = (right - left) / static_cast<double>(slots.size() + 1);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const double x = left + step * static_cast<double>(k + 1);
    if (slots[k].zero) {
      out << "<line class=\"zero\" x1=\"" << num(x) << "\" y1=\"" << num(kAxisY - 60) << "\" x2=\"" << num(x)
          << "\" y2=\"" << num(kAxisY + 60) << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
      out << "<text x=\"" << num(x) << "\" y=\"" << num(kAxisY + 78) << "\" font-size=\"12\" text-anchor=\"middle\">0</text>\n";
      continue;
    }
    const auto& e = *slots[k].event;
    if (e.kind == EventKind::MaxTangency) {
      const double h = 16, w = 7;
      out << "<path class=\"event-T\" d=\"M " << num(x) << ' ' << num(kAxisY - h) << " Q " << num(x + 2 * w) << ' '
          << num(kAxisY) << ' ' << num(x) << ' ' << num(kAxisY + h) << " Q " << num(x - 2 * w) << ' ' << num(kAxisY)
          << ' ' << num(x) << ' ' << num(kAxisY - h) << " Z\" fill=\"#c0392b\"/>\n";
    } else {
      const int d = std::max(1, e.order);
      const double gap = std::min(12.0, 100.0 / d);
      out << "<g class=\"event-R\">";
      for (int r = 0; r < d; ++r) {
        const double y = kAxisY - gap * (d - 1) / 2.0 + gap * r;
        out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"#2471a3\"/>";
      }
      out << "</g>\n";
    }
    out << "<text class=\"event-source\" x=\"" << num(x) << "\" y=\"" << num(kAxisY + 78)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << escape(e.source) << "</text>\n";
  }
  out << "</g>\n";
}

}  // namespace

std::string render_svg(const patchwork::LScheme& scheme, const polygon::Subdivision& subdivision) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvasWidth << "\" height=\"" << kCanvasHeight
      << "\" viewBox=\"0 0 " << kCanvasWidth << ' ' << kCanvasHeight << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kCanvasWidth << "\" height=\"" << kCanvasHeight << "\" fill=\"#fff\"/>\n";
  draw_subdivision(out, subdivision);
  draw_strip(out, scheme);
  out << "</svg>\n";
  return out.str();
}

}  // namespace patchpencil::cli
