#pragma once

// Graphviz and SVG renderings for documentation.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>

#include "qtree/model.hpp"
#include "qtree/monomial.hpp"

namespace qtree {

namespace detail {
inline std::string dot_id(const Point& p)
{
  std::string id = "p";
  for (const auto& d : p.path()) id += "_" + d.token();
  return id;
}

inline std::string dot_label(const Point& p)
{
  if (p.is_root()) return "D";
  std::string s;
  for (const auto& d : p.path()) s += (s.empty() ? "" : ",") + d.token();
  return s;
}
}  // namespace detail

/// The base-point tree of a model: base points filled, terminal base points
/// double-circled, and one dashed wedge per base point standing for the
/// cofinite fan Q1(a) \ E of closed points above it.
inline std::string to_dot(const NonsingularModel& m)
{
  std::ostringstream os;
  const auto terminal = m.terminal();
  const auto closed = closed_points(m);
  os << "digraph model {\n";
  os << "  node [fontname=\"Helvetica\"];\n";
  for (const auto& p : m.base()) {
    os << "  " << detail::dot_id(p) << " [label=\"" << detail::dot_label(p) << "\", style=filled, fillcolor=lightgray, shape="
       << (terminal.count(p) ? "doublecircle" : "circle") << "];\n";
  }
  for (const auto& p : m.base()) {
    if (!p.is_root()) {
      os << "  " << detail::dot_id(parent(p)) << " -> " << detail::dot_id(p) << " [label=\"" << p.last() << "\"];\n";
    }
  }
  for (const auto& [base, excl] : closed.cofinite()) {
    std::string label = "Q1(" + detail::dot_label(base) + ")";
    if (!excl.empty()) {
      label += " \\\\ {";
      bool first = true;
      for (const auto& d : excl) {
        label += (first ? "" : ",") + d.token();
        first = false;
      }
      label += "}";
    }
    const std::string fan = detail::dot_id(base) + "_fan";
    os << "  " << fan << " [label=\"" << label << "\", shape=invtriangle, style=dashed];\n";
    os << "  " << detail::dot_id(base) << " -> " << fan << " [style=dashed, arrowhead=none];\n";
  }
  os << "}\n";
  return os.str();
}

/// Newton region as an SVG polyline (staircase hull plus the two axis rays).
inline std::string to_svg(const monomial::NewtonRegion& r, int scale = 24)
{
  std::int64_t extent = 1;
  for (const auto& v : r.vertices) extent = std::max({extent, v.a, v.b});
  extent += 1;
  const std::int64_t size = extent * scale;
  auto px = [&](std::int64_t a) { return a * scale; };
  auto py = [&](std::int64_t b) { return size - b * scale; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  os << "  <polyline fill=\"none\" stroke=\"black\" points=\"";
  os << px(r.vertices.front().a) << ',' << py(extent) << ' ';
  for (const auto& v : r.vertices) os << px(v.a) << ',' << py(v.b) << ' ';
  os << px(extent) << ',' << py(r.vertices.back().b) << "\"/>\n";
  for (const auto& v : r.vertices) {
    os << "  <circle cx=\"" << px(v.a) << "\" cy=\"" << py(v.b) << "\" r=\"3\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace qtree
