#include "dpp/render.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dpp {

namespace {

constexpr int kSpacing = 60;
constexpr std::array<const char*, 8> kPalette = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

struct Point {
  int x = 0;
  int y = 0;
};

enum class Side { none, top, right, bottom, left };

class Drawing {
 public:
  explicit Drawing(const Instance& inst) : layout_(require_layout(inst)) {
    for (const Edge& e : inst.graph.edges()) {
      if (const auto side = arc_side(e); side != Side::none) {
        max_bulge_ = std::max(max_bulge_, bulge(e, side));
      }
    }
    margin_ = 40 + (3 * max_bulge_) / 4;
  }

  int width() const { return 2 * margin_ + (layout_.cols - 1) * kSpacing; }
  int height() const { return 2 * margin_ + (layout_.rows - 1) * kSpacing + exterior_rows() * 30; }

  Point position(VertexId v) const {
    if (const auto& c = layout_.cell_of[v]) return lattice(*c);
    if (auto it = layout_.host_edge.find(v); it != layout_.host_edge.end()) {
      const Point a = position(it->second.edge.first);
      const Point b = position(it->second.edge.second);
      const int n = chain_length(it->second.edge) + 1;
      return {a.x + (b.x - a.x) * it->second.ordinal / n, a.y + (b.y - a.y) * it->second.ordinal / n};
    }
    // Arc-exterior vertices have no coordinates; park them in rows under the grid.
    const int index = exterior_index(v);
    const int per_row = std::max(1, layout_.cols);
    return {margin_ + (index % per_row) * kSpacing,
            margin_ + (layout_.rows - 1) * kSpacing + margin_ / 2 + (index / per_row + 1) * 30};
  }

  /// SVG path data for the edge: straight segment, or an outward cubic for arcs.
  std::string stroke(VertexId u, VertexId v) const {
    const Point a = position(u);
    const Point b = position(v);
    std::ostringstream d;
    d << "M " << a.x << ' ' << a.y << ' ';
    const Edge e(u, v);
    const Side side = arc_side(e);
    if (side == Side::none) {
      d << "L " << b.x << ' ' << b.y;
      return d.str();
    }
    const int k = bulge(e, side);
    int dx = 0;
    int dy = 0;
    switch (side) {
      case Side::top: dy = -k; break;
      case Side::bottom: dy = k; break;
      case Side::left: dx = -k; break;
      case Side::right: dx = k; break;
      case Side::none: break;
    }
    d << "C " << a.x + dx << ' ' << a.y + dy << ' ' << b.x + dx << ' ' << b.y + dy << ' ' << b.x
      << ' ' << b.y;
    return d.str();
  }

  Side arc_side(const Edge& e) const {
    const auto& a = layout_.cell_of[e.first];
    const auto& b = layout_.cell_of[e.second];
    if (!a || !b) return Side::none;
    if (std::abs(a->row - b->row) + std::abs(a->col - b->col) <= 1) return Side::none;
    if (a->row == 1 && b->row == 1) return Side::top;
    if (a->col == layout_.cols && b->col == layout_.cols) return Side::right;
    if (a->row == layout_.rows && b->row == layout_.rows) return Side::bottom;
    if (a->col == 1 && b->col == 1) return Side::left;
    return Side::none;
  }

 private:
  static const GridLayout& require_layout(const Instance& inst) {
    if (!inst.layout) throw std::invalid_argument("rendering needs a grid layout");
    if (inst.layout->vertex_count() != inst.graph.vertex_count()) {
      throw std::invalid_argument("layout does not cover the graph");
    }
    return *inst.layout;
  }

  Point lattice(Cell c) const {
    return {margin_ + (c.col - 1) * kSpacing, margin_ + (c.row - 1) * kSpacing};
  }

  int bulge(const Edge& e, Side side) const {
    const auto& a = *layout_.cell_of[e.first];
    const auto& b = *layout_.cell_of[e.second];
    const int span = (side == Side::top || side == Side::bottom) ? std::abs(a.col - b.col)
                                                                 : std::abs(a.row - b.row);
    return 10 + 12 * span;
  }

  int chain_length(const Edge& host) const {
    int n = 0;
    for (const auto& [v, h] : layout_.host_edge) n += h.edge == host ? 1 : 0;
    return n;
  }

  int exterior_index(VertexId v) const {
    int index = 0;
    for (VertexId u = 0; u < v; ++u) index += layout_.role_of[u] == Role::arc_exterior ? 1 : 0;
    return index;
  }

  int exterior_rows() const {
    const auto n = std::count(layout_.role_of.begin(), layout_.role_of.end(), Role::arc_exterior);
    const int per_row = std::max(1, layout_.cols);
    return static_cast<int>((n + per_row - 1) / per_row);
  }

  const GridLayout& layout_;
  int max_bulge_ = 0;
  int margin_ = 40;
};

std::map<VertexId, std::string> terminal_names(const Instance& inst) {
  std::map<VertexId, std::string> names;
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    names[inst.pairs[i].source] = "s" + std::to_string(i);
    names[inst.pairs[i].target] = "t" + std::to_string(i);
  }
  return names;
}

void check_solution(const Instance& inst, const std::optional<Linkage>& solution) {
  if (!solution) return;
  for (const Path& p : solution->paths) {
    if (auto defect = path_defect(inst.graph, p); !defect.empty()) {
      throw std::invalid_argument("solution path invalid: " + defect);
    }
  }
}

}  // namespace

std::string render_svg(const Instance& inst, const std::optional<Linkage>& solution) {
  const Drawing drawing(inst);
  check_solution(inst, solution);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << drawing.width() << "\" height=\""
      << drawing.height() << "\" viewBox=\"0 0 " << drawing.width() << ' ' << drawing.height()
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g id=\"edges\" fill=\"none\" stroke=\"#9a9a9a\" stroke-width=\"2\">\n";
  for (const Edge& e : inst.graph.edges()) {
    const bool arc = drawing.arc_side(e) != Side::none;
    out << "<path class=\"" << (arc ? "arc" : "grid") << "\" d=\"" << drawing.stroke(e.first, e.second)
        << "\"" << (arc ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
  }
  out << "</g>\n";
  if (solution) {
    out << "<g id=\"solution\" fill=\"none\" stroke-width=\"6\" stroke-linecap=\"round\" "
           "stroke-opacity=\"0.8\">\n";
    for (std::size_t i = 0; i < solution->paths.size(); ++i) {
      const auto& vs = solution->paths[i].vertices;
      out << "<g class=\"path\" data-index=\"" << i << "\" stroke=\"" << kPalette[i % kPalette.size()]
          << "\">\n";
      for (std::size_t j = 1; j < vs.size(); ++j) {
        out << "<path d=\"" << drawing.stroke(vs[j - 1], vs[j]) << "\"/>\n";
      }
      out << "</g>\n";
    }
    out << "</g>\n";
  }
  const auto names = terminal_names(inst);
  out << "<g id=\"vertices\">\n";
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) {
    const Point p = drawing.position(v);
    const bool terminal = names.contains(v);
    out << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << (terminal ? 7 : 4)
        << "\" fill=\"" << (terminal ? "black" : "#555555") << "\"/>\n";
  }
  out << "</g>\n<g id=\"labels\" font-family=\"serif\" font-size=\"16\">\n";
  for (const auto& [v, name] : names) {
    const Point p = drawing.position(v);
    out << "<text x=\"" << p.x + 9 << "\" y=\"" << p.y - 9 << "\">" << name[0]
        << "<tspan baseline-shift=\"sub\" font-size=\"11\">" << name.substr(1) << "</tspan></text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render_dot(const Instance& inst, const std::optional<Linkage>& solution) {
  const Drawing drawing(inst);
  check_solution(inst, solution);
  const GridLayout& layout = *inst.layout;
  const auto names = terminal_names(inst);

  std::map<Edge, std::size_t> path_of;
  if (solution) {
    for (std::size_t i = 0; i < solution->paths.size(); ++i) {
      const auto& vs = solution->paths[i].vertices;
      for (std::size_t j = 1; j < vs.size(); ++j) path_of[Edge(vs[j - 1], vs[j])] = i;
    }
  }

  std::ostringstream out;
  out << "graph dpp {\n  node [shape=circle, fontsize=10, width=0.3, fixedsize=true];\n";
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) {
    const Point p = drawing.position(v);
    out << "  " << v << " [label=\"" << (names.contains(v) ? names.at(v) : std::to_string(v))
        << "\", role=\"" << to_string(layout.role_of[v]) << "\", pos=\"" << p.x << ',' << -p.y
        << "!\"";
    if (names.contains(v)) out << ", style=filled, fillcolor=\"#dddddd\"";
    out << "];\n";
  }
  for (const Edge& e : inst.graph.edges()) {
    const bool arc = drawing.arc_side(e) != Side::none;
    const bool sub = layout.host_edge.contains(e.first) || layout.host_edge.contains(e.second);
    out << "  " << e.first << " -- " << e.second << " [role=\""
        << (arc ? "arc-exterior" : sub ? "subdivision" : "lattice") << "\"";
    if (arc) out << ", style=dashed";
    if (auto it = path_of.find(e); it != path_of.end()) {
      out << ", color=\"" << kPalette[it->second % kPalette.size()] << "\", penwidth=3, path="
          << it->second;
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dpp
