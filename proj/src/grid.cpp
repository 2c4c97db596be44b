#include "dpp/grid.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dpp {

namespace {

constexpr std::array<std::string_view, 4> kRoleNames = {"grid-border", "grid-inner",
                                                        "subdivision", "arc-exterior"};

enum class Side { top, right, bottom, left };

bool lattice_adjacent(Cell a, Cell b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

std::vector<Side> sides_of(const GridLayout& layout, Cell c) {
  std::vector<Side> out;
  if (c.row == 1) out.push_back(Side::top);
  if (c.col == layout.cols) out.push_back(Side::right);
  if (c.row == layout.rows) out.push_back(Side::bottom);
  if (c.col == 1) out.push_back(Side::left);
  return out;
}

double position_on(Side side, Cell c) {
  return (side == Side::top || side == Side::bottom) ? c.col : c.row;
}

struct Anchor {
  std::vector<Side> sides;
  std::map<Side, double> position;
};

struct Arc {
  double lo;
  double hi;
};

}  // namespace

std::string_view to_string(Role role) { return kRoleNames.at(static_cast<std::size_t>(role)); }

std::optional<Role> role_from_string(std::string_view text) {
  for (std::size_t i = 0; i < kRoleNames.size(); ++i) {
    if (kRoleNames[i] == text) return static_cast<Role>(i);
  }
  return std::nullopt;
}

bool GridLayout::is_boundary_edge(Edge e) const {
  if (e.first >= vertex_count() || e.second >= vertex_count()) return false;
  const auto& a = cell_of[e.first];
  const auto& b = cell_of[e.second];
  if (!a || !b || !lattice_adjacent(*a, *b)) return false;
  if (a->row == b->row) return a->row == 1 || a->row == rows;
  return a->col == 1 || a->col == cols;
}

bool GridLayout::is_inner(VertexId v) const {
  switch (role_of.at(v)) {
    case Role::grid_inner:
      return true;
    case Role::subdivision:
      return !is_boundary_edge(host_edge.at(v).edge);
    default:
      return false;
  }
}

GridGraph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("grid dimensions must be positive, got " + std::to_string(rows) +
                                "x" + std::to_string(cols));
  }
  GridGraph out{Graph(rows * cols), GridLayout{}};
  GridLayout& layout = out.layout;
  layout.rows = rows;
  layout.cols = cols;
  layout.cell_of.resize(static_cast<std::size_t>(rows * cols));
  layout.role_of.resize(static_cast<std::size_t>(rows * cols));
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) {
      const Cell cell{r, c};
      const VertexId v = layout.id_of(cell);
      layout.cell_of[v] = cell;
      layout.role_of[v] = layout.on_boundary(cell) ? Role::grid_border : Role::grid_inner;
      if (c < cols) out.graph.add_edge(v, v + 1);
      if (r < rows) out.graph.add_edge(v, v + cols);
    }
  }
  return out;
}

GridGraph subdivide_edges(const Graph& g, const GridLayout& layout,
                          const std::map<Edge, int>& plan) {
  if (layout.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("layout does not cover the graph");
  }
  GridGraph out{g, layout};
  for (const auto& [edge, count] : plan) {
    if (!g.has_edge(edge.first, edge.second)) {
      throw std::invalid_argument("subdivide_edges: unknown edge {" + std::to_string(edge.first) +
                                  "," + std::to_string(edge.second) + "}");
    }
    const auto& a = layout.cell_of[edge.first];
    const auto& b = layout.cell_of[edge.second];
    if (!a || !b || !lattice_adjacent(*a, *b)) {
      throw std::invalid_argument("subdivide_edges: edge {" + std::to_string(edge.first) + "," +
                                  std::to_string(edge.second) +
                                  "} is an arc-exterior edge, not a grid edge");
    }
    if (count < 0) throw std::invalid_argument("subdivide_edges: negative vertex count");
    if (count == 0) continue;
    out.graph.remove_edge(edge.first, edge.second);
    VertexId prev = edge.first;
    for (int i = 1; i <= count; ++i) {
      const VertexId v = out.graph.add_vertex();
      out.layout.cell_of.emplace_back();
      out.layout.role_of.push_back(Role::subdivision);
      out.layout.host_edge[v] = HostEdge{edge, i};
      out.graph.add_edge(prev, v);
      prev = v;
    }
    out.graph.add_edge(prev, edge.second);
  }
  return out;
}

std::set<VertexId> inner_vertices(const GridLayout& layout) {
  std::set<VertexId> out;
  for (VertexId v = 0; v < layout.vertex_count(); ++v) {
    if (layout.is_inner(v)) out.insert(v);
  }
  return out;
}

std::optional<int> crossing_count(const Path& p, const GridLayout& layout) {
  if (p.empty()) return 0;
  if (layout.is_inner(p.front()) || layout.is_inner(p.back())) return std::nullopt;
  int runs = 0;
  bool inside = false;
  for (VertexId v : p.vertices) {
    const bool inner = layout.is_inner(v);
    if (inner && !inside) ++runs;
    inside = inner;
  }
  return runs;
}

CrossingReport crossing_report(const Linkage& linkage, const GridLayout& layout) {
  CrossingReport report;
  report.per_path.reserve(linkage.paths.size());
  for (std::size_t i = 0; i < linkage.paths.size(); ++i) {
    const auto count = crossing_count(linkage.paths[i], layout);
    if (!count) {
      report.undefined_paths.insert(i);
      report.per_path.push_back(0);
      continue;
    }
    report.per_path.push_back(*count);
    report.total += *count;
  }
  return report;
}

bool is_planar_certificate(const Graph& g, const GridLayout& layout) {
  if (layout.vertex_count() != g.vertex_count()) return false;

  std::map<Edge, int> chain_length;
  for (const auto& [v, host] : layout.host_edge) {
    if (layout.role_of[v] != Role::subdivision) return false;
    ++chain_length[host.edge];
  }

  // Border anchors: original boundary vertices and subdivision vertices on a
  // boundary edge, each with its coordinate along every side it touches.
  auto anchor_of = [&](VertexId v) -> std::optional<Anchor> {
    if (const auto& cell = layout.cell_of[v]) {
      if (!layout.on_boundary(*cell)) return std::nullopt;
      Anchor a;
      a.sides = sides_of(layout, *cell);
      for (Side s : a.sides) a.position[s] = position_on(s, *cell);
      return a;
    }
    if (layout.role_of[v] != Role::subdivision) return std::nullopt;
    const HostEdge& host = layout.host_edge.at(v);
    if (!layout.is_boundary_edge(host.edge)) return std::nullopt;
    const Cell from = *layout.cell_of[host.edge.first];
    const Cell to = *layout.cell_of[host.edge.second];
    const double t = static_cast<double>(host.ordinal) / (chain_length[host.edge] + 1);
    Anchor a;
    for (Side s : sides_of(layout, from)) {
      const auto other = sides_of(layout, to);
      if (std::find(other.begin(), other.end(), s) == other.end()) continue;
      a.sides.push_back(s);
      a.position[s] = position_on(s, from) + t * (position_on(s, to) - position_on(s, from));
    }
    return a;
  };

  std::map<Side, std::vector<Arc>> arcs;
  auto add_arc = [&](VertexId a, VertexId b) {
    const auto pa = anchor_of(a);
    const auto pb = anchor_of(b);
    if (!pa || !pb) return false;
    for (Side s : pa->sides) {
      if (pb->position.contains(s)) {
        const double x = pa->position.at(s);
        const double y = pb->position.at(s);
        arcs[s].push_back(Arc{std::min(x, y), std::max(x, y)});
        return true;
      }
    }
    return false;
  };

  auto chain_ok = [&](VertexId sub, VertexId other) {
    const HostEdge& host = layout.host_edge.at(sub);
    if (auto it = layout.host_edge.find(other); it != layout.host_edge.end()) {
      return it->second.edge == host.edge && std::abs(it->second.ordinal - host.ordinal) == 1;
    }
    if (other == host.edge.first) return host.ordinal == 1;
    if (other == host.edge.second) return host.ordinal == chain_length[host.edge];
    return false;
  };

  for (const Edge& e : g.edges()) {
    const Role ra = layout.role_of[e.first];
    const Role rb = layout.role_of[e.second];
    if (ra == Role::arc_exterior || rb == Role::arc_exterior) continue;  // handled as chains
    if (ra == Role::subdivision || rb == Role::subdivision) {
      const bool a_chain = ra == Role::subdivision && chain_ok(e.first, e.second);
      const bool b_chain = rb == Role::subdivision && chain_ok(e.second, e.first);
      if (a_chain || b_chain) continue;
      if (!add_arc(e.first, e.second)) return false;
      continue;
    }
    const auto& a = layout.cell_of[e.first];
    const auto& b = layout.cell_of[e.second];
    if (!a || !b) return false;
    if (lattice_adjacent(*a, *b)) {
      if (chain_length.contains(e)) return false;  // subdivided edge still present
      continue;
    }
    if (!add_arc(e.first, e.second)) return false;
  }

  // Each maximal chain of arc-exterior vertices is one arc between its two
  // border attachments.
  std::vector<bool> visited(static_cast<std::size_t>(g.vertex_count()), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (layout.role_of[v] != Role::arc_exterior || visited[v]) continue;
    if (layout.cell_of[v] || g.degree(v) != 2) return false;
    std::array<VertexId, 2> ends{};
    visited[v] = true;
    for (int dir = 0; dir < 2; ++dir) {
      VertexId prev = v;
      VertexId cur = g.neighbors(v)[dir];
      while (layout.role_of[cur] == Role::arc_exterior) {
        if (cur == v || g.degree(cur) != 2 || layout.cell_of[cur]) return false;
        visited[cur] = true;
        const auto nb = g.neighbors(cur);
        const VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      ends[dir] = cur;
    }
    if (ends[0] == ends[1] || !add_arc(ends[0], ends[1])) return false;
  }

  for (auto& [side, list] : arcs) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const Arc& x = list[i];
        const Arc& y = list[j];
        const bool interleave = (x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) ||
                                (y.lo < x.lo && x.lo < y.hi && y.hi < x.hi);
        if (interleave) return false;
      }
    }
  }
  return true;
}

}  // namespace dpp
