#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "dpp/graph.hpp"

namespace dpp {

enum class Role : std::uint8_t { grid_border, grid_inner, subdivision, arc_exterior };

std::string_view to_string(Role role);
std::optional<Role> role_from_string(std::string_view text);

/// 1-based lattice position; row 1 is the top row.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Where a subdivision vertex sits: `ordinal` counts from `edge.first` (1-based).
struct HostEdge {
  Edge edge;
  int ordinal = 0;
  friend auto operator<=>(const HostEdge&, const HostEdge&) = default;
};

/// Planar drawing data for a (possibly subdivided) grid with exterior arcs.
/// Vectors are indexed by vertex id and cover every vertex of the host graph.
struct GridLayout {
  int rows = 0;
  int cols = 0;
  std::vector<std::optional<Cell>> cell_of;
  std::vector<Role> role_of;
  std::map<VertexId, HostEdge> host_edge;

  VertexId vertex_count() const { return static_cast<VertexId>(role_of.size()); }
  VertexId id_of(Cell c) const { return (c.row - 1) * cols + (c.col - 1); }
  bool on_boundary(Cell c) const {
    return c.row == 1 || c.row == rows || c.col == 1 || c.col == cols;
  }
  /// True for vertices off the outer face of the grid drawing. Original grid
  /// vertices are inner when their cell is off the boundary; a subdivision
  /// vertex is inner unless its host edge is a boundary edge.
  bool is_inner(VertexId v) const;
  /// Lattice edge between two original grid vertices whose endpoints lie on
  /// a common side of the boundary.
  bool is_boundary_edge(Edge e) const;

  friend bool operator==(const GridLayout&, const GridLayout&) = default;
};

struct GridGraph {
  Graph graph;
  GridLayout layout;
};

/// m x n grid; the vertex at (r, c) gets id (r-1)*n + (c-1).
GridGraph make_grid(int rows, int cols);

/// Replaces each planned lattice edge by a path with the given number of new
/// internal vertices. New ids are appended in ascending plan order.
GridGraph subdivide_edges(const Graph& g, const GridLayout& layout,
                          const std::map<Edge, int>& plan);

std::set<VertexId> inner_vertices(const GridLayout& layout);

/// Number of maximal runs of consecutive inner vertices, which is the
/// largest k for which the path splits into k crossing subpaths. nullopt
/// when an endpoint is inner (no decomposition exists).
std::optional<int> crossing_count(const Path& p, const GridLayout& layout);

struct CrossingReport {
  std::vector<int> per_path;          // 0 for undefined entries
  int total = 0;
  std::set<std::size_t> undefined_paths;

  friend bool operator==(const CrossingReport&, const CrossingReport&) = default;
};

CrossingReport crossing_report(const Linkage& linkage, const GridLayout& layout);

/// Conservative drawing check: lattice edges on the lattice, subdivisions on
/// their host edge, everything else an exterior arc between two vertices of
/// one boundary side. Arcs on a side must nest (no interleaving endpoints).
/// False means "not certified", not "non-planar".
bool is_planar_certificate(const Graph& g, const GridLayout& layout);

}  // namespace dpp
