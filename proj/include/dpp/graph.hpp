#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpp {

using VertexId = std::int32_t;

/// Unordered vertex pair, stored with first < second.
struct Edge {
  VertexId first = 0;
  VertexId second = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on vertex ids [0, vertex_count).
///
/// Adjacency lists are kept sorted so that every traversal over neighbors is
/// in ascending id order; the solver and the serializers rely on this.
class Graph {
 public:
  Graph() = default;
  explicit Graph(VertexId vertex_count);

  VertexId vertex_count() const { return static_cast<VertexId>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  /// Throws GraphError on self-loops, duplicates and out-of-range ids.
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  VertexId add_vertex();

  bool has_edge(VertexId u, VertexId v) const;
  bool valid(VertexId v) const { return v >= 0 && v < vertex_count(); }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  /// All edges in ascending (first, second) order.
  std::vector<Edge> edges() const;

  void set_label(VertexId v, std::string label);
  std::optional<std::string> label(VertexId v) const;
  const std::map<VertexId, std::string>& labels() const { return labels_; }

  /// Induced subgraph on `keep` (ascending), renumbered densely in that order.
  Graph induced_subgraph(std::span<const VertexId> keep) const;
  /// Copy with `v` removed; ids above v shift down by one.
  Graph without_vertex(VertexId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
  std::map<VertexId, std::string> labels_;
};

/// Ordered sequence of distinct vertices; consecutive ones adjacent in the host.
struct Path {
  std::vector<VertexId> vertices;

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }

  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Ordered vertex-disjoint paths, one per terminal pair.
struct Linkage {
  std::vector<Path> paths;

  friend auto operator<=>(const Linkage&, const Linkage&) = default;
};

/// Empty string when `p` is a path of `g`, otherwise a description of the first defect.
std::string path_defect(const Graph& g, const Path& p);

}  // namespace dpp
