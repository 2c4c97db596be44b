#include "dpp/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace dpp {

Graph::Graph(VertexId vertex_count) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

VertexId Graph::add_vertex() {
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (!valid(u) || !valid(v)) {
    throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
  }
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  auto& au = adjacency_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) {
    throw GraphError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  au.insert(it, v);
  auto& av = adjacency_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
  if (!has_edge(u, v)) {
    throw GraphError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  auto drop = [](std::vector<VertexId>& list, VertexId x) {
    list.erase(std::lower_bound(list.begin(), list.end(), x));
  };
  drop(adjacency_[u], v);
  drop(adjacency_[v], u);
  --edge_count_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!valid(u) || !valid(v)) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_label(VertexId v, std::string label) {
  if (!valid(v)) throw GraphError("label for unknown vertex " + std::to_string(v));
  labels_[v] = std::move(label);
}

std::optional<std::string> Graph::label(VertexId v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

Graph Graph::induced_subgraph(std::span<const VertexId> keep) const {
  std::vector<VertexId> remap(adjacency_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!valid(keep[i])) throw GraphError("induced_subgraph: vertex out of range");
    if (remap[keep[i]] != -1) throw GraphError("induced_subgraph: repeated vertex");
    remap[keep[i]] = static_cast<VertexId>(i);
  }
  Graph out(static_cast<VertexId>(keep.size()));
  for (const Edge& e : edges()) {
    if (remap[e.first] >= 0 && remap[e.second] >= 0) out.add_edge(remap[e.first], remap[e.second]);
  }
  for (const auto& [v, text] : labels_) {
    if (remap[v] >= 0) out.labels_[remap[v]] = text;
  }
  return out;
}

Graph Graph::without_vertex(VertexId v) const {
  if (!valid(v)) throw GraphError("without_vertex: vertex out of range");
  std::vector<VertexId> keep;
  keep.reserve(adjacency_.size() - 1);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(keep);
}

std::string path_defect(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return "empty path";
  std::unordered_set<VertexId> seen;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    VertexId v = p.vertices[i];
    if (!g.valid(v)) return "vertex " + std::to_string(v) + " out of range";
    if (!seen.insert(v).second) return "vertex " + std::to_string(v) + " repeated";
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) {
      return "no edge {" + std::to_string(p.vertices[i - 1]) + "," + std::to_string(v) + "}";
    }
  }
  return {};
}

}  // namespace dpp
