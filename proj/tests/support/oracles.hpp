#pragma once

// Reference computations used only by the tests. Each one follows a
// definition directly and shares no code path with the library routine it
// is checked against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "dpp/graph.hpp"
#include "dpp/grid.hpp"

namespace dpp::testing {

/// Connected graphs on n vertices up to isomorphism, built by attaching a
/// new vertex to every connected graph on n-1 vertices (every connected
/// graph has a non-cut vertex) and deduplicating by a canonical adjacency code.
std::vector<Graph> connected_graphs(int n);

/// Largest k such that the path splits at shared vertices into k pieces,
/// each containing an inner vertex and having non-inner endpoints. -1 when
/// no decomposition exists; 0 when the path has no inner vertex.
int brute_force_crossings(const std::vector<VertexId>& path, const std::vector<bool>& inner);

/// Vertices on the outer face of a straight-line drawing, found by tracing
/// faces of the rotation system given by the coordinates.
std::set<VertexId> outer_face_vertices(const Graph& g, const std::vector<std::pair<double, double>>& xy);

/// Builds the tree decomposition induced by an elimination order, checks edge
/// coverage and the connectivity condition, and returns its width (-1 if invalid).
int tree_decomposition_width(const Graph& g, const std::vector<VertexId>& order);

/// Same for the path decomposition induced by a vertex layout.
int path_decomposition_width(const Graph& g, const std::vector<VertexId>& order);

/// Every spanning subgraph whose components are paths on >= 2 vertices,
/// grouped by pattern (set of degree-1 vertices). Edge-subset enumeration.
std::map<std::set<VertexId>, int> spanning_linkages_by_pattern(const Graph& g);

/// All simple paths with between 2 and max_edges + 1 vertices.
void for_each_simple_path(const Graph& g, int max_edges,
                          const std::function<void(const std::vector<VertexId>&)>& visit);

}  // namespace dpp::testing
