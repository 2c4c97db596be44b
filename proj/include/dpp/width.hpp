#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "dpp/instance.hpp"
#include "dpp/solver.hpp"

namespace dpp {

struct WidthBudget {
  std::uint64_t max_nodes = 200'000'000;
  std::chrono::milliseconds max_time = std::chrono::minutes(5);
};

struct WidthResult {
  int value = 0;
  /// Elimination order (treewidth) or vertex layout (pathwidth).
  std::vector<VertexId> certificate;
  /// False when the budget ran out; `value` is then an upper bound.
  bool exact = false;
};

/// Width of the elimination order: the largest number of higher neighbors a
/// vertex has in the fill-in graph when it is eliminated.
int elimination_width(const Graph& g, std::span<const VertexId> order);

/// Vertex separation number of a layout: the largest number of vertices in a
/// prefix that still have a neighbor outside it. Equals pathwidth at the optimum.
int vertex_separation(const Graph& g, std::span<const VertexId> order);

/// Exact treewidth via depth-first branch and bound over elimination orders,
/// memoized on the eliminated set. Graphs up to 64 vertices; empty graphs are
/// rejected with std::invalid_argument.
WidthResult treewidth_exact(const Graph& g, const WidthBudget& budget = {});

/// Exact pathwidth via vertex-separation search over prefix sets with
/// iterative deepening on the width. Same size limits as treewidth_exact.
WidthResult pathwidth_exact(const Graph& g, const WidthBudget& budget = {});

struct WidthLowerBoundReport {
  int k = 0;
  int required = 0;        // 2^k + 1, the width of the contained grid
  int components = 0;      // k + 1 paths in the vital linkage
  WidthResult treewidth;
  WidthResult pathwidth;
  Verdict treewidth_ok = Verdict::indeterminate;
  Verdict pathwidth_ok = Verdict::indeterminate;
};

/// Exact widths of a generated instance compared against 2^k + 1.
WidthLowerBoundReport verify_width_lower_bound(const Instance& inst,
                                               const WidthBudget& budget = {});

}  // namespace dpp
