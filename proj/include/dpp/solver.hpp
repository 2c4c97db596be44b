#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

#include "dpp/instance.hpp"

namespace dpp {

struct SolveMode {
  enum class Kind { decide, count_up_to, enumerate_all };
  Kind kind = Kind::decide;
  std::size_t cap = 1;

  static SolveMode decide() { return {Kind::decide, 1}; }
  static SolveMode count_up_to(std::size_t cap) { return {Kind::count_up_to, cap}; }
  static SolveMode enumerate_all() { return {Kind::enumerate_all, SIZE_MAX}; }
};

struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds max_time = std::chrono::minutes(10);
};

struct SolveOptions {
  bool require_spanning = false;
  /// Reachability pruning; never removes solutions. Off only for testing.
  bool pruning = true;
  Budget budget;
  /// Vertices treated as deleted from the graph.
  std::vector<VertexId> forbidden;
};

enum class SolveStatus { solvable, unsolvable, aborted };
std::string_view to_string(SolveStatus status);

struct SolveOutcome {
  SolveStatus status = SolveStatus::unsolvable;
  /// Canonical order: lexicographic over (path_0, path_1, ...), each path
  /// stored from source to target.
  std::vector<Linkage> solutions;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// Exact search for vertex-disjoint paths. Pairs are routed in input order
/// and each path grows through neighbors in ascending id order. Throws
/// std::invalid_argument on a malformed instance.
SolveOutcome solve(const Instance& inst, SolveMode mode, const SolveOptions& options = {});

enum class Verdict { no, yes, indeterminate };
std::string_view to_string(Verdict verdict);

/// Exactly one solution (count_up_to(2) finds one).
Verdict is_unique_solution(const Instance& inst, const SolveOptions& options = {});

/// Union of path vertices equals V(g).
bool spans_all_vertices(const Graph& g, const Linkage& l);

struct IrrelevantReport {
  std::set<VertexId> irrelevant;
  /// Vertices whose check ran out of budget.
  std::set<VertexId> indeterminate;
};

/// Non-terminal vertices whose deletion leaves solvability unchanged.
IrrelevantReport irrelevant_vertices(const Instance& inst, const SolveOptions& options = {},
                                     unsigned threads = 1);

/// Set of path endpoints. Throws std::invalid_argument for a single-vertex path.
std::set<VertexId> pattern_of(const Linkage& l);

/// Whether `l` is the only spanning linkage of `g` with its pattern. Every
/// pairing of the pattern is tried against the spanning solver. Throws
/// std::invalid_argument when `l` is not a spanning linkage of `g`.
Verdict is_vital_linkage(const Graph& g, const Linkage& l, const SolveOptions& options = {});

}  // namespace dpp
