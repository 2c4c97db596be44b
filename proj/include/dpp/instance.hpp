#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpp/graph.hpp"
#include "dpp/grid.hpp"

namespace dpp {

struct TerminalPair {
  VertexId source = 0;
  VertexId target = 0;
  friend auto operator<=>(const TerminalPair&, const TerminalPair&) = default;
};

/// Parameters of the generator that produced an instance.
struct GeneratorMeta {
  int k = 0;
  std::string arc_rule;
  std::string s0_placement;
  friend bool operator==(const GeneratorMeta&, const GeneratorMeta&) = default;
};

/// A disjoint paths input: a graph and an ordered list of terminal pairs.
/// The layout is present for grid-based instances only.
struct Instance {
  Graph graph;
  std::optional<GridLayout> layout;
  std::vector<TerminalPair> pairs;
  std::optional<GeneratorMeta> meta;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws std::invalid_argument when a terminal is out of range or two
/// terminals coincide.
void validate_terminals(const Instance& inst);

/// Empty when `l` solves `inst`: one path per pair from source to target,
/// all paths valid in the graph and pairwise vertex-disjoint.
std::string linkage_defect(const Instance& inst, const Linkage& l);

}  // namespace dpp
