#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpp/instance.hpp"

namespace dpp {

/// Number of nested bypass arcs placed around the target of pair i (i >= 1)
/// for parameter k. Arcs around a border vertex n_j are {n_{j-a}, n_{j+a}}
/// for a = 1..count.
struct ArcRule {
  std::string identifier;
  std::function<int(int k, int i)> arcs_for_terminal;
};

enum class S0Placement { top_right, bottom_right, bottom_left };

std::string_view to_string(S0Placement placement);
std::optional<S0Placement> placement_from_string(std::string_view text);

/// Default placement first, then the alternates in the order tried by calibration.
std::vector<S0Placement> all_placements();

/// The three readings 2^(k-i)-1, 2^(k-i), 2^(k-i)+1.
std::vector<ArcRule> candidate_arc_rules();
std::optional<ArcRule> arc_rule_by_name(std::string_view identifier);

/// Index j of the left border vertex n_j (n_0 bottom-left, n_{2^k} top-left).
VertexId left_border_vertex(const GridLayout& layout, int j);
/// Right border mirror: m_0 bottom-right, m_{2^k} top-right.
VertexId right_border_vertex(const GridLayout& layout, int j);

/// Lower-bound instance on the (2^k+1) x (2^k+1) grid with k+1 terminal
/// pairs and exterior bypass arcs. Throws std::invalid_argument when k < 1
/// or the rule produces an out-of-range or duplicate arc.
Instance build_instance(int k, const ArcRule& rule,
                        S0Placement s0_placement = S0Placement::top_right);

}  // namespace dpp
