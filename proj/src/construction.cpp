#include "dpp/construction.hpp"

#include <array>
#include <stdexcept>

namespace dpp {

namespace {

constexpr std::array<std::string_view, 3> kPlacementNames = {"top-right", "bottom-right",
                                                             "bottom-left"};

int pow2(int e) { return 1 << e; }

}  // namespace

std::string_view to_string(S0Placement placement) {
  return kPlacementNames.at(static_cast<std::size_t>(placement));
}

std::optional<S0Placement> placement_from_string(std::string_view text) {
  for (std::size_t i = 0; i < kPlacementNames.size(); ++i) {
    if (kPlacementNames[i] == text) return static_cast<S0Placement>(i);
  }
  return std::nullopt;
}

std::vector<S0Placement> all_placements() {
  return {S0Placement::top_right, S0Placement::bottom_right, S0Placement::bottom_left};
}

std::vector<ArcRule> candidate_arc_rules() {
  return {
      ArcRule{"pow2-minus-1", [](int k, int i) { return pow2(k - i) - 1; }},
      ArcRule{"pow2", [](int k, int i) { return pow2(k - i); }},
      ArcRule{"pow2-plus-1", [](int k, int i) { return pow2(k - i) + 1; }},
  };
}

std::optional<ArcRule> arc_rule_by_name(std::string_view identifier) {
  for (auto& rule : candidate_arc_rules()) {
    if (rule.identifier == identifier) return rule;
  }
  return std::nullopt;
}

VertexId left_border_vertex(const GridLayout& layout, int j) {
  if (j < 0 || j >= layout.rows) throw std::out_of_range("left border index out of range");
  return layout.id_of(Cell{layout.rows - j, 1});
}

VertexId right_border_vertex(const GridLayout& layout, int j) {
  if (j < 0 || j >= layout.rows) throw std::out_of_range("right border index out of range");
  return layout.id_of(Cell{layout.rows - j, layout.cols});
}

Instance build_instance(int k, const ArcRule& rule, S0Placement s0_placement) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > 12) throw std::invalid_argument("k too large for an explicit grid");
  const int top = pow2(k);
  const int side = top + 1;
  auto grid = make_grid(side, side);

  Instance inst;
  inst.graph = std::move(grid.graph);
  inst.layout = std::move(grid.layout);
  const GridLayout& layout = *inst.layout;
  auto n = [&](int j) { return left_border_vertex(layout, j); };
  auto m = [&](int j) { return right_border_vertex(layout, j); };

  VertexId s0 = 0;
  switch (s0_placement) {
    case S0Placement::top_right: s0 = m(top); break;
    case S0Placement::bottom_right: s0 = m(0); break;
    case S0Placement::bottom_left: s0 = n(0); break;
  }
  inst.pairs.push_back({s0, n(top)});
  inst.pairs.push_back({n(pow2(k - 1)), m(pow2(k - 1))});
  for (int i = 2; i <= k; ++i) {
    inst.pairs.push_back({n(pow2(k - i)), n(3 * pow2(k - i))});
  }

  auto add_arcs = [&](int i, int j, auto border) {
    const int count = rule.arcs_for_terminal(k, i);
    if (count < 0) throw std::invalid_argument("arc rule " + rule.identifier + ": negative count");
    for (int a = 1; a <= count; ++a) {
      if (j - a < 0 || j + a > top) {
        throw std::invalid_argument("arc rule " + rule.identifier + ": arc " + std::to_string(a) +
                                    " around pair " + std::to_string(i) + " leaves the border");
      }
      const VertexId x = border(j - a);
      const VertexId y = border(j + a);
      if (inst.graph.has_edge(x, y)) {
        throw std::invalid_argument("arc rule " + rule.identifier + ": arc collides with edge");
      }
      inst.graph.add_edge(x, y);
    }
  };
  add_arcs(1, pow2(k - 1), m);
  for (int i = 2; i <= k; ++i) add_arcs(i, 3 * pow2(k - i), n);

  inst.meta = GeneratorMeta{k, rule.identifier, std::string(to_string(s0_placement))};
  validate_terminals(inst);
  return inst;
}

}  // namespace dpp
