#include <doctest.h>

#include "dpp/construction.hpp"
#include "dpp/render.hpp"
#include "dpp/solver.hpp"

using namespace dpp;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

Instance calibrated(int k) {
  return build_instance(k, *arc_rule_by_name("pow2"), S0Placement::bottom_left);
}

}  // namespace

TEST_CASE("svg of a bare instance") {
  const Instance inst = calibrated(2);
  const std::string svg = render_svg(inst);
  CHECK(svg.starts_with("<svg"));
  CHECK(count(svg, "<circle") == 25);
  CHECK(count(svg, "class=\"arc\"") == 3);
  CHECK(count(svg, "class=\"grid\"") == 40);
  CHECK(svg == render_svg(inst));
}

TEST_CASE("svg with the unique solution") {
  const Instance inst = calibrated(2);
  const auto out = solve(inst, SolveMode::decide());
  REQUIRE(out.solutions.size() == 1);
  const std::string svg = render_svg(inst, out.solutions[0]);
  CHECK(count(svg, "class=\"path\"") == 3);
  CHECK(svg == render_svg(inst, out.solutions[0]));
  CHECK(svg != render_svg(inst));
}

TEST_CASE("dot export") {
  const Instance inst = calibrated(1);
  const std::string dot = render_dot(inst);
  CHECK(dot.starts_with("graph"));
  CHECK(dot.find("role=\"grid-inner\"") != std::string::npos);
  CHECK(dot == render_dot(inst));
}

TEST_CASE("rendering needs a layout") {
  Instance bare;
  bare.graph = Graph(2);
  CHECK_THROWS_AS(render_svg(bare), std::invalid_argument);
  CHECK_THROWS_AS(render_dot(bare), std::invalid_argument);
}
