#include <doctest.h>

#include "dpp/calibration.hpp"
#include "dpp/oracle.hpp"

#include <cstdlib>

using namespace dpp;

namespace {

SolverHandle oracle_solver() {
  return [](const Instance& inst, SolveMode mode) {
    SolveOutcome out = brute_force_oracle(inst);
    if (out.solutions.size() > mode.cap) out.solutions.resize(mode.cap);
    return out;
  };
}

}  // namespace

TEST_CASE("k_max=1 calibration against the exhaustive oracle") {
  const auto cal = calibrate_arc_rule(1, oracle_solver());
  const Instance inst = build_instance(1, cal.rule, cal.placement);
  const auto checks = check_instance(inst, oracle_solver());
  CHECK(checks.passed());
  CHECK(checks.total_crossings == 1);
}

TEST_CASE("k_max=2 calibration yields the doubling profile") {
  const auto cal = calibrate_arc_rule(2, default_solver());
  CHECK(cal.rule.identifier == "pow2");
  CHECK(cal.placement == S0Placement::bottom_left);
  const auto checks = check_instance(build_instance(2, cal.rule, cal.placement), default_solver());
  CHECK(checks.passed());
  CHECK(checks.crossing_profile == std::vector<int>{0, 1, 2});
  CHECK(checks.total_crossings == 3);
  // The report records every candidate that was tried, including failures.
  CHECK(cal.report.size() > 1);
}

TEST_CASE("default placement fails for every rule") {
  CHECK_THROWS_AS(calibrate_arc_rule(2, default_solver(), candidate_arc_rules(),
                                     {S0Placement::top_right}),
                  CalibrationError);
  try {
    calibrate_arc_rule(1, default_solver(), candidate_arc_rules(), {S0Placement::top_right});
    FAIL("expected CalibrationError");
  } catch (const CalibrationError& e) {
    CHECK_FALSE(e.report().empty());
    for (const auto& c : e.report()) CHECK_FALSE(c.violations.empty());
  }
}

TEST_CASE("empty candidate set is an error") {
  CHECK_THROWS_AS(calibrate_arc_rule(1, default_solver(), {}), CalibrationError);
}

TEST_CASE("two indistinguishable candidates are ambiguous") {
  const ArcRule a = *arc_rule_by_name("pow2");
  ArcRule b = a;
  b.identifier = "pow2-copy";
  CHECK_THROWS_AS(calibrate_arc_rule(2, default_solver(), {a, b}), CalibrationError);
}

TEST_CASE("removing an arc used by the solution breaks the battery") {
  const auto cal = calibrate_arc_rule(2, default_solver());
  const Instance inst = build_instance(2, cal.rule, cal.placement);
  const auto out = solve(inst, SolveMode::decide());
  REQUIRE(out.solutions.size() == 1);
  const auto& layout = *inst.layout;
  int used_arcs = 0;
  for (const auto& path : out.solutions[0].paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const Cell a = *layout.cell_of[path.vertices[i]];
      const Cell b = *layout.cell_of[path.vertices[i + 1]];
      if (std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1) continue;
      ++used_arcs;
      Instance tampered = inst;
      tampered.graph.remove_edge(path.vertices[i], path.vertices[i + 1]);
      const auto checks = check_instance(tampered, default_solver());
      CHECK_FALSE(checks.passed());
      CHECK_FALSE(checks.violations().empty());
    }
  }
  CHECK(used_arcs > 0);
}
