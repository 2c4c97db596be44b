#include <doctest.h>

#include <filesystem>

#include "dpp/construction.hpp"
#include "dpp/io.hpp"
#include "dpp/random_instances.hpp"

using namespace dpp;

namespace {

Instance calibrated(int k) {
  return build_instance(k, *arc_rule_by_name("pow2"), S0Placement::bottom_left);
}

}  // namespace

TEST_CASE("instance round trip") {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& rule : candidate_arc_rules()) {
      for (auto p : all_placements()) {
        Instance inst;
        try {
          inst = build_instance(k, rule, p);
        } catch (const std::invalid_argument&) {
          continue;
        }
        const std::string text = serialize_instance(inst);
        const Instance back = parse_instance(text);
        CHECK(back == inst);
        CHECK(serialize_instance(back) == text);
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = random_instance(seed, {});
    inst.graph.set_label(0, "a \"quoted\" label");
    CHECK(parse_instance(serialize_instance(inst)) == inst);
  }
}

TEST_CASE("subdivided layouts survive a round trip") {
  auto [g, layout] = make_grid(3, 3);
  auto sub = subdivide_edges(g, layout, {{Edge(1, 4), 2}, {Edge(0, 1), 1}});
  Instance inst{sub.graph, sub.layout, {{0, 8}}, std::nullopt};
  CHECK(parse_instance(serialize_instance(inst)) == inst);
}

TEST_CASE("malformed instances are rejected") {
  CHECK_THROWS_AS(parse_instance("not json"), ParseError);
  CHECK_THROWS_AS(parse_instance("{}"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"format":"dpp-instance","format_version":99,"vertex_count":2,"edges":[],"pairs":[]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"format":"dpp-instance","format_version":1,"vertex_count":2,"edges":[[0,5]],"pairs":[]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"format":"dpp-instance","format_version":1,"vertex_count":2,"edges":[[0,1]],"pairs":[[0,0]]})"),
                  ParseError);
  const Instance ok = parse_instance(
      R"({"format":"dpp-instance","format_version":1,"vertex_count":2,"edges":[[0,1]],"pairs":[[0,1]]})");
  CHECK(ok.graph.edge_count() == 1);
  CHECK_FALSE(ok.layout.has_value());
}

TEST_CASE("solution documents") {
  const Instance inst = calibrated(2);
  const auto out = solve(inst, SolveMode::count_up_to(2));
  const auto doc = make_solution_document(inst, out, SolveMode::count_up_to(2));
  CHECK(doc.unique == Verdict::yes);
  CHECK(doc.spanning);
  REQUIRE(doc.crossing.has_value());
  CHECK(doc.crossing->total == 3);
  CHECK(doc.instance_digest.starts_with("sha256:"));
  CHECK(doc.instance_digest.size() == 7 + 64);

  const std::string text = serialize_solution(doc);
  const auto back = parse_solution(text);
  CHECK(back == doc);
  CHECK(serialize_solution(back) == text);
  CHECK_NOTHROW(check_digest(back, inst));
  CHECK_THROWS_AS(check_digest(back, calibrated(1)), ParseError);

  // Decide mode cannot say anything about uniqueness.
  const auto decided = make_solution_document(inst, solve(inst, SolveMode::decide()),
                                              SolveMode::decide());
  CHECK(decided.unique == Verdict::indeterminate);
}

TEST_CASE("digest is stable and sensitive") {
  const Instance a = calibrated(1);
  Instance b = a;
  CHECK(instance_digest(a) == instance_digest(b));
  b.graph.remove_edge(0, 1);
  CHECK(instance_digest(a) != instance_digest(b));
}

TEST_CASE("edge lists") {
  const Graph g = parse_dimacs("c a square\np edge 4 4\ne 1 2\ne 2 3\n3 4\ne 4 1\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(0, 3));
  CHECK(parse_dimacs(write_dimacs(g)) == g);
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 x\n"), ParseError);
}

TEST_CASE("pair lists") {
  const auto pairs = parse_pair_list("1-5,2-6");
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == TerminalPair{0, 4});
  CHECK(pairs[1] == TerminalPair{1, 5});
  CHECK(parse_pair_list("").empty());
  CHECK_THROWS_AS(parse_pair_list("1-"), ParseError);
  CHECK_THROWS_AS(parse_pair_list("0-2"), ParseError);
}

TEST_CASE("load_instance detects the format") {
  const auto dir = std::filesystem::temp_directory_path() / "dpp_io_test";
  std::filesystem::create_directories(dir);
  const Instance inst = calibrated(1);
  write_text_file(dir / "inst.json", serialize_instance(inst));
  CHECK(load_instance(dir / "inst.json") == inst);

  write_text_file(dir / "g.col", "p edge 3 2\ne 1 2\ne 2 3\n");
  const Instance edge_list = load_instance(dir / "g.col", parse_pair_list("1-3"));
  CHECK(edge_list.graph.vertex_count() == 3);
  CHECK(edge_list.pairs.size() == 1);
  CHECK_THROWS(load_instance(dir / "missing.json"));
  std::filesystem::remove_all(dir);
}
