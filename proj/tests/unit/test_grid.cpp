#include <doctest.h>

#include <algorithm>

#include "dpp/grid.hpp"
#include "oracles.hpp"

using namespace dpp;

namespace {

std::vector<bool> inner_mask(const GridLayout& layout) {
  std::vector<bool> mask(static_cast<std::size_t>(layout.vertex_count()));
  for (VertexId v = 0; v < layout.vertex_count(); ++v) mask[v] = layout.is_inner(v);
  return mask;
}

Path cells_to_path(const GridLayout& layout, std::initializer_list<Cell> cells) {
  Path p;
  for (Cell c : cells) p.vertices.push_back(layout.id_of(c));
  return p;
}

// Coordinates for the face-tracing oracle; subdivision vertices sit evenly
// along their host edge.
std::vector<std::pair<double, double>> drawing(const GridLayout& layout) {
  std::map<Edge, int> chain;
  for (const auto& [v, h] : layout.host_edge) ++chain[h.edge];
  std::vector<std::pair<double, double>> xy(static_cast<std::size_t>(layout.vertex_count()));
  for (VertexId v = 0; v < layout.vertex_count(); ++v) {
    if (const auto& c = layout.cell_of[v]) xy[v] = {c->col, -c->row};
  }
  for (const auto& [v, h] : layout.host_edge) {
    const double t = static_cast<double>(h.ordinal) / (chain[h.edge] + 1);
    const auto a = xy[h.edge.first];
    const auto b = xy[h.edge.second];
    xy[v] = {a.first + t * (b.first - a.first), a.second + t * (b.second - a.second)};
  }
  return xy;
}

}  // namespace

TEST_CASE("make_grid sizes") {
  auto g11 = make_grid(1, 1);
  CHECK(g11.graph.vertex_count() == 1);
  CHECK(g11.graph.edge_count() == 0);
  auto g33 = make_grid(3, 3);
  CHECK(g33.graph.vertex_count() == 9);
  CHECK(g33.graph.edge_count() == 12);
  auto g55 = make_grid(5, 5);
  CHECK(g55.graph.vertex_count() == 25);
  CHECK(g55.graph.edge_count() == 40);
  CHECK(inner_vertices(g55.layout).size() == 9);
  CHECK_THROWS_AS(make_grid(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(3, 0), std::invalid_argument);
}

TEST_CASE("grid counts, degrees and inner vertices for all small shapes") {
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 7; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      auto [g, layout] = make_grid(m, n);
      CHECK(g.vertex_count() == m * n);
      CHECK(g.edge_count() == static_cast<std::size_t>(m * (n - 1) + n * (m - 1)));
      if (m >= 2 && n >= 2) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          CHECK(g.degree(v) >= 2);
          CHECK(g.degree(v) <= 4);
        }
      }
      CHECK(inner_vertices(layout).size() ==
            static_cast<std::size_t>(std::max(0, m - 2) * std::max(0, n - 2)));
      // Ids follow (r-1)*n + (c-1).
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        CHECK(layout.id_of(*layout.cell_of[v]) == v);
      }
      CHECK(is_planar_certificate(g, layout));
    }
  }
}

TEST_CASE("inner vertices of named grids") {
  const auto g33 = make_grid(3, 3);
  CHECK(inner_vertices(g33.layout) == std::set<VertexId>{4});
  CHECK(inner_vertices(make_grid(2, 5).layout).empty());
  const auto g55 = make_grid(5, 5);
  std::set<VertexId> expected;
  for (int r = 2; r <= 4; ++r) {
    for (int c = 2; c <= 4; ++c) expected.insert(g55.layout.id_of({r, c}));
  }
  CHECK(inner_vertices(g55.layout) == expected);
}

TEST_CASE("inner vertices match the outer face of the drawing") {
  for (int m = 2; m <= 5; ++m) {
    for (int n = 2; n <= 5; ++n) {
      const auto grid = make_grid(m, n);
      const auto outer = testing::outer_face_vertices(grid.graph, drawing(grid.layout));
      for (VertexId v = 0; v < grid.graph.vertex_count(); ++v) {
        CHECK(grid.layout.is_inner(v) == !outer.contains(v));
      }
    }
  }
}

TEST_CASE("subdivide_edges") {
  const auto base = make_grid(3, 3);
  SUBCASE("empty plan is the identity") {
    const auto same = subdivide_edges(base.graph, base.layout, {});
    CHECK(same.graph == base.graph);
    CHECK(same.layout == base.layout);
  }
  SUBCASE("one boundary edge gains one vertex") {
    const auto out = subdivide_edges(base.graph, base.layout, {{Edge(0, 1), 1}});
    CHECK(out.graph.vertex_count() == 10);
    CHECK(out.graph.edge_count() == 13);
    CHECK(out.layout.role_of[9] == Role::subdivision);
    CHECK(out.layout.host_edge.at(9).edge == Edge(0, 1));
    CHECK_FALSE(out.layout.is_inner(9));
    CHECK(is_planar_certificate(out.graph, out.layout));
  }
  SUBCASE("edge between centre and a side midpoint") {
    // The host edge (1,2)-(2,2) separates two bounded faces, so the new
    // vertices are off the outer face even though one host endpoint is on it.
    const Edge host(base.layout.id_of({1, 2}), base.layout.id_of({2, 2}));
    const auto out = subdivide_edges(base.graph, base.layout, {{host, 2}});
    CHECK(out.graph.vertex_count() == 11);
    const auto outer = testing::outer_face_vertices(out.graph, drawing(out.layout));
    for (VertexId v : {9, 10}) {
      CHECK_FALSE(outer.contains(v));
      CHECK(out.layout.is_inner(v) == !outer.contains(v));
    }
    CHECK(is_planar_certificate(out.graph, out.layout));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(subdivide_edges(base.graph, base.layout, {{Edge(0, 8), 1}}),
                    std::invalid_argument);
    Graph with_arc = base.graph;
    with_arc.add_edge(0, 6);
    CHECK_THROWS_WITH_AS(subdivide_edges(with_arc, base.layout, {{Edge(0, 6), 1}}),
                         doctest::Contains("arc-exterior"), std::invalid_argument);
  }
}

TEST_CASE("subdivision preserves certificate and original inner set; outer face agrees") {
  const auto base = make_grid(4, 5);
  const auto edges = base.graph.edges();
  for (std::size_t i = 0; i < edges.size(); i += 3) {
    std::map<Edge, int> plan{{edges[i], 1 + static_cast<int>(i % 3)}};
    if (i + 5 < edges.size()) plan[edges[i + 5]] = 2;
    const auto out = subdivide_edges(base.graph, base.layout, plan);
    CHECK(is_planar_certificate(out.graph, out.layout));
    for (VertexId v = 0; v < base.graph.vertex_count(); ++v) {
      CHECK(out.layout.is_inner(v) == base.layout.is_inner(v));
    }
    const auto outer = testing::outer_face_vertices(out.graph, drawing(out.layout));
    for (VertexId v = 0; v < out.graph.vertex_count(); ++v) {
      CHECK(out.layout.is_inner(v) == !outer.contains(v));
    }
  }
}

TEST_CASE("crossing_count examples") {
  const auto g33 = make_grid(3, 3);
  CHECK(crossing_count(cells_to_path(g33.layout, {{2, 1}, {2, 2}, {2, 3}}), g33.layout) == 1);
  CHECK(crossing_count(cells_to_path(g33.layout, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}}),
                       g33.layout) == 0);
  CHECK_FALSE(crossing_count(cells_to_path(g33.layout, {{2, 2}, {2, 3}}), g33.layout).has_value());

  const auto g55 = make_grid(5, 5);
  const Path p = cells_to_path(
      g55.layout, {{1, 2}, {2, 2}, {3, 2}, {3, 1}, {4, 1}, {4, 2}, {4, 3}, {5, 3}});
  CHECK(testing::brute_force_crossings(p.vertices, inner_mask(g55.layout)) == 2);
  CHECK(crossing_count(p, g55.layout) == 2);
}

TEST_CASE("crossing_report") {
  const auto g33 = make_grid(3, 3);
  Linkage border{{cells_to_path(g33.layout, {{1, 1}, {1, 2}, {1, 3}})}};
  auto report = crossing_report(border, g33.layout);
  CHECK(report.per_path == std::vector<int>{0});
  CHECK(report.total == 0);

  Linkage middle{{cells_to_path(g33.layout, {{2, 1}, {2, 2}, {2, 3}})}};
  report = crossing_report(middle, g33.layout);
  CHECK(report.per_path == std::vector<int>{1});
  CHECK(report.total == 1);

  Linkage bad{{cells_to_path(g33.layout, {{2, 2}, {2, 1}}), middle.paths[0]}};
  bad.paths[1] = cells_to_path(g33.layout, {{3, 1}, {3, 2}});
  report = crossing_report(bad, g33.layout);
  CHECK(report.undefined_paths == std::set<std::size_t>{0});
  CHECK(report.total == 0);
}

TEST_CASE("maximal-run count equals brute-force split maximum on 4x4 paths") {
  const auto grid = make_grid(4, 4);
  const auto mask = inner_mask(grid.layout);
  std::size_t checked = 0;
  testing::for_each_simple_path(grid.graph, 7, [&](const std::vector<VertexId>& vs) {
    const Path p{vs};
    const int expected = testing::brute_force_crossings(vs, mask);
    const auto got = crossing_count(p, grid.layout);
    if (expected < 0) {
      CHECK_FALSE(got.has_value());
    } else {
      CHECK(got == expected);
    }
    Path reversed{std::vector<VertexId>(vs.rbegin(), vs.rend())};
    CHECK(crossing_count(reversed, grid.layout) == got);
    ++checked;
  });
  CHECK(checked > 1000);
}

TEST_CASE("planarity certificate with exterior arcs") {
  const auto g55 = make_grid(5, 5);
  auto left = [&](int j) { return g55.layout.id_of({5 - j, 1}); };
  CHECK(is_planar_certificate(g55.graph, g55.layout));

  Graph nested = g55.graph;
  nested.add_edge(left(1), left(3));
  nested.add_edge(left(0), left(4));
  CHECK(is_planar_certificate(nested, g55.layout));

  Graph interleaved = g55.graph;
  interleaved.add_edge(left(0), left(2));
  interleaved.add_edge(left(1), left(3));
  CHECK_FALSE(is_planar_certificate(interleaved, g55.layout));

  Graph across = g55.graph;
  across.add_edge(left(0), g55.layout.id_of({1, 5}));
  CHECK_FALSE(is_planar_certificate(across, g55.layout));

  Graph inner_chord = g55.graph;
  inner_chord.add_edge(g55.layout.id_of({2, 2}), g55.layout.id_of({3, 3}));
  CHECK_FALSE(is_planar_certificate(inner_chord, g55.layout));

  // Arcs on different sides never conflict.
  Graph two_sides = g55.graph;
  two_sides.add_edge(left(0), left(2));
  two_sides.add_edge(g55.layout.id_of({5, 1}), g55.layout.id_of({5, 3}));
  CHECK(is_planar_certificate(two_sides, g55.layout));
}

TEST_CASE("arcs drawn through arc-exterior vertices are chains") {
  auto [g, layout] = make_grid(3, 3);
  const VertexId a = g.add_vertex();
  const VertexId b = g.add_vertex();
  layout.cell_of.resize(11);
  layout.role_of.push_back(Role::arc_exterior);
  layout.role_of.push_back(Role::arc_exterior);
  g.add_edge(0, a);
  g.add_edge(a, b);
  g.add_edge(b, 6);
  CHECK(is_planar_certificate(g, layout));
  CHECK_FALSE(layout.is_inner(a));
  g.add_edge(3, 8);  // left-middle to bottom-right: no common side
  CHECK_FALSE(is_planar_certificate(g, layout));
}
