#include <doctest.h>

#include <sstream>

#include "robspan/error.hpp"
#include "robspan/geometry.hpp"
#include "robspan/graph_io.hpp"
#include "support.hpp"

using namespace robspan;

TEST_CASE("distance") {
  const std::vector<double> o1{0}, a{0, 0}, b{3, 4}, x{1}, y{7};
  CHECK(distance(o1, o1) == 0.0);
  CHECK(distance(a, b) == 5.0);
  CHECK(distance(x, y) == 6.0);
  CHECK(distance(y, x) == 6.0);
  CHECK_THROWS_AS(distance(x, a), InputError);
}

TEST_CASE("point set validation") {
  const PointSet line = PointSet::line({3, 1, 2});
  CHECK(line.coord(0, 0) == 1);
  CHECK(line.coord(2, 0) == 3);
  CHECK_THROWS_AS(PointSet::line({1, 2, 1}), InputError);
  CHECK_THROWS_AS(PointSet(2, {0, 0, 0, 0}), InputError);
  CHECK_THROWS_AS(PointSet(2, {0, 0, 1}), InputError);
  CHECK_THROWS_AS(PointSet::line({1, std::numeric_limits<double>::quiet_NaN()}), InputError);
  CHECK_THROWS_AS(PointSet(0, {}), InputError);
  CHECK(PointSet::line({}).size() == 0);
  // d > 1 keeps input order
  const PointSet plane(2, {5, 5, 0, 0});
  CHECK(plane.coord(0, 0) == 5);
}

TEST_CASE("vertex sets") {
  const VertexSet a{3, 1, 3, 2};
  CHECK(a.items() == std::vector<Index>{1, 2, 3});
  const VertexSet b{2, 5};
  CHECK(a.unite(b) == VertexSet{1, 2, 3, 5});
  CHECK(a.minus(b) == VertexSet{1, 3});
  CHECK(a.includes(VertexSet{1, 3}));
  CHECK_FALSE(a.includes(b));
  CHECK(b.complement(4) == VertexSet{0, 1, 3});
  CHECK_THROWS_AS(b.check_range(5), InputError);
  CHECK_NOTHROW(b.check_range(6));
}

TEST_CASE("graph invariants") {
  auto pts = share(PointSet::integer_line(4));
  CHECK_THROWS_AS(GeomGraph(pts, {{0, 0}}), InputError);
  CHECK_THROWS_AS(GeomGraph(pts, {{0, 4}}), InputError);
  CHECK_THROWS_AS(GeomGraph(pts, {{0, 1}, {1, 0}}), InputError);
  CHECK(GeomGraph(pts, {{0, 1}, {1, 0}}, DuplicateEdges::merge).edge_count() == 1);
  const GeomGraph g(pts, {{3, 0}, {1, 2}});
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 3);
  CHECK(g.edges()[0].length == 3.0);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("remove_vertices examples") {
  const GeomGraph path = testing_support::path_graph(3);
  const GeomGraph cut = remove_vertices(path, VertexSet{1});
  CHECK(cut.vertex_count() == 2);
  CHECK(cut.edge_count() == 0);
  CHECK(cut.index_count() == 3);
  CHECK_FALSE(cut.present(1));
  CHECK(path.edge_count() == 2);

  const GeomGraph same = remove_vertices(path, {});
  CHECK(same.edge_count() == 2);
  CHECK(same.vertex_count() == 3);

  const GeomGraph tri(share(PointSet(2, {0, 0, 1, 0, 0, 1})), {{0, 1}, {1, 2}, {0, 2}});
  const GeomGraph one = remove_vertices(tri, VertexSet{2});
  REQUIRE(one.edge_count() == 1);
  CHECK(one.edges()[0].u == 0);
  CHECK(one.edges()[0].v == 1);
  CHECK_THROWS_AS(remove_vertices(tri, VertexSet{3}), InputError);
}

TEST_CASE("remove_vertices composes and accounts for every edge") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const GeomGraph g = testing_support::from_oracle(testing_support::random_graph(rng, 12, 2, 0.3));
    const VertexSet a = testing_support::random_subset(rng, 12, 3);
    const VertexSet b = testing_support::random_subset(rng, 12, 4);
    const GeomGraph twice = remove_vertices(remove_vertices(g, a), b);
    const GeomGraph once = remove_vertices(g, a.unite(b));
    REQUIRE(twice.edge_count() == once.edge_count());
    for (std::size_t i = 0; i < once.edge_count(); ++i) {
      CHECK(twice.edges()[i].u == once.edges()[i].u);
      CHECK(twice.edges()[i].v == once.edges()[i].v);
    }
    CHECK(twice.vertices() == once.vertices());
    std::size_t incident = 0;
    for (const Edge& e : g.edges()) incident += (a.contains(e.u) || a.contains(e.v)) ? 1 : 0;
    CHECK(remove_vertices(g, a).edge_count() + incident == g.edge_count());
  }
}

TEST_CASE("restrict_to keeps the induced subgraph") {
  const GeomGraph path = testing_support::path_graph(5);
  const GeomGraph sub = restrict_to(path, VertexSet{1, 2, 4});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 1);
  CHECK(sub.has_edge(1, 2));
}

TEST_CASE("graph text round trip") {
  std::mt19937_64 rng(5);
  const GeomGraph g = testing_support::from_oracle(testing_support::random_graph(rng, 20, 2, 0.2));
  std::ostringstream first;
  write_graph(first, g);
  std::istringstream in(first.str());
  const GeomGraph back = read_graph(in);
  std::ostringstream second;
  write_graph(second, back);
  CHECK(first.str() == second.str());
  for (std::size_t i = 0; i < g.points().coords().size(); ++i) {
    CHECK(g.points().coords()[i] == back.points().coords()[i]);
  }
}

TEST_CASE("graph parsing") {
  std::istringstream ok("dim 1 n 3 m 2\n0.5\n1\n2.25\n0 1\n1 2\n");
  const GeomGraph g = read_graph(ok);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);

  std::istringstream empty("dim 2 n 2 m 0\n0 0\n1 1\n");
  CHECK(read_graph(empty).edge_count() == 0);

  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_graph(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("dim 1 n two m 0\n") == 1);
  CHECK(line_of("dim 1 n 2 m 1\n1\n2\n0 2\n") == 4);
  CHECK(line_of("dim 1 n 2 m 2\n1\n2\n0 1\n1 0\n") == 5);
  CHECK(line_of("dim 1 n 2 m 1\n1\n2\n1 1\n") == 4);
  CHECK(line_of("dim 2 n 2 m 0\n1 2\n3\n") == 3);
  CHECK(line_of("dim 1 n 2 m 0\n2\n1\n") == 3);
  CHECK(line_of("dim 1 n 1 m 0\n1\nextra\n") == 3);
}

TEST_CASE("vertex set files") {
  std::istringstream in("4\n1\n");
  CHECK(read_vertex_set(in) == VertexSet{1, 4});
  std::istringstream dup("1\n1\n");
  CHECK_THROWS_AS(read_vertex_set(dup), ParseError);
  std::ostringstream out;
  write_vertex_set(out, VertexSet{2, 0});
  CHECK(out.str() == "0\n2\n");
}
