#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "ciso/graph.hpp"
#include "ciso/vertex_set.hpp"
#include "oracles.hpp"

using namespace ciso;

TEST_CASE("VertexSet basics") {
  VertexSet s{3, 0, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(4));
  CHECK(s.min() == 0);
  CHECK(s.max() == 5);
  CHECK(s.to_vector() == std::vector<Vertex>{0, 3, 5});
  CHECK(to_string(s) == "{0,3,5}");
  CHECK(to_string(VertexSet{}) == "{}");
  CHECK((s - VertexSet{0}) == VertexSet{3, 5});
  CHECK(VertexSet::range(64).size() == 64);
  CHECK_THROWS_AS(VertexSet::single(64), std::out_of_range);
}

TEST_CASE("lex_less orders sets by their least differing member") {
  // Equivalent to comparing sorted member lists lexicographically.
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5000; ++i) {
    const auto a = VertexSet::from_bits(rng() & 0xff), b = VertexSet::from_bits(rng() & 0xff);
    const auto va = a.to_vector(), vb = b.to_vector();
    CHECK(lex_less(a, b) == std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end()));
  }
}

TEST_CASE("Graph construction validates input") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS(Graph(65));
  CHECK(Graph::from_edge_list(3, {{0, 1}, {1, 0}}).num_edges() == 1);
  std::vector<VertexSet> asym{VertexSet{1}, VertexSet{}};
  CHECK_THROWS_AS(Graph::from_adjacency(asym), std::invalid_argument);
}

TEST_CASE("degrees and accessors") {
  const Graph d = graphs::diamond();
  CHECK(d.num_edges() == 5);
  CHECK(d.max_degree() == 3);
  CHECK(d.min_degree() == 2);
  CHECK(d.degree(1) == 3);
  CHECK(d.degree(3) == 3);
  CHECK(d.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("delete_closed_neighborhood") {
  SECTION("C4, D={0} leaves the single vertex 2") {
    const auto sub = delete_closed_neighborhood(graphs::cycle(4), VertexSet{0});
    CHECK(sub.embedding == std::vector<Vertex>{2});
    CHECK(sub.graph.num_edges() == 0);
  }
  SECTION("diamond, D = a degree-3 vertex leaves nothing") {
    CHECK(delete_closed_neighborhood(graphs::diamond(), VertexSet{1}).graph.num_vertices() == 0);
  }
  SECTION("C4+, D = the connection vertex leaves P3") {
    // The connection vertex only reaches its attachment, leaving P3.
    const auto sub = delete_closed_neighborhood(graphs::cycle_plus(4), VertexSet{4});
    CHECK(sub.graph.num_vertices() == 3);
    CHECK(sub.graph.num_edges() == 2);
  }
}

TEST_CASE("closed neighbourhood properties on random graphs") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.3);
    const VertexSet s = VertexSet::from_bits(rng()) & g.vertices();
    CHECK(s.is_subset_of(closed_neighborhood(g, s)));
    const auto rest = delete_closed_neighborhood(g, s);
    for (Vertex v : rest.parent_vertices()) CHECK_FALSE(g.neighbors(v).intersects(s));
    const auto parts = connected_components(g);
    int total = 0;
    for (const auto& p : parts) total += p.graph.num_vertices();
    CHECK(total == g.num_vertices());
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        CHECK(boundary_edge_count(g, parts[i].parent_vertices(), parts[j].parent_vertices()) == 0);
  }
}

TEST_CASE("connected_components") {
  CHECK(connected_components(graphs::cycle(4)).size() == 1);
  const auto parts = connected_components(disjoint_union(graphs::cycle(4), graphs::diamond()));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].graph.num_vertices() == 4);
  CHECK(parts[1].graph.num_vertices() == 4);
  CHECK(parts[1].embedding == std::vector<Vertex>{4, 5, 6, 7});
  CHECK(connected_components(Graph(0)).empty());
}

TEST_CASE("boundary_edge_count") {
  const Graph c4 = graphs::cycle(4);
  CHECK(boundary_edge_count(c4, VertexSet{0}, VertexSet{2}) == 0);
  CHECK(boundary_edge_count(c4, VertexSet{0, 1}, VertexSet{2, 3}) == 2);
  CHECK(boundary_edge_count(graphs::diamond(), VertexSet{1, 3}, VertexSet{0, 2}) == 4);
  CHECK_THROWS_AS(boundary_edge_count(c4, VertexSet{0, 1}, VertexSet{1}), std::invalid_argument);
}

TEST_CASE("edge-list text format") {
  std::istringstream in("# a comment\nn 4\n0 1\n\n1 2\n2 3\n3 0\n");
  const Graph g = read_edge_list(in);
  CHECK(g == graphs::cycle(4));
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  CHECK(read_edge_list(back) == g);

  std::istringstream bad("n 3\n0 1\n1 x\n");
  try {
    (void)read_edge_list(bad);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::istringstream missing("0 1\n");
  CHECK_THROWS_AS(read_edge_list(missing), std::invalid_argument);
}

TEST_CASE("induced_subgraph keeps ascending embedding") {
  const Graph g = graphs::complete(5);
  const auto sub = induced_subgraph(g, VertexSet{4, 1, 3});
  CHECK(sub.embedding == std::vector<Vertex>{1, 3, 4});
  CHECK(sub.graph.num_edges() == 3);
  CHECK(sub.to_parent(VertexSet{0, 2}) == VertexSet{1, 4});
}
