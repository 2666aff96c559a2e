#include <catch_amalgamated.hpp>

#include <random>

#include "ciso/canonical.hpp"
#include "ciso/extremal.hpp"
#include "ciso/survey.hpp"
#include "ciso/trees.hpp"
#include "oracles.hpp"

using namespace ciso;

TEST_CASE("tree enumeration counts") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK(enumerate_trees(n).size() == expected[n - 1]);
  CHECK_THROWS_AS(enumerate_trees(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_trees(13), std::invalid_argument);
}

TEST_CASE("tree enumeration is a transversal of isomorphism classes (oracle n <= 8)") {
  for (int n = 1; n <= 8; ++n) {
    const auto ts = enumerate_trees(n);
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) REQUIRE_FALSE(oracle::isomorphic(ts[i].graph(), ts[j].graph()));
  }
}

TEST_CASE("tree codes") {
  CHECK(isomorphic(trees::path(4), Tree::from_edges(4, {{2, 0}, {0, 3}, {3, 1}})));
  CHECK_FALSE(isomorphic(trees::path(4), trees::star(4)));
  CHECK_THROWS_AS(Tree::from_edges(4, {{0, 1}, {1, 2}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree::from_edges(3, {{0, 1}}), std::invalid_argument);
  std::mt19937_64 rng(9);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph t = oracle::random_connected(rng, n, 0.0);
    const Graph u = oracle::random_relabel(rng, t);
    CHECK(canonical_code(Tree::from_graph(t)) == canonical_code(Tree::from_graph(u)));
  }
}

TEST_CASE("cons examples") {
  const auto one = cons(Tree::from_edges(1, {}), 4);
  CHECK(one.graph.num_vertices() == 5);
  CHECK(one.graph.num_edges() == 5);
  CHECK(isomorphic(one.graph, graphs::cycle_plus(4)));
  const auto fig = cons(trees::star_plus(), 4);
  CHECK(fig.graph.num_vertices() == 25);
  CHECK(fig.graph.num_edges() == 29);
  CHECK(canonical_isolating_set(fig.decomposition) == VertexSet::range(5));
  for (int t = 1; t <= 8; ++t) CHECK(cons(trees::path(t), 4).graph.num_edges() == 6 * t - 1);
  CHECK_THROWS_AS(cons(trees::path(13), 4), std::invalid_argument);
}

TEST_CASE("recognize examples") {
  const auto d = recognize(graphs::cycle_plus(4), 4);
  REQUIRE(d);
  CHECK(d->constituents.size() == 1);
  CHECK(d->connection_vertices == VertexSet{4});
  CHECK(d->constituents[0].attachment == 0);
  CHECK(canonical_isolating_set(*d).size() == 1);
  CHECK_FALSE(recognize(graphs::diamond(), 4));
  CHECK_FALSE(recognize(graphs::cycle(4), 4));
  CHECK_FALSE(recognize(graphs::cycle(5), 4));
  const auto c3 = cons(trees::path(2), 3);
  CHECK(c3.graph.num_edges() == 9);
  CHECK(iota_exact(c3.graph, 3).iota == 2);
  CHECK(canonical_isolating_set(*recognize(c3.graph, 3)).size() == 2);
}

TEST_CASE("cons/recognize round trip for every tree up to 6 vertices, k = 3, 4, 5") {
  std::mt19937_64 rng(12);
  for (int t = 1; t <= 6; ++t) {
    for (const auto& tree : enumerate_trees(t)) {
      for (int k = 3; k <= 5; ++k) {
        const auto built = cons(tree, k);
        const Graph shuffled = oracle::random_relabel(rng, built.graph);
        for (const Graph* g : {&built.graph, &shuffled}) {
          const auto d = recognize(*g, k);
          REQUIRE(d);
          CHECK(isomorphic(d->tree(), tree));
          CHECK(d->vertices() == g->vertices());
          CHECK(is_isolating(*g, canonical_isolating_set(*d), k));
          for (const auto& c : d->constituents) {
            CHECK(static_cast<int>(c.cycle.size()) == k);
            CHECK(c.cycle.front() == c.attachment);
            CHECK(g->adjacent(c.connection, c.attachment));
          }
        }
        if (built.graph.num_vertices() <= 20) {
          const auto exact = iota_exact(built.graph, k);
          CHECK(exact.iota == t);
          CHECK(static_cast<long long>(exact.iota) * (k + 2) == built.graph.num_edges() + 1);
        }
      }
    }
  }
}

TEST_CASE("recognize rejects every non-cons connected graph with n <= 8") {
  // Only n = 5 qualifies by order at k = 4; among those only C4+ is cons(K1, C4).
  int accepted = 0;
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_connected(n))
      if (recognize(g, 4)) {
        ++accepted;
        CHECK(isomorphic(g, graphs::cycle_plus(4)));
      }
  CHECK(accepted == 1);
  // k = 3 admits C3+ (n = 4) and the two-constituent graph (n = 8).
  int accepted3 = 0;
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_connected(n))
      if (recognize(g, 3)) ++accepted3;
  CHECK(accepted3 == 2);
}

TEST_CASE("recognize rejects near misses") {
  const auto base = cons(trees::path(2), 4).graph;
  auto e = base.edges();
  e.emplace_back(3, 7);  // joins the two constituent cycles
  CHECK_FALSE(recognize(Graph::from_edge_list(base.num_vertices(), e), 4));
  // Dropping an edge leaves too few edges.
  auto e2 = base.edges();
  e2.pop_back();
  CHECK_FALSE(recognize(Graph::from_edge_list(base.num_vertices(), e2), 4));
  // Right counts, wrong shape: move the tree edge so it joins a connection vertex to the other cycle.
  auto e3 = base.edges();
  std::erase(e3, Edge{0, 1});
  e3.emplace_back(0, 7);
  CHECK_FALSE(recognize(Graph::from_edge_list(base.num_vertices(), e3), 4));
}

TEST_CASE("verify_extremal_equality") {
  for (int t = 1; t <= 4; ++t)
    for (const auto& tree : enumerate_trees(t)) CHECK(verify_extremal_equality(cons(tree, 4).graph, 4));
  CHECK_FALSE(verify_extremal_equality(graphs::diamond(), 4));
  CHECK_FALSE(verify_extremal_equality(graphs::cycle(4), 4));
}
