#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "ciso/canonical.hpp"
#include "oracles.hpp"

using namespace ciso;

TEST_CASE("canonical_form is invariant under relabelling") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 1000; ++it) {
    const Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 13), 0.4);
    const Graph h = oracle::random_relabel(rng, g);
    REQUIRE(canonical_form(g) == canonical_form(h));
    REQUIRE(isomorphic(g, h));
    REQUIRE(isomorphic(canonical_form(g).to_graph(), g));
  }
}

TEST_CASE("canonical_form separates classes exactly like the brute-force form (n <= 6)") {
  // Every labelled graph on up to 6 vertices: the two forms must induce the same partition.
  for (int n = 0; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<CanonicalForm, CanonicalForm> fast_to_slow, slow_to_fast;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); mask += (n == 6 ? 7 : 1)) {
      std::vector<Edge> e;
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if (mask >> bit & 1) e.emplace_back(i, j);
      const Graph g = Graph::from_edge_list(n, e);
      const auto fast = canonical_form(g), slow = canonical_form_bruteforce(g);
      const auto [f, fnew] = fast_to_slow.emplace(fast, slow);
      REQUIRE(f->second == slow);
      const auto [s, snew] = slow_to_fast.emplace(slow, fast);
      REQUIRE(s->second == fast);
    }
  }
}

TEST_CASE("regular graphs that colour refinement alone cannot split") {
  // C6 and two disjoint triangles are both 2-regular on 6 vertices.
  const Graph c6 = graphs::cycle(6);
  const Graph two_k3 = disjoint_union(graphs::complete(3), graphs::complete(3));
  CHECK_FALSE(isomorphic(c6, two_k3));
  CHECK(canonical_form(c6) != canonical_form(two_k3));
  // Petersen against a relabelled copy and against the 3-prism-like 3-regular graph on 10 vertices.
  const Graph petersen = Graph::from_edge_list(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  const Graph prism5 = Graph::from_edge_list(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
  CHECK_FALSE(isomorphic(petersen, prism5));
  std::mt19937_64 rng(1);
  CHECK(isomorphic(petersen, oracle::random_relabel(rng, petersen)));
}

TEST_CASE("canonical_form_bruteforce refuses large graphs") {
  CHECK_THROWS_AS(canonical_form_bruteforce(Graph(10)), std::invalid_argument);
}
