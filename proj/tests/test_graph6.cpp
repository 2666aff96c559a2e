#include <catch_amalgamated.hpp>

#include <random>

#include "ciso/graph6.hpp"
#include "oracles.hpp"

using namespace ciso;

// Reference strings produced by networkx 3.4.2 (to_graph6_bytes, header=False).
TEST_CASE("graph6 matches the reference encoder") {
  CHECK(encode_graph6(graphs::complete(4)) == "C~");
  CHECK(encode_graph6(graphs::cycle(4)) == "Cl");
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(graphs::diamond()) == "Cn");
  CHECK(encode_graph6(graphs::cycle_plus(4)) == "Dl_");
  CHECK(encode_graph6(graphs::cycle(5)) == "Dhc");
  CHECK(encode_graph6(graphs::path(3)) == "Bg");
  CHECK(encode_graph6(graphs::complete(3)) == "Bw");
  CHECK(encode_graph6(graphs::complete(12)) == "K~~~~~~~~~~~");
  CHECK(encode_graph6(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}})) == "C{");
  CHECK(encode_graph6(graphs::cycle(6)) == "EhEG");
  CHECK(encode_graph6(graphs::path(7)) == "FhCGG");
  CHECK(encode_graph6(Graph::from_edge_list(12, {{0, 11}, {3, 7}, {5, 6}, {10, 11}, {1, 9}})) == "K???G_?O??O@");
  const Graph petersen = Graph::from_edge_list(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  CHECK(encode_graph6(petersen) == "IheA@GUAo");
}

TEST_CASE("C~ decodes to K4 and C4's byte is 108") {
  CHECK(parse_graph6("C~") == graphs::complete(4));
  // x(0,1) x(0,2) x(1,2) x(0,3) x(1,3) x(2,3) = 1 0 1 1 0 1 -> 45.
  CHECK(static_cast<int>(encode_graph6(graphs::cycle(4))[1]) == 45 + 63);
}

TEST_CASE("graph6 round trip is exhaustive for n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::vector<Edge> e;
      int bit = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
          if (mask >> bit & 1) e.emplace_back(i, j);
      const Graph g = Graph::from_edge_list(n, e);
      REQUIRE(parse_graph6(encode_graph6(g)) == g);
    }
  }
}

TEST_CASE("graph6 round trip on random graphs up to n = 62") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 2000; ++it) {
    const int n = static_cast<int>(rng() % 63);
    const Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<>(0, 1)(rng));
    const std::string s = encode_graph6(g);
    REQUIRE(s.size() == 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
    REQUIRE(parse_graph6(s) == g);
    REQUIRE(encode_graph6(parse_graph6(s)) == s);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);     // too short
  CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);   // too long
  CHECK_THROWS_AS(parse_graph6("C~ "), Graph6Error);   // byte below 63
  CHECK_THROWS_AS(parse_graph6("~??"), Graph6Error);   // multi-byte header
  CHECK_THROWS_AS(parse_graph6("Bx"), Graph6Error);    // padding bits set
  try {
    (void)parse_graph6("Cl!");
    FAIL("expected an error");
  } catch (const Graph6Error& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(encode_graph6(Graph(63)), std::invalid_argument);
}
