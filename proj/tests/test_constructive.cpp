#include <catch_amalgamated.hpp>

#include <random>
#include <regex>
#include <set>

#include "ciso/constructive.hpp"
#include "ciso/survey.hpp"
#include "oracles.hpp"

using namespace ciso;

namespace {

bool extremal_c4(const Graph& g) { return (g.num_vertices() == 4 && g.num_edges() == 5) || recognize(g, 4).has_value(); }

// Every label a trace may carry: a base case, Case 1/2, or one of the named subcases.
const std::regex kLabel(
    R"(Base:(no-C4|m<=5:diamond|m<=5:C4\+)|Case 1:K4|Case 2:(e=0|Hs empty|Hs empty:star))"
    R"(|Subcase 1\.1(\((i|ii)\)(:.*)?)?|Subcase 1\.2\.[1-4](\((i|ii)\))?(:.*)?|Subcase 2\.[12](\((i|ii)\))?(:.*)?)");

void check_result(const Graph& g) {
  const auto r = construct(g);
  INFO("graph6 " << encode_graph6(g));
  REQUIRE(verify(g, r.set, 4).valid);
  for (const auto& comp : connected_components(g)) {
    const int share = (r.set & comp.parent_vertices()).size();
    REQUIRE(6 * share <= comp.graph.num_edges() + 1);
  }
  REQUIRE_FALSE(r.trace.has_fallback());
  REQUIRE(r.trace.combined_increments() == r.set);
  for (const auto& s : r.trace.steps) REQUIRE(std::regex_match(s.label, kLabel));
}

}  // namespace

TEST_CASE("construct examples") {
  SECTION("C4-free graphs give the empty set") {
    for (const Graph& g : {graphs::cycle(5), graphs::path(6), graphs::complete(3), Graph(1)}) {
      const auto r = construct(g);
      CHECK(r.set.empty());
      REQUIRE(r.trace.steps.size() == 1);
      CHECK(r.trace.steps[0].label == "Base:no-C4");
    }
  }
  SECTION("diamond") {
    const auto r = construct(graphs::diamond());
    CHECK(r.set.size() == 1);
    CHECK(r.trace.steps.at(0).label == "Base:m<=5:diamond");
  }
  SECTION("C4+") {
    const auto r = construct(graphs::cycle_plus(4));
    CHECK(r.set == VertexSet{4});
    CHECK(r.trace.steps.at(0).label == "Base:m<=5:C4+");
  }
  SECTION("K4") {
    const auto r = construct(graphs::complete(4));
    CHECK(r.set.size() == 1);
    CHECK(r.trace.steps.at(0).label == "Case 1:K4");
  }
  SECTION("cons(K_{1,3}^+, C4)") {
    const Graph g = cons(trees::star_plus(), 4).graph;
    const auto r = construct(g);
    CHECK(r.set.size() == 5);
    CHECK(verify(g, r.set, 4).valid);
  }
  SECTION("C4 components are rejected") {
    CHECK_THROWS_AS(construct(graphs::cycle(4)), ExcludedGraph);
    CHECK_THROWS_WITH(construct(disjoint_union(graphs::diamond(), graphs::cycle(4))), "excluded graph C4");
  }
}

TEST_CASE("bound_value") {
  CHECK(bound_value(5) == Rational(1));
  CHECK(bound_value(29) == Rational(5));
  CHECK(bound_value(6) == Rational(7, 6));
  CHECK(to_string(bound_value(6)) == "7/6");
  CHECK_THROWS_AS(bound_value(-1), std::invalid_argument);
}

TEST_CASE("classify_component") {
  CHECK(classify_component(graphs::cycle(4)).tag == ComponentTag::c4);
  CHECK(classify_component(graphs::diamond()).tag == ComponentTag::diamond);
  const auto c = classify_component(graphs::cycle_plus(4));
  CHECK(c.tag == ComponentTag::extremal);
  CHECK(c.decomposition.has_value());
  CHECK(classify_component(graphs::complete(4)).tag == ComponentTag::other);
  CHECK_THROWS_AS(classify_component(Graph(2)), std::invalid_argument);
}

TEST_CASE("construct is sound on every connected graph with n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      if (is_c4(g)) continue;
      check_result(g);
      // The bound is tight for exactly the extremal graphs.
      const auto r = construct(g);
      REQUIRE((6 * r.set.size() == g.num_edges() + 1) == extremal_c4(g));
    }
  }
}

TEST_CASE("construct dominates the exact value") {
  std::mt19937_64 rng(31);
  for (int n = 4; n <= 8; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      if (is_c4(g) || rng() % 8 != 0) continue;
      CHECK(construct(g).set.size() >= iota_exact(g, 4).iota);
    }
}

TEST_CASE("construct on glued gadgets reaches the deeper subcases") {
  std::mt19937_64 rng(77);
  std::set<std::string> labels;
  for (int it = 0; it < 6000; ++it) {
    const Graph g = oracle::random_gadget_graph(rng);
    for (const auto& comp : connected_components(g)) {
      if (is_c4(comp.graph)) continue;
      check_result(comp.graph);
      const auto r = construct(comp.graph);
      REQUIRE((6 * r.set.size() == comp.graph.num_edges() + 1) == extremal_c4(comp.graph));
      for (const auto& s : r.trace.steps) labels.insert(s.label.substr(0, s.label.find('(')));
    }
  }
  for (const char* expected : {"Subcase 1.1", "Subcase 1.2.1", "Subcase 1.2.2", "Subcase 1.2.3", "Subcase 1.2.4",
                               "Subcase 2.1", "Subcase 2.2", "Case 1:K4", "Case 2:e=0"})
    CHECK(labels.count(expected) == 1);
}

TEST_CASE("construct on random larger graphs") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 3000; ++it) {
    const int n = 9 + static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(rng, n, 0.05 + (rng() % 100) / 500.0);
    bool has_c4_component = false;
    for (const auto& c : connected_components(g)) has_c4_component |= is_c4(c.graph);
    if (has_c4_component) {
      CHECK_THROWS_AS(construct(g), ExcludedGraph);
      continue;
    }
    check_result(g);
  }
}

TEST_CASE("members of G4 get exactly their connection vertices' count") {
  for (int t = 1; t <= 8; ++t)
    for (const auto& tree : enumerate_trees(t)) {
      const auto built = cons(tree, 4);
      const auto r = construct(built.graph);
      CHECK(static_cast<int>(r.set.size()) == t);
      CHECK_FALSE(r.trace.has_fallback());
    }
}

TEST_CASE("trace increments map to input ids") {
  // A diamond hanging off a C4+ through its connection vertex, relabelled.
  const Graph g = Graph::from_edge_list(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 5}, {6, 8}});
  std::mt19937_64 rng(2);
  for (int it = 0; it < 20; ++it) check_result(oracle::random_relabel(rng, g));
}
