#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ciso/graph.hpp"

namespace ciso {

/// A tree on vertices 0..n-1 (connected, n-1 edges).
class Tree {
 public:
  static Tree from_edges(int n, std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("a tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
      throw std::invalid_argument("a tree on " + std::to_string(n) + " vertices has " + std::to_string(n - 1) +
                                  " edges, got " + std::to_string(edges.size()));
    Tree t;
    t.graph_ = Graph::from_edge_list(n, edges);
    if (t.graph_.num_edges() != n - 1 || !is_connected(t.graph_))
      throw std::invalid_argument("edge list is not a tree");
    return t;
  }
  static Tree from_graph(const Graph& g) { return from_edges(g.num_vertices(), g.edges()); }

  int num_vertices() const { return graph_.num_vertices(); }
  std::vector<Edge> edges() const { return graph_.edges(); }
  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
};

namespace trees {

inline Tree path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Tree::from_edges(n, e);
}
/// K_{1,n-1} centred at 0.
inline Tree star(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Tree::from_edges(n, e);
}
/// K_{1,3} with a pendant edge added at one leaf.
inline Tree star_plus() { return Tree::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}); }

}  // namespace trees

namespace detail {

inline std::string rooted_code(const Graph& g, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex u : g.neighbors(v))
    if (u != parent) kids.push_back(rooted_code(g, u, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  return out + ")";
}

inline std::vector<Vertex> tree_centers(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> deg = g.degree_sequence();
  VertexSet alive = g.vertices();
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int left = n;
  while (left > 2) {
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      alive.erase(v);
      --left;
      for (Vertex u : g.neighbors(v) & alive)
        if (--deg[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  return alive.to_vector();
}

}  // namespace detail

/// Centre-rooted canonical encoding; equal codes mean isomorphic trees.
inline std::string canonical_code(const Tree& t) {
  std::string best;
  for (Vertex c : detail::tree_centers(t.graph())) {
    auto code = detail::rooted_code(t.graph(), c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

inline bool isomorphic(const Tree& a, const Tree& b) {
  return a.num_vertices() == b.num_vertices() && canonical_code(a) == canonical_code(b);
}

inline constexpr int kMaxTreeOrder = 12;

/// One tree per isomorphism class on n vertices, ordered by canonical code.
inline std::vector<Tree> enumerate_trees(int n) {
  if (n < 1 || n > kMaxTreeOrder)
    throw std::invalid_argument("enumerate_trees: n must be in 1.." + std::to_string(kMaxTreeOrder));
  std::map<std::string, Tree> level;
  {
    auto t = Tree::from_edges(1, {});
    level.emplace(canonical_code(t), t);
  }
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Tree> next;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < size - 1; ++v) {
        auto e = t.edges();
        e.emplace_back(v, size - 1);
        auto grown = Tree::from_edges(size, e);
        next.try_emplace(canonical_code(grown), grown);
      }
    }
    level = std::move(next);
  }
  std::vector<Tree> out;
  for (auto& [code, t] : level) out.push_back(t);
  return out;
}

}  // namespace ciso
