#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ciso/vertex_set.hpp"

namespace ciso {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Values are immutable once built; every factory validates symmetry,
/// irreflexivity and id range.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n)) {}

  static Graph from_edge_list(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has an id outside 0.." + std::to_string(n - 1));
      if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
    }
    return g;
  }
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  static Graph from_adjacency(std::vector<VertexSet> rows) {
    Graph g(static_cast<int>(rows.size()));
    const VertexSet all = VertexSet::range(g.n_);
    for (Vertex v = 0; v < g.n_; ++v) {
      if (!rows[v].is_subset_of(all)) throw std::invalid_argument("neighbor id out of range");
      if (rows[v].contains(v)) throw std::invalid_argument("loop edge at vertex " + std::to_string(v));
      for (Vertex u : rows[v])
        if (!rows[u].contains(v)) throw std::invalid_argument("adjacency is not symmetric");
    }
    g.adj_ = std::move(rows);
    return g;
  }

  int num_vertices() const { return n_; }
  int num_edges() const {
    int twice = 0;
    for (auto row : adj_) twice += row.size();
    return twice / 2;
  }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int degree(Vertex v) const { return adj_[v].size(); }

  int max_degree() const {
    int d = 0;
    for (auto row : adj_) d = std::max(d, row.size());
    return d;
  }
  int min_degree() const {
    if (n_ == 0) return 0;
    int d = kMaxVertices;
    for (auto row : adj_) d = std::min(d, row.size());
    return d;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d;
    d.reserve(adj_.size());
    for (auto row : adj_) d.push_back(row.size());
    return d;
  }

  /// Edges (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                  std::to_string(kMaxVertices));
    return n;
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// An induced subgraph together with the (ascending) map from its ids to the parent's ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> embedding;

  VertexSet to_parent(VertexSet local) const {
    VertexSet out;
    for (Vertex v : local) out.insert(embedding[v]);
    return out;
  }
  VertexSet parent_vertices() const { return VertexSet::from_range(embedding); }
};

using ComponentSplit = std::vector<Subgraph>;

inline VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

/// N(S) = N[S] \ S.
inline VertexSet open_neighborhood(const Graph& g, VertexSet s) { return closed_neighborhood(g, s) - s; }

inline Subgraph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<Vertex> emb = keep.to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < emb.size(); ++i) local[emb[i]] = static_cast<int>(i);
  std::vector<VertexSet> rows(emb.size());
  for (std::size_t i = 0; i < emb.size(); ++i)
    for (Vertex u : g.neighbors(emb[i]) & keep) rows[i].insert(local[u]);
  return {Graph::from_adjacency(std::move(rows)), std::move(emb)};
}

/// G - N[D] with its embedding into G.
inline Subgraph delete_closed_neighborhood(const Graph& g, VertexSet d) {
  return induced_subgraph(g, g.vertices() - closed_neighborhood(g, d));
}

/// Vertex sets of the components of G[alive], ordered by smallest member.
inline std::vector<VertexSet> component_sets(const Graph& g, VertexSet alive) {
  std::vector<VertexSet> parts;
  VertexSet rest = alive;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = (next & alive) - comp;
      comp |= next;
      frontier = next;
    }
    parts.push_back(comp);
    rest -= comp;
  }
  return parts;
}

inline ComponentSplit connected_components(const Graph& g) {
  ComponentSplit out;
  for (VertexSet part : component_sets(g, g.vertices())) out.push_back(induced_subgraph(g, part));
  return out;
}

inline bool is_connected(const Graph& g) { return component_sets(g, g.vertices()).size() <= 1; }

/// e(A, B): edges with one end in A and the other in B. A and B must be disjoint.
inline int boundary_edge_count(const Graph& g, VertexSet a, VertexSet b) {
  if (a.intersects(b)) throw std::invalid_argument("boundary_edge_count: vertex sets overlap");
  int count = 0;
  for (Vertex v : a) count += (g.neighbors(v) & b).size();
  return count;
}

/// Number of edges of G[S].
inline int induced_edge_count(const Graph& g, VertexSet s) {
  int twice = 0;
  for (Vertex v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

/// Disjoint union; the vertices of `b` are shifted past those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.num_vertices();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edge_list(a.num_vertices() + b.num_vertices(), edges);
}

/// Relabels so that new vertex i is old vertex order[i].
inline Graph permuted(const Graph& g, std::span<const Vertex> order) {
  const int n = g.num_vertices();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (Vertex u : g.neighbors(order[i])) rows[i].insert(pos[u]);
  return Graph::from_adjacency(std::move(rows));
}

namespace graphs {

inline Graph cycle(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::from_edge_list(k, e);
}
inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}
inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e);
}
/// K4 minus the edge {0,2}: vertices 1 and 3 have degree 3.
inline Graph diamond() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}}); }
/// C_k with a pendant vertex k attached to cycle vertex 0.
inline Graph cycle_plus(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  e.emplace_back(0, k);
  return Graph::from_edge_list(k + 1, e);
}

}  // namespace graphs

/// Reads the edge-list text format: a header line "n <count>" followed by
/// one "u v" pair per line. Blank lines and lines starting with '#' are ignored.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& msg) -> std::invalid_argument {
    return std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "n" || n < 0) throw fail("expected header 'n <count>'");
      if (n > kMaxVertices) throw fail("vertex count exceeds " + std::to_string(kMaxVertices));
      continue;
    }
    Vertex u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw fail("expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex id out of range");
    if (u == v) throw fail("loop edge");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::invalid_argument("edge list: missing header 'n <count>'");
  return Graph::from_edge_list(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace ciso
