#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ciso/cycles.hpp"
#include "ciso/graph.hpp"
#include "ciso/isolation.hpp"
#include "ciso/trees.hpp"

namespace ciso {

/// One C_k^+ piece of cons(T, C_k): a connection vertex, the cycle vertex it
/// is joined to, and the cycle listed from that attachment vertex.
struct Constituent {
  Vertex connection = 0;
  Vertex attachment = 0;
  std::vector<Vertex> cycle;

  bool operator==(const Constituent&) const = default;
};

/// Witness that G = cons(T, C_k).
struct ConsDecomposition {
  int k = 0;
  VertexSet connection_vertices;
  std::vector<Constituent> constituents;  ///< ordered by connection vertex
  std::vector<Edge> tree_edges;

  /// The constituent holding v (v may be its connection vertex or a cycle vertex).
  const Constituent& constituent_of(Vertex v) const {
    for (const auto& c : constituents)
      if (c.connection == v || std::find(c.cycle.begin(), c.cycle.end(), v) != c.cycle.end()) return c;
    throw std::out_of_range("vertex " + std::to_string(v) + " is not in the decomposition");
  }
  Vertex connection_of(Vertex v) const { return constituent_of(v).connection; }

  /// Vertices of the decomposed graph.
  VertexSet vertices() const {
    VertexSet s = connection_vertices;
    for (const auto& c : constituents) s |= VertexSet::from_range(c.cycle);
    return s;
  }

  /// T, relabelled so tree vertex i is the i-th smallest connection vertex.
  Tree tree() const {
    const auto ids = connection_vertices.to_vector();
    std::vector<Edge> e;
    for (auto [a, b] : tree_edges) {
      const auto ia = std::lower_bound(ids.begin(), ids.end(), a) - ids.begin();
      const auto ib = std::lower_bound(ids.begin(), ids.end(), b) - ids.begin();
      e.emplace_back(static_cast<Vertex>(ia), static_cast<Vertex>(ib));
    }
    return Tree::from_edges(static_cast<int>(ids.size()), e);
  }

  /// Same decomposition with every id v replaced by map[v].
  ConsDecomposition remapped(std::span<const Vertex> map) const {
    ConsDecomposition out;
    out.k = k;
    for (Vertex v : connection_vertices) out.connection_vertices.insert(map[v]);
    for (const auto& c : constituents) {
      Constituent r{map[c.connection], map[c.attachment], {}};
      for (Vertex v : c.cycle) r.cycle.push_back(map[v]);
      out.constituents.push_back(std::move(r));
    }
    for (auto [a, b] : tree_edges) out.tree_edges.emplace_back(std::min(map[a], map[b]), std::max(map[a], map[b]));
    std::sort(out.constituents.begin(), out.constituents.end(),
              [](const Constituent& x, const Constituent& y) { return x.connection < y.connection; });
    std::sort(out.tree_edges.begin(), out.tree_edges.end());
    return out;
  }
};

struct ConsGraph {
  Graph graph;
  ConsDecomposition decomposition;
};

/// cons(T, C_k). Tree vertices keep ids 0..t-1; the cycle of tree vertex i
/// occupies t+i*k .. t+i*k+k-1 and is attached at its first vertex.
inline ConsGraph cons(const Tree& t, int k) {
  detail::check_cycle_length(k);
  const int tn = t.num_vertices();
  if (tn < 1) throw std::invalid_argument("cons: empty tree");
  const int n = tn * (k + 1);
  if (n > kMaxVertices) throw std::invalid_argument("cons: result would exceed 64 vertices");
  ConsGraph out;
  auto edges = t.edges();
  out.decomposition.k = k;
  out.decomposition.tree_edges = edges;
  for (Vertex i = 0; i < tn; ++i) {
    const Vertex base = tn + i * k;
    Constituent c{i, base, {}};
    for (int j = 0; j < k; ++j) {
      c.cycle.push_back(base + j);
      edges.emplace_back(base + j, base + (j + 1) % k);
    }
    edges.emplace_back(i, base);
    out.decomposition.connection_vertices.insert(i);
    out.decomposition.constituents.push_back(std::move(c));
  }
  out.graph = Graph::from_edge_list(n, edges);
  return out;
}

/// A decomposition iff G ∈ G_k = {cons(T, C_k) : T a tree}.
inline std::optional<ConsDecomposition> recognize(const Graph& g, int k) {
  detail::check_cycle_length(k);
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (n == 0 || n % (k + 1) != 0) return std::nullopt;
  const int t = n / (k + 1);
  if (m != (k + 2) * t - 1) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;

  // In cons(T, C_k) the constituent cycles are the only k-cycles, pairwise
  // disjoint, each with k-1 vertices of degree 2 and one of degree 3.
  const auto cycles = all_cycles(g, k);
  if (static_cast<int>(cycles.size()) != t) return std::nullopt;
  ConsDecomposition dec;
  dec.k = k;
  VertexSet on_cycles;
  for (const auto& c : cycles) {
    const VertexSet cv = c.vertex_set();
    if (cv.intersects(on_cycles)) return std::nullopt;
    on_cycles |= cv;
    std::optional<Vertex> attach;
    for (Vertex v : c.vertices) {
      const int d = g.degree(v);
      if (d == 3 && !attach) attach = v;
      else if (d != 2) return std::nullopt;
    }
    if (!attach) return std::nullopt;
    const VertexSet outside = g.neighbors(*attach) - cv;
    if (outside.size() != 1) return std::nullopt;
    // Cycle listed from the attachment, towards its smaller cycle neighbour.
    const auto at = std::find(c.vertices.begin(), c.vertices.end(), *attach) - c.vertices.begin();
    std::vector<Vertex> order;
    for (int j = 0; j < k; ++j) order.push_back(c.vertices[(at + j) % k]);
    if (order.back() < order[1]) std::reverse(order.begin() + 1, order.end());
    dec.constituents.push_back({outside.min(), *attach, std::move(order)});
  }
  const VertexSet connection = g.vertices() - on_cycles;
  for (const auto& c : dec.constituents) {
    if (!connection.contains(c.connection) || dec.connection_vertices.contains(c.connection)) return std::nullopt;
    dec.connection_vertices.insert(c.connection);
    // A connection vertex touches its own attachment and otherwise only tree vertices.
    if ((g.neighbors(c.connection) - connection) != VertexSet::single(c.attachment)) return std::nullopt;
  }
  if (dec.connection_vertices != connection) return std::nullopt;
  if (induced_edge_count(g, connection) != t - 1 || component_sets(g, connection).size() != 1) return std::nullopt;
  for (Vertex v : connection)
    for (Vertex u : g.neighbors(v) & connection)
      if (v < u) dec.tree_edges.emplace_back(v, u);
  std::sort(dec.constituents.begin(), dec.constituents.end(),
            [](const Constituent& a, const Constituent& b) { return a.connection < b.connection; });
  return dec;
}

/// V(T): one connection vertex per constituent isolates every constituent cycle.
inline VertexSet canonical_isolating_set(const ConsDecomposition& d) { return d.connection_vertices; }

/// True iff G ∈ G_k and ι(G, C_k) = (m+1)/(k+2).
inline bool verify_extremal_equality(const Graph& g, int k, std::optional<std::uint64_t> node_budget = std::nullopt) {
  if (!recognize(g, k)) return false;
  const auto exact = iota_exact(g, k, node_budget);
  return static_cast<long long>(exact.iota) * (k + 2) == static_cast<long long>(g.num_edges()) + 1;
}

}  // namespace ciso
