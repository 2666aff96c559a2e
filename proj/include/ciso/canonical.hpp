#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ciso/graph.hpp"

namespace ciso {

/// Adjacency rows of a relabelled copy of a graph; equal forms mean
/// isomorphic graphs.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> rows;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;

  Graph to_graph() const {
    std::vector<VertexSet> adj;
    adj.reserve(rows.size());
    for (auto r : rows) adj.push_back(VertexSet::from_bits(r));
    return Graph::from_adjacency(std::move(adj));
  }
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.n);
    for (auto r : f.rows) h = (h ^ r) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

inline CanonicalForm form_for_order(const Graph& g, const std::vector<Vertex>& order, std::vector<int>& pos) {
  const int n = g.num_vertices();
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  CanonicalForm f{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) {
    std::uint64_t row = 0;
    for (Vertex u : g.neighbors(order[i])) row |= std::uint64_t{1} << pos[u];
    f.rows[i] = row;
  }
  return f;
}

/// Colour refinement: repeatedly split classes by the multiset of neighbour
/// colours. Colours are dense ranks and depend only on the isomorphism type.
inline std::vector<int> refine(const Graph& g, std::vector<int> colour) {
  const int n = g.num_vertices();
  int classes = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  std::vector<int> idx(static_cast<std::size_t>(n));
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.assign(static_cast<std::size_t>(classes + 1), 0);
      s[0] = colour[v];
      for (Vertex u : g.neighbors(v)) ++s[1 + colour[u]];
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> next(static_cast<std::size_t>(n));
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++c;
      next[idx[i]] = c;
    }
    const int next_classes = n == 0 ? 0 : c + 1;
    colour = std::move(next);
    if (next_classes == classes) return colour;
    classes = next_classes;
  }
}

inline void search_leaves(const Graph& g, const std::vector<int>& colour, CanonicalForm& best, bool& have,
                          std::vector<int>& pos) {
  const int n = g.num_vertices();
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (int c : colour) ++count[c];
  // First (lowest-colour) non-singleton cell.
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (count[c] > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[colour[v]] = v;
    auto f = form_for_order(g, order, pos);
    if (!have || f < best) {
      best = std::move(f);
      have = true;
    }
    return;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] != target) continue;
    // Individualise v: it sorts before the rest of its cell.
    std::vector<int> split(colour.size());
    for (Vertex u = 0; u < n; ++u) split[u] = 2 * colour[u] + ((colour[u] == target && u != v) ? 1 : 0);
    search_leaves(g, refine(g, split), best, have, pos);
  }
}

}  // namespace detail

/// Canonical form via colour refinement plus individualisation; the result
/// is the least adjacency encoding over the leaves of the search tree.
inline CanonicalForm canonical_form(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  // Dense ranks of degrees.
  std::vector<int> sorted = deg;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& d : deg) d = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), d) - sorted.begin());
  CanonicalForm best;
  bool have = false;
  std::vector<int> pos(static_cast<std::size_t>(n));
  detail::search_leaves(g, detail::refine(g, deg), best, have, pos);
  if (!have) best.n = n;
  return best;
}

/// Least encoding over all n! relabellings. Only for tiny graphs (n <= 9).
inline CanonicalForm canonical_form_bruteforce(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 9) throw std::invalid_argument("canonical_form_bruteforce: n too large");
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(static_cast<std::size_t>(n));
  CanonicalForm best = detail::form_for_order(g, order, pos);
  while (std::next_permutation(order.begin(), order.end())) {
    auto f = detail::form_for_order(g, order, pos);
    if (f < best) best = std::move(f);
  }
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto da = a.degree_sequence(), db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace ciso
