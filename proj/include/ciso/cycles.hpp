#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ciso/graph.hpp"

namespace ciso {

/// k distinct vertices, consecutive ones (cyclically) adjacent. Stored in
/// canonical form: smallest vertex first, and the smaller of its two cycle
/// neighbours second.
struct CycleWitness {
  std::vector<Vertex> vertices;

  VertexSet vertex_set() const { return VertexSet::from_range(vertices); }
  bool operator==(const CycleWitness&) const = default;
  auto operator<=>(const CycleWitness&) const = default;
};

enum class CycleSearch {
  automatic,     ///< common-neighbour test for k = 4, backtracking otherwise
  backtracking,  ///< always the generic search
};

namespace detail {

inline void check_cycle_length(int k) {
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3, got " + std::to_string(k));
}

inline CycleWitness canonical_cycle(std::vector<Vertex> c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return {std::move(c)};
}

/// Calls `emit` for every k-cycle of G[alive] (each once, in canonical
/// orientation) until it returns false.
template <class Emit>
void for_each_cycle(const Graph& g, VertexSet alive, int k, Emit&& emit) {
  std::vector<Vertex> path(static_cast<std::size_t>(k));
  bool stop = false;
  for (Vertex s : alive) {
    // Vertices usable after the start: larger ids only, so s is the minimum.
    const VertexSet allowed = alive - VertexSet::range(s + 1);
    path[0] = s;
    std::function<void(int, VertexSet)> extend = [&](int depth, VertexSet used) {
      const Vertex last = path[depth - 1];
      VertexSet next = (g.neighbors(last) & allowed) - used;
      if (depth == k - 1) next &= g.neighbors(s);
      for (Vertex w : next) {
        if (stop) return;
        path[depth] = w;
        if (depth == k - 1) {
          if (path[1] < w && !emit(path)) stop = true;
        } else {
          extend(depth + 1, used | VertexSet::single(w));
        }
      }
    };
    extend(1, VertexSet::single(s));
    if (stop) return;
  }
}

inline std::optional<CycleWitness> find_four_cycle(const Graph& g, VertexSet alive) {
  for (Vertex u : alive) {
    for (Vertex v : alive - VertexSet::range(u + 1)) {
      const VertexSet common = g.neighbors(u) & g.neighbors(v) & alive;
      if (common.size() >= 2) {
        const Vertex a = common.min();
        const Vertex b = (common - VertexSet::single(a)).min();
        return canonical_cycle({u, a, v, b});
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A k-cycle subgraph (not necessarily induced) of G[alive], if any.
inline std::optional<CycleWitness> find_cycle_within(const Graph& g, VertexSet alive, int k,
                                                     CycleSearch how = CycleSearch::automatic) {
  detail::check_cycle_length(k);
  if (k == 4 && how == CycleSearch::automatic) return detail::find_four_cycle(g, alive);
  std::optional<CycleWitness> found;
  detail::for_each_cycle(g, alive, k, [&](const std::vector<Vertex>& c) {
    found = CycleWitness{c};
    return false;
  });
  return found;
}

inline std::optional<CycleWitness> contains_cycle(const Graph& g, int k, CycleSearch how = CycleSearch::automatic) {
  return find_cycle_within(g, g.vertices(), k, how);
}

inline bool has_cycle(const Graph& g, int k) { return contains_cycle(g, k).has_value(); }

/// Every k-cycle subgraph exactly once, canonical form, sorted.
inline std::vector<CycleWitness> all_cycles(const Graph& g, int k) {
  detail::check_cycle_length(k);
  std::vector<CycleWitness> out;
  detail::for_each_cycle(g, g.vertices(), k, [&](const std::vector<Vertex>& c) {
    out.push_back(CycleWitness{c});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff `w` really is a k-cycle of G.
inline bool is_cycle_witness(const Graph& g, const CycleWitness& w, int k) {
  if (static_cast<int>(w.vertices.size()) != k) return false;
  if (w.vertex_set().size() != k) return false;
  for (int i = 0; i < k; ++i) {
    const Vertex a = w.vertices[i], b = w.vertices[(i + 1) % k];
    if (a < 0 || b < 0 || a >= g.num_vertices() || b >= g.num_vertices() || !g.adjacent(a, b)) return false;
  }
  return true;
}

}  // namespace ciso
