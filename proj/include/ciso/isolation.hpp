#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ciso/cycles.hpp"
#include "ciso/graph.hpp"

namespace ciso {

/// Outcome of checking a candidate C_k-isolating set.
struct IsolationCertificate {
  int k = 0;
  VertexSet set;
  bool valid = false;
  ComponentSplit residual;  ///< components of G - N[set]
};

struct ExactResult {
  int iota = 0;
  VertexSet witness;
  std::uint64_t explored = 0;
};

/// Thrown by iota_exact when the node budget runs out.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(int lower, int upper, std::uint64_t explored)
      : std::runtime_error("node budget exhausted after " + std::to_string(explored) + " nodes; iota in [" +
                           std::to_string(lower) + ", " + std::to_string(upper) + "]"),
        lower_(lower),
        upper_(upper),
        explored_(explored) {}
  int lower() const { return lower_; }
  int upper() const { return upper_; }
  std::uint64_t explored() const { return explored_; }

 private:
  int lower_;
  int upper_;
  std::uint64_t explored_;
};

/// Graphs above this order need an explicit node budget.
inline constexpr int kUnbudgetedOrderLimit = 20;

inline bool is_isolating(const Graph& g, VertexSet d, int k) {
  return !find_cycle_within(g, g.vertices() - closed_neighborhood(g, d), k).has_value();
}

inline IsolationCertificate verify(const Graph& g, VertexSet d, int k) {
  detail::check_cycle_length(k);
  if (!d.is_subset_of(g.vertices())) throw std::invalid_argument("isolating set has ids outside the graph");
  IsolationCertificate cert;
  cert.k = k;
  cert.set = d;
  const Subgraph rest = delete_closed_neighborhood(g, d);
  cert.residual = connected_components(rest.graph);
  // Re-embed residual parts into G's ids.
  for (auto& part : cert.residual)
    for (auto& v : part.embedding) v = rest.embedding[v];
  cert.valid = true;
  for (const auto& part : cert.residual)
    if (contains_cycle(part.graph, k)) cert.valid = false;
  return cert;
}

namespace detail {

class ExactSearch {
 public:
  ExactSearch(const Graph& g, int k, std::optional<std::uint64_t> budget) : g_(g), k_(k), budget_(budget) {}

  /// Minimum isolating set of the connected graph g restricted to `part`.
  /// `lower_so_far` / `upper_rest` feed the bounds reported on exhaustion.
  VertexSet solve_part(VertexSet part, int lower_so_far, int upper_rest) {
    part_ = part;
    if (!find_cycle_within(g_, part, k_)) return {};
    for (int size = 1; size <= part.size(); ++size) {
      best_.reset();
      seen_.clear();
      lower_ = lower_so_far + size;
      upper_ = upper_rest;
      descend(VertexSet{}, size);
      if (best_) return *best_;
    }
    throw std::logic_error("exact search found no isolating set");
  }

  std::uint64_t explored() const { return explored_; }

  /// Greedy (not minimum) isolating set of G[part], used for budget-exhaustion bounds.
  VertexSet greedy(VertexSet part) const {
    VertexSet d;
    while (auto c = find_cycle_within(g_, part - closed_neighborhood(g_, d), k_)) {
      const VertexSet cands = closed_neighborhood(g_, c->vertex_set()) & part;
      Vertex pick = cands.min();
      int cover = -1;
      for (Vertex v : cands) {
        const int gain = (closed_neighborhood(g_, VertexSet::single(v)) - closed_neighborhood(g_, d)).size();
        if (gain > cover) {
          cover = gain;
          pick = v;
        }
      }
      d.insert(pick);
    }
    return d;
  }

 private:
  void descend(VertexSet chosen, int remaining) {
    if (budget_ && explored_ >= *budget_) throw BudgetExhausted(lower_, upper_, explored_);
    ++explored_;
    const auto cycle = find_cycle_within(g_, part_ - closed_neighborhood(g_, chosen), k_);
    if (!cycle) {
      // Smaller levels all failed, so every set found here has the same size.
      if (!best_ || lex_less(chosen, *best_)) best_ = chosen;
      return;
    }
    if (remaining == 0) return;
    // Every isolating set meets N[V(C)] for each surviving cycle C.
    const VertexSet cands = (closed_neighborhood(g_, cycle->vertex_set()) & part_) - chosen;
    for (Vertex v : cands) {
      const VertexSet next = chosen | VertexSet::single(v);
      if (!seen_.insert(next.bits()).second) continue;
      descend(next, remaining - 1);
    }
  }

  const Graph& g_;
  int k_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t explored_ = 0;
  VertexSet part_;
  int lower_ = 0;
  int upper_ = 0;
  std::optional<VertexSet> best_;
  std::unordered_set<std::uint64_t> seen_;
};

}  // namespace detail

/// ι(G, C_k) with a lexicographically least minimum witness.
///
/// Components are solved independently and summed. Within a component the
/// search runs iterative deepening on the set size, branching on the closed
/// neighbourhood of one surviving k-cycle. Graphs with more than 20
/// vertices require an explicit node budget.
inline ExactResult iota_exact(const Graph& g, int k, std::optional<std::uint64_t> node_budget = std::nullopt) {
  detail::check_cycle_length(k);
  if (!node_budget && g.num_vertices() > kUnbudgetedOrderLimit)
    throw std::invalid_argument("iota_exact: graphs with more than " + std::to_string(kUnbudgetedOrderLimit) +
                                " vertices need an explicit node budget");
  detail::ExactSearch search(g, k, node_budget);
  const auto parts = component_sets(g, g.vertices());
  std::vector<int> greedy_sizes;
  for (VertexSet p : parts) greedy_sizes.push_back(search.greedy(p).size());

  ExactResult result;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int upper_rest = result.iota;
    for (std::size_t j = i; j < parts.size(); ++j) upper_rest += greedy_sizes[j];
    const VertexSet d = search.solve_part(parts[i], result.iota, upper_rest);
    result.iota += d.size();
    result.witness |= d;
  }
  result.explored = search.explored();
  return result;
}

/// True iff D isolates G[S] and every component of G[S] - N[D] sends at most
/// one edge out of S. Requires D ⊆ S.
inline bool check_lemma21_hypothesis(const Graph& g, VertexSet s, VertexSet d, int k) {
  detail::check_cycle_length(k);
  if (!d.is_subset_of(s)) throw std::invalid_argument("check_lemma21_hypothesis: D is not a subset of S");
  if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("check_lemma21_hypothesis: S has ids outside G");
  // Closed neighbourhood taken inside G[S].
  VertexSet covered = d;
  for (Vertex v : d) covered |= g.neighbors(v) & s;
  const VertexSet residual = s - covered;
  if (find_cycle_within(g, residual, k)) return false;
  const VertexSet outside = g.vertices() - s;
  for (VertexSet comp : component_sets(g, residual))
    if (boundary_edge_count(g, comp, outside) > 1) return false;
  return true;
}

/// Certificate for D ∪ D_rest on G, where D satisfies the hypothesis for S and
/// D_rest isolates G - S (given in G's ids).
inline IsolationCertificate compose_lemma21(const Graph& g, VertexSet s, VertexSet d, VertexSet d_rest, int k) {
  if (!check_lemma21_hypothesis(g, s, d, k))
    throw std::invalid_argument("compose_lemma21: hypothesis fails for the given S and D");
  if (d_rest.intersects(s)) throw std::invalid_argument("compose_lemma21: D_rest must lie outside S");
  const Subgraph rest = induced_subgraph(g, g.vertices() - s);
  VertexSet local;
  for (std::size_t i = 0; i < rest.embedding.size(); ++i)
    if (d_rest.contains(rest.embedding[i])) local.insert(static_cast<Vertex>(i));
  if (!is_isolating(rest.graph, local, k))
    throw std::invalid_argument("compose_lemma21: D_rest does not isolate G - S");
  auto cert = verify(g, d | d_rest, k);
  if (!cert.valid) throw std::logic_error("compose_lemma21: composed set failed verification");
  return cert;
}

}  // namespace ciso
