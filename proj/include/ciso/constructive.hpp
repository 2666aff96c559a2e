#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ciso/cycles.hpp"
#include "ciso/extremal.hpp"
#include "ciso/graph.hpp"
#include "ciso/isolation.hpp"
#include "ciso/rational.hpp"

namespace ciso {

// Constructive C4-isolating sets of size at most floor((m+1)/6) for connected
// graphs other than C4. The algorithm follows the induction on m case by
// case: each step either emits a set directly or fixes a local set D_S on a
// vertex set S (D_S isolates G[S], and each leftover component of
// G[S] - N[D_S] has at most one edge leaving S) and recurses on G - S.

enum class ComponentTag { c4, diamond, extremal, other };

inline const char* to_string(ComponentTag t) {
  switch (t) {
    case ComponentTag::c4: return "C4";
    case ComponentTag::diamond: return "diamond";
    case ComponentTag::extremal: return "G4";
    case ComponentTag::other: return "other";
  }
  return "?";
}

struct ComponentClass {
  ComponentTag tag = ComponentTag::other;
  std::optional<ConsDecomposition> decomposition;  ///< set iff tag == extremal
};

inline bool is_c4(const Graph& h) {
  return h.num_vertices() == 4 && h.num_edges() == 4 && h.max_degree() == 2 && h.min_degree() == 2;
}

inline ComponentClass classify_component(const Graph& h) {
  if (h.num_vertices() == 0 || !is_connected(h)) throw std::invalid_argument("classify_component: graph is not connected");
  if (is_c4(h)) return {ComponentTag::c4, std::nullopt};
  if (h.num_vertices() == 4 && h.num_edges() == 5) return {ComponentTag::diamond, std::nullopt};
  if (auto d = recognize(h, 4)) return {ComponentTag::extremal, std::move(d)};
  return {ComponentTag::other, std::nullopt};
}

/// (m+1)/6, exactly.
inline Rational bound_value(int m) {
  if (m < 0) throw std::invalid_argument("bound_value: negative edge count");
  return Rational(m + 1, 6);
}

struct TraceStep {
  std::string label;
  VertexSet working;    ///< structure the case acted on (input ids)
  VertexSet increment;  ///< vertices this step added to the output
  std::vector<VertexSet> recursed;
  int depth = 0;
};

struct CaseTrace {
  std::vector<TraceStep> steps;

  bool has_fallback() const {
    return std::any_of(steps.begin(), steps.end(), [](const TraceStep& s) { return s.label.starts_with("fallback"); });
  }
  VertexSet combined_increments() const {
    VertexSet s;
    for (const auto& st : steps) s |= st.increment;
    return s;
  }
};

struct ConstructResult {
  VertexSet set;
  CaseTrace trace;
};

/// Input has a component isomorphic to C4, which the bound excludes.
class ExcludedGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct DispatchFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A component of some G - X, classified, in the ids of G.
struct Part {
  VertexSet verts;
  ComponentTag tag = ComponentTag::other;
  std::optional<ConsDecomposition> dec;

  bool special() const { return tag != ComponentTag::other; }
  VertexSet connection() const { return dec ? dec->connection_vertices : VertexSet{}; }
  Vertex connection_of(Vertex v) const { return dec->connection_of(v); }
};

inline Part classify_part(const Graph& g, VertexSet verts) {
  const Subgraph sub = induced_subgraph(g, verts);
  auto cls = classify_component(sub.graph);
  Part p{verts, cls.tag, std::nullopt};
  if (cls.decomposition) p.dec = cls.decomposition->remapped(sub.embedding);
  return p;
}

inline std::vector<Part> classify_parts(const Graph& g, VertexSet alive) {
  std::vector<Part> out;
  for (VertexSet comp : component_sets(g, alive)) out.push_back(classify_part(g, comp));
  return out;
}

inline int count_tag(const std::vector<Part>& parts, ComponentTag t) {
  return static_cast<int>(std::count_if(parts.begin(), parts.end(), [t](const Part& p) { return p.tag == t; }));
}

inline const Part* first_tag(const std::vector<Part>& parts, ComponentTag t) {
  for (const auto& p : parts)
    if (p.tag == t) return &p;
  return nullptr;
}

inline const Part& part_containing(const std::vector<Part>& parts, Vertex v) {
  for (const auto& p : parts)
    if (p.verts.contains(v)) return p;
  throw DispatchFailure("no component contains vertex " + std::to_string(v));
}

/// {v} ∪ (V(T) \ {v'}), v' being the connection vertex of v's constituent.
inline VertexSet shifted_connection_set(const Part& p, Vertex v) {
  return VertexSet::single(v) | (p.connection() - VertexSet::single(p.connection_of(v)));
}

class ConstructiveBound {
 public:
  ConstructiveBound(CaseTrace& trace, std::uint64_t fallback_budget) : trace_(trace), budget_(fallback_budget) {}

  /// Isolating set of the connected piece g (not C4), in g's ids.
  VertexSet solve(const Graph& g, const std::vector<Vertex>& to_root, int depth) {
    const Piece p{g, to_root, depth};
    const std::size_t mark = trace_.steps.size();
    try {
      const VertexSet d = dispatch(p);
      if (!is_isolating(g, d, 4)) throw DispatchFailure("emitted set does not isolate");
      if (6 * d.size() > g.num_edges() + 1) throw DispatchFailure("emitted set exceeds (m+1)/6");
      return d;
    } catch (const DispatchFailure& f) {
      trace_.steps.resize(mark);
      const auto exact = iota_exact(g, 4, budget_);
      trace_.steps.push_back(
          {std::string("fallback:") + f.what(), root(p, g.vertices()), root(p, exact.witness), {}, depth});
      return exact.witness;
    }
  }

 private:
  struct Piece {
    const Graph& g;
    const std::vector<Vertex>& to_root;
    int depth;
  };

  static VertexSet root(const Piece& p, VertexSet local) {
    VertexSet out;
    for (Vertex v : local) out.insert(p.to_root[v]);
    return out;
  }

  VertexSet direct(const Piece& p, std::string label, VertexSet working, VertexSet d) {
    trace_.steps.push_back({std::move(label), root(p, working), root(p, d), {}, p.depth});
    return d;
  }

  /// D_S on S, then recursion on every component of G - S.
  VertexSet compose(const Piece& p, std::string label, VertexSet working, VertexSet s, VertexSet d_s) {
    const Graph& g = p.g;
    if (!check_lemma21_hypothesis(g, s, d_s, 4)) throw DispatchFailure(label + ": local set violates the composition hypothesis");
    const auto comps = component_sets(g, g.vertices() - s);
    TraceStep st{std::move(label), root(p, working), root(p, d_s), {}, p.depth};
    for (VertexSet c : comps) st.recursed.push_back(root(p, c));
    trace_.steps.push_back(std::move(st));
    VertexSet out = d_s;
    for (VertexSet c : comps) {
      const Subgraph sub = induced_subgraph(g, c);
      if (is_c4(sub.graph)) throw DispatchFailure("recursion reached a C4 component");
      std::vector<Vertex> map;
      for (Vertex v : sub.embedding) map.push_back(p.to_root[v]);
      out |= sub.to_parent(solve(sub.graph, map, p.depth + 1));
    }
    return out;
  }

  VertexSet dispatch(const Piece& p) {
    const Graph& g = p.g;
    const VertexSet all = g.vertices();
    if (!has_cycle(g, 4)) return direct(p, "Base:no-C4", all, {});
    if (g.num_edges() <= 5) {
      const auto cls = classify_component(g);
      if (cls.tag == ComponentTag::diamond) {
        Vertex hub = -1;
        for (Vertex v : all)
          if (g.degree(v) == 3) {
            hub = v;
            break;
          }
        return direct(p, "Base:m<=5:diamond", all, VertexSet::single(hub));
      }
      if (cls.tag == ComponentTag::extremal)
        return direct(p, "Base:m<=5:C4+", all, cls.decomposition->connection_vertices);
      throw DispatchFailure("graph with a C4 and m <= 5 is neither diamond nor C4+");
    }
    const int delta = g.max_degree();
    if (delta <= 2) throw DispatchFailure("max degree 2 with a C4 means G is C4");
    if (delta == 3) return case_one(p);
    return case_two(p);
  }

  // ---- Case 1: max degree 3 -------------------------------------------------

  struct Working {
    std::vector<Vertex> order;  // u1 u2 u3 u4 around the cycle
    VertexSet verts;
    int span = 0;      // edges of G[V(C)]
    int boundary = 0;  // e(V(C), V \ V(C))
  };

  /// Prefers an induced K4, then K4^-, then C4; fewest outgoing edges within a class.
  static Working pick_working_cycle(const Graph& g) {
    std::optional<Working> best;
    auto rank = [](int span) { return span == 6 ? 0 : span == 5 ? 1 : 2; };
    for (const auto& c : all_cycles(g, 4)) {
      Working w{c.vertices, c.vertex_set(), 0, 0};
      w.span = induced_edge_count(g, w.verts);
      w.boundary = boundary_edge_count(g, w.verts, g.vertices() - w.verts);
      if (!best) {
        best = w;
        continue;
      }
      const auto a = std::make_pair(rank(w.span), w.boundary);
      const auto b = std::make_pair(rank(best->span), best->boundary);
      if (a < b || (a == b && lex_less(w.verts, best->verts))) best = w;
    }
    if (!best) throw DispatchFailure("no C4 found in case 1");
    return *best;
  }

  static VertexSet external(const Graph& g, Vertex x, VertexSet c) { return g.neighbors(x) - c; }

  /// Smallest vertex of C with a neighbour in `target`.
  static Vertex first_attached(const Graph& g, VertexSet c, VertexSet target) {
    for (Vertex x : c)
      if (g.neighbors(x).intersects(target)) return x;
    throw DispatchFailure("no edge from the working cycle into the component");
  }

  VertexSet case_one(const Piece& p) {
    const Graph& g = p.g;
    const Working w = pick_working_cycle(g);
    if (w.boundary == 0) {
      if (w.span != 6) throw DispatchFailure("closed working cycle that is not K4");
      return direct(p, "Case 1:K4", w.verts, VertexSet::single(w.verts.min()));
    }
    if (w.span == 6) throw DispatchFailure("induced K4 with outgoing edges under max degree 3");
    if (w.span == 5) return subcase_diamond(p, w);
    switch (w.boundary) {
      case 1: return subcase_121(p, w);
      case 2: return subcase_122(p, w);
      case 3: return subcase_123(p, w);
      case 4: return subcase_124(p, w);
      default: throw DispatchFailure("induced C4 with more than 4 outgoing edges under max degree 3");
    }
  }

  VertexSet subcase_diamond(const Piece& p, const Working& w) {
    const Graph& g = p.g;
    const VertexSet c = w.verts;
    VertexSet low, high;  // degree 2 / 3 inside G[V(C)]
    for (Vertex x : c) ((g.neighbors(x) & c).size() == 2 ? low : high).insert(x);
    const auto parts = classify_parts(g, g.vertices() - c);
    if (parts.empty()) throw DispatchFailure("diamond with outgoing edges but nothing outside");
    const int c4s = count_tag(parts, ComponentTag::c4);

    if (c4s > 0) {
      if (parts.size() == 1) {
        for (Vertex x : low)
          if (!external(g, x, c).empty()) return direct(p, "Subcase 1.1(i):G' is C4", c, VertexSet::single(x));
      }
      if (c4s == 2) return direct(p, "Subcase 1.1(i):two C4 components", c, low);
      const Part& cyc = *first_tag(parts, ComponentTag::c4);
      const Vertex u1 = first_attached(g, low, cyc.verts);
      return compose(p, "Subcase 1.1(i):one C4 component", c, c | cyc.verts, VertexSet::single(u1));
    }

    const bool all_special = std::all_of(parts.begin(), parts.end(), [](const Part& q) { return q.special(); });
    if (static_cast<int>(parts.size()) == w.boundary && all_special) {
      if (parts.size() == 1) {
        const Vertex u1 = first_attached(g, low, parts[0].verts);
        const Vertex v1 = external(g, u1, c).min();
        if (parts[0].tag == ComponentTag::diamond)
          return direct(p, "Subcase 1.1(ii):G' diamond", c, VertexSet::single(v1));
        return direct(p, "Subcase 1.1(ii):G' in G4", c, shifted_connection_set(parts[0], v1));
      }
      const Vertex a = low.min();
      const Vertex b = (low - VertexSet::single(a)).min();
      const Vertex va = external(g, a, c).min();
      const Vertex vb = external(g, b, c).min();
      const Part& pa = part_containing(parts, va);
      const Part& pb = part_containing(parts, vb);
      const bool da = pa.tag == ComponentTag::diamond, db = pb.tag == ComponentTag::diamond;
      if (da && db) return direct(p, "Subcase 1.1(ii):two diamond components", c, VertexSet{va, vb});
      if (da) return direct(p, "Subcase 1.1(ii):diamond and G4 components", c, VertexSet::single(va) | pb.connection());
      if (db) return direct(p, "Subcase 1.1(ii):diamond and G4 components", c, VertexSet::single(vb) | pa.connection());
      return direct(p, "Subcase 1.1(ii):two G4 components", c, shifted_connection_set(pa, va) | pb.connection());
    }
    return compose(p, "Subcase 1.1(ii)", c, c, VertexSet::single(high.min()));
  }

  static void reject_diamonds(const std::vector<Part>& parts) {
    // An induced diamond would have been chosen as the working structure.
    if (count_tag(parts, ComponentTag::diamond) > 0) throw DispatchFailure("unexpected diamond component");
  }

  VertexSet subcase_121(const Piece& p, const Working& w) {
    const Graph& g = p.g;
    const VertexSet c = w.verts;
    const Vertex u1 = first_attached(g, c, g.vertices() - c);
    const Vertex v = external(g, u1, c).min();
    const VertexSet plus = c | VertexSet::single(v);  // G[{v} ∪ V(C)] is C4+
    const VertexSet rest = g.vertices() - plus;
    const auto parts = classify_parts(g, rest);
    if (parts.empty()) throw DispatchFailure("C4+ should have been a base case");
    const int c4s = count_tag(parts, ComponentTag::c4);
    if (c4s > 0) {
      if (parts.size() == 1) return direct(p, "Subcase 1.2.1(i):G' is C4", plus, VertexSet::single(v));
      if (c4s == 2) return direct(p, "Subcase 1.2.1(i):two C4 components", plus, VertexSet::single(v));
      const Part& cyc = *first_tag(parts, ComponentTag::c4);
      return compose(p, "Subcase 1.2.1(i):one C4 component", plus, plus | cyc.verts, VertexSet::single(v));
    }
    reject_diamonds(parts);
    const int e_out = (g.neighbors(v) & rest).size();
    const bool all_g4 = std::all_of(parts.begin(), parts.end(), [](const Part& q) { return q.tag == ComponentTag::extremal; });
    if (static_cast<int>(parts.size()) == e_out && all_g4) {
      VertexSet d = VertexSet::single(v);
      bool all_at_connection = true;
      for (const auto& q : parts) {
        const Vertex vi = (g.neighbors(v) & q.verts).min();
        if (q.connection().contains(vi)) {
          d |= q.connection();
        } else {
          d |= q.connection() - VertexSet::single(q.connection_of(vi));
          all_at_connection = false;
        }
      }
      std::string label = all_at_connection ? "Subcase 1.2.1(ii):G in G4"
                          : parts.size() == 1 ? "Subcase 1.2.1(ii):G' in G4"
                                              : "Subcase 1.2.1(ii):two G4 components";
      return direct(p, std::move(label), plus, d);
    }
    return compose(p, "Subcase 1.2.1(ii)", c, plus, VertexSet::single(u1));
  }

  /// u_i whose opposite cycle vertex has no outside neighbour.
  static Vertex quiet_opposite(const Graph& g, const Working& w) {
    std::optional<Vertex> best;
    for (int i = 0; i < 4; ++i) {
      const Vertex opp = w.order[(i + 2) % 4];
      if (external(g, opp, w.verts).empty() && (!best || w.order[i] < *best)) best = w.order[i];
    }
    if (!best) throw DispatchFailure("every cycle vertex has an outside neighbour");
    return *best;
  }

  VertexSet subcase_122(const Piece& p, const Working& w) {
    const Graph& g = p.g;
    const VertexSet c = w.verts;
    const VertexSet rest = g.vertices() - c;
    const auto parts = classify_parts(g, rest);
    reject_diamonds(parts);
    if (count_tag(parts, ComponentTag::c4) > 0) {
      if (parts.size() != 1) throw DispatchFailure("C4 component with one outgoing edge; smaller working cycle exists");
      return direct(p, "Subcase 1.2.2:G' is C4", c, VertexSet::single(first_attached(g, c, rest)));
    }
    if (const Part* g4 = first_tag(parts, ComponentTag::extremal)) {
      const Vertex u1 = first_attached(g, c, g4->verts);
      const Vertex v1 = (external(g, u1, c) & g4->verts).min();
      if (parts.size() == 1) return direct(p, "Subcase 1.2.2(i):G' in G4", c, shifted_connection_set(*g4, v1));
      return compose(p, "Subcase 1.2.2(i):G1' in G4", c, c | g4->verts, shifted_connection_set(*g4, v1));
    }
    return compose(p, "Subcase 1.2.2(ii)", c, c, VertexSet::single(quiet_opposite(g, w)));
  }

  VertexSet subcase_123(const Piece& p, const Working& w) {
    const Graph& g = p.g;
    const VertexSet c = w.verts;
    const VertexSet rest = g.vertices() - c;
    const auto parts = classify_parts(g, rest);
    reject_diamonds(parts);
    if (count_tag(parts, ComponentTag::c4) > 0) {
      if (parts.size() != 1) throw DispatchFailure("C4 component with at most two outgoing edges; smaller working cycle exists");
      return direct(p, "Subcase 1.2.3:G' is C4", c, VertexSet::single(first_attached(g, c, rest)));
    }
    if (const Part* g4 = first_tag(parts, ComponentTag::extremal)) {
      if (parts.size() == 1)
        return direct(p, "Subcase 1.2.3(i):G' in G4", c, VertexSet::single(c.min()) | g4->connection());
      if (boundary_edge_count(g, g4->verts, c) != 2 || parts.size() != 2)
        throw DispatchFailure("G4 component with one edge to the working cycle; smaller working cycle exists");
      const Vertex u1 = first_attached(g, c, g4->verts);
      const Vertex v1 = (external(g, u1, c) & g4->verts).min();
      return compose(p, "Subcase 1.2.3(i):G1' in G4", c, c | g4->verts, shifted_connection_set(*g4, v1));
    }
    return compose(p, "Subcase 1.2.3(ii)", c, c, VertexSet::single(quiet_opposite(g, w)));
  }

  VertexSet subcase_124(const Piece& p, const Working& w) {
    const Graph& g = p.g;
    const VertexSet c = w.verts;
    const VertexSet rest = g.vertices() - c;
    const auto parts = classify_parts(g, rest);
    reject_diamonds(parts);
    if (count_tag(parts, ComponentTag::c4) > 0) {
      if (parts.size() != 1) throw DispatchFailure("C4 component with at most three outgoing edges; smaller working cycle exists");
      const Vertex u1 = c.min();
      return direct(p, "Subcase 1.2.4:G' is C4", c, VertexSet{u1, external(g, u1, c).min()});
    }
    if (const Part* g4 = first_tag(parts, ComponentTag::extremal)) {
      if (parts.size() == 1)
        return direct(p, "Subcase 1.2.4(i):G' in G4", c, VertexSet::single(c.min()) | g4->connection());
      if (boundary_edge_count(g, g4->verts, c) != 3 || parts.size() != 2)
        throw DispatchFailure("G4 component with at most two edges to the working cycle; smaller working cycle exists");
      const Vertex u1 = first_attached(g, c, g4->verts);
      return compose(p, "Subcase 1.2.4(i):G1' in G4", c, c | g4->verts, VertexSet::single(u1) | g4->connection());
    }
    return compose(p, "Subcase 1.2.4(ii)", c, c, VertexSet::single(c.min()));
  }

  // ---- Case 2: max degree at least 4 -----------------------------------------

  VertexSet case_two(const Piece& p) {
    const Graph& g = p.g;
    const int delta = g.max_degree();
    Vertex v = 0;
    while (g.degree(v) != delta) ++v;
    const VertexSet nv = closed_neighborhood(g, VertexSet::single(v));
    const VertexSet rest = g.vertices() - nv;
    const int e = boundary_edge_count(g, nv, rest);
    if (e == 0) return direct(p, "Case 2:e=0", nv, VertexSet::single(v));

    const auto parts = classify_parts(g, rest);
    std::vector<const Part*> special;
    for (const auto& q : parts)
      if (q.special()) special.push_back(&q);
    const bool star = induced_edge_count(g, nv) == delta;

    if (special.empty()) {
      if (delta == 4 && e == 1 && star) return compose(p, "Case 2:Hs empty:star", nv, nv, {});
      return compose(p, "Case 2:Hs empty", nv, nv, VertexSet::single(v));
    }

    auto attach_count = [&](const Part& q) { return boundary_edge_count(g, q.verts, nv); };
    auto qualifies = [&](const Part& q) {
      const int eh = attach_count(q);
      return open_neighborhood(g, q.verts).size() == 1 || (eh >= 1 && eh <= 2);
    };
    for (const Part* q : special)
      if (qualifies(*q)) return subcase_21(p, nv, parts, *q);
    return subcase_22(p, v, nv, delta, e, star, parts);
  }

  VertexSet subcase_21(const Piece& p, VertexSet nv, const std::vector<Part>& parts, const Part& anchor) {
    const Graph& g = p.g;
    const Vertex v1 = open_neighborhood(g, anchor.verts).min();
    std::vector<const Part*> members;
    for (const auto& q : parts) {
      if (!q.special()) continue;
      const VertexSet nh = open_neighborhood(g, q.verts);
      const int eh = boundary_edge_count(g, q.verts, nv);
      if (nh == VertexSet::single(v1) || (nh.contains(v1) && eh >= 1 && eh <= 2)) members.push_back(&q);
    }
    VertexSet s = VertexSet::single(v1);
    VertexSet d_s = VertexSet::single(v1);
    int c1 = 0, c2 = 0;
    for (const Part* q : members) {
      s |= q->verts;
      d_s |= q->connection();
      c1 += q->tag == ComponentTag::c4;
      c2 += q->tag == ComponentTag::diamond;
    }
    const auto leftover = component_sets(g, g.vertices() - s);
    const int others = static_cast<int>(leftover.size()) - 1;  // components of G'' without v

    if (c1 == 0 && c2 == 0) {
      // Every member is in G4: shift each attachment onto v1's neighbour.
      VertexSet d;
      for (const Part* q : members) d |= shifted_connection_set(*q, (g.neighbors(v1) & q->verts).min());
      return compose(p, "Subcase 2.1(ii)", s, s, d);
    }
    if (c1 == 1 && c2 == 0 && others == 0) {
      const Part gv = classify_part(g, leftover.front());
      const bool tight = (g.neighbors(v1) & gv.verts).size() == 1 &&
                         std::all_of(members.begin(), members.end(),
                                     [&](const Part* q) { return boundary_edge_count(g, q->verts, nv) == 1; }) &&
                         gv.special();
      if (tight && gv.tag == ComponentTag::diamond) return direct(p, "Subcase 2.1(i):G'' diamond", s, d_s);
      if (tight && gv.tag == ComponentTag::extremal) {
        std::vector<const Part*> g4s{&gv};
        for (const Part* q : members)
          if (q->tag == ComponentTag::extremal) g4s.push_back(q);
        for (const Part* h : g4s) {
          const Vertex u = (g.neighbors(v1) & h->verts).min();
          if (h->connection().contains(u)) continue;
          VertexSet d = VertexSet::single(v1) | (h->connection() - VertexSet::single(h->connection_of(u)));
          for (const Part* other : g4s)
            if (other != h) d |= other->connection();
          return direct(p, "Subcase 2.1(i):shifted", s | gv.verts, d);
        }
        VertexSet d = VertexSet::single(v1);
        for (const Part* h : g4s) d |= h->connection();
        return direct(p, "Subcase 2.1(i):G in G4", s | gv.verts, d);
      }
      return compose(p, "Subcase 2.1(i)", s, s, d_s);
    }
    return compose(p, "Subcase 2.1", s, s, d_s);
  }

  VertexSet subcase_22(const Piece& p, Vertex v, VertexSet nv, int delta, int e, bool star,
                       const std::vector<Part>& parts) {
    const Graph& g = p.g;
    VertexSet s = nv;
    VertexSet d_s = VertexSet::single(v);
    int c1 = 0, c2 = 0, c3 = 0;
    const Part* only_c4 = nullptr;
    bool any_other = false;
    const VertexSet nbrs = nv - VertexSet::single(v);
    for (const auto& q : parts) {
      if (!q.special()) {
        any_other = true;
        continue;
      }
      s |= q.verts;
      if (q.tag == ComponentTag::extremal) {
        ++c3;
        d_s |= q.connection();
      } else {
        (q.tag == ComponentTag::c4 ? c1 : c2) += 1;
        if (q.tag == ComponentTag::c4) only_c4 = &q;
        VertexSet touching;
        for (Vertex x : q.verts)
          if (g.neighbors(x).intersects(nbrs)) touching.insert(x);
        d_s.insert(touching.min());
      }
    }
    if (any_other) return compose(p, "Subcase 2.2(ii)", s, s, d_s);
    if (c1 == 1 && c2 == 0 && c3 == 0 && delta == 4 && e == 3 && star) {
      for (Vertex x : only_c4->verts) {
        const VertexSet closed = VertexSet::single(x) | (g.neighbors(x) & only_c4->verts);
        if (boundary_edge_count(g, closed, nv) >= 2) return direct(p, "Subcase 2.2(i):single C4", s, VertexSet::single(x));
      }
      throw DispatchFailure("no C4 vertex covers two of the three attaching edges");
    }
    return direct(p, "Subcase 2.2(i)", s, d_s);
  }

  CaseTrace& trace_;
  std::uint64_t budget_;
};

}  // namespace detail

/// Node budget for the exact solver when a case dispatch falls back.
inline constexpr std::uint64_t kFallbackBudget = 50'000'000;

/// C4-isolating set of size at most floor((m_i+1)/6) per component, with the
/// ordered trace of proof cases applied. Components isomorphic to C4 are rejected.
inline ConstructResult construct(const Graph& g) {
  const auto comps = connected_components(g);
  for (const auto& c : comps)
    if (is_c4(c.graph)) throw ExcludedGraph("excluded graph C4");
  ConstructResult out;
  detail::ConstructiveBound engine(out.trace, kFallbackBudget);
  for (const auto& c : comps) out.set |= c.to_parent(engine.solve(c.graph, c.embedding, 0));
  return out;
}

}  // namespace ciso
