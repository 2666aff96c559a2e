#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <exception>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ciso/canonical.hpp"
#include "ciso/extremal.hpp"
#include "ciso/graph.hpp"
#include "ciso/graph6.hpp"
#include "ciso/isolation.hpp"
#include "ciso/rational.hpp"

namespace ciso {

/// ι(G, C_k) <= (a*n + b*m + c) / d, with graphs exempt up to isomorphism.
struct BoundSpec {
  int k = 4;
  long long a = 0, b = 1, c = 1, d = 6;
  std::vector<std::string> exclusions;  ///< graph6

  Rational value(int n, int m) const { return Rational(a * n + b * m + c, d); }

  /// "m+1/6", "n/4", "2*n-m+3/7"; the constant term is always printed.
  std::string expression() const {
    std::string out;
    auto term = [&](long long coef, const char* var) {
      if (coef == 0) return;
      if (coef < 0) out += '-';
      else if (!out.empty()) out += '+';
      const long long mag = coef < 0 ? -coef : coef;
      if (mag != 1) out += std::to_string(mag) + "*";
      out += var;
    };
    term(a, "n");
    term(b, "m");
    if (c != 0 || out.empty()) {
      if (c < 0) out += '-';
      else if (!out.empty()) out += '+';
      out += std::to_string(c < 0 ? -c : c);
    }
    return out + "/" + std::to_string(d);
  }
};

class BoundParseError : public std::invalid_argument {
 public:
  BoundParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses "a*n+b*m+c/d": a sum of integer multiples of n, m and 1 over a
/// positive integer denominator. The division applies to the whole sum.
inline BoundSpec parse_bound(std::string_view text, int k) {
  BoundSpec spec;
  spec.k = k;
  spec.a = spec.b = spec.c = 0;
  const auto slash = text.rfind('/');
  if (slash == std::string_view::npos) throw BoundParseError("bound needs a '/denominator'", text.size());
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  {
    const auto r = std::from_chars(den.data(), den.data() + den.size(), spec.d);
    if (r.ec != std::errc{} || r.ptr != den.data() + den.size() || spec.d < 1)
      throw BoundParseError("denominator must be a positive integer", slash + 1);
  }
  std::size_t i = 0;
  bool any = false;
  auto skip_space = [&] {
    while (i < num.size() && num[i] == ' ') ++i;
  };
  skip_space();
  while (i < num.size()) {
    long long sign = 1;
    if (num[i] == '+' || num[i] == '-') {
      sign = num[i] == '-' ? -1 : 1;
      ++i;
      skip_space();
    } else if (any) {
      throw BoundParseError("expected '+' or '-'", i);
    }
    long long coef = 1;
    bool has_coef = false;
    if (i < num.size() && std::isdigit(static_cast<unsigned char>(num[i]))) {
      const auto r = std::from_chars(num.data() + i, num.data() + num.size(), coef);
      if (r.ec != std::errc{}) throw BoundParseError("bad integer", i);
      i = static_cast<std::size_t>(r.ptr - num.data());
      has_coef = true;
      skip_space();
    }
    char var = 0;
    if (i < num.size() && num[i] == '*') {
      if (!has_coef) throw BoundParseError("'*' without a coefficient", i);
      ++i;
      skip_space();
      if (i >= num.size() || (num[i] != 'n' && num[i] != 'm')) throw BoundParseError("expected 'n' or 'm'", i);
    }
    if (i < num.size() && (num[i] == 'n' || num[i] == 'm')) var = num[i++];
    if (!has_coef && !var) throw BoundParseError("expected a term", i);
    skip_space();
    const long long v = sign * coef;
    if (var == 'n') spec.a += v;
    else if (var == 'm') spec.b += v;
    else spec.c += v;
    any = true;
  }
  if (!any) throw BoundParseError("empty numerator", 0);
  return spec;
}

namespace presets {
/// ι(G, C3) <= (m+1)/5.
inline BoundSpec triangle() { return {3, 0, 1, 1, 5, {}}; }
/// ι(G, C4) <= (m+1)/6.
inline BoundSpec four_cycle() { return {4, 0, 1, 1, 6, {}}; }
/// Conjectured ι(G, C_k) <= (m+1)/(k+2).
inline BoundSpec conjecture(int k) {
  detail::check_cycle_length(k);
  return {k, 0, 1, 1, k + 2, {}};
}
}  // namespace presets

enum class SurveyStatus { below, equal, violation, excluded, unresolved };

inline const char* to_string(SurveyStatus s) {
  switch (s) {
    case SurveyStatus::below: return "below";
    case SurveyStatus::equal: return "equal";
    case SurveyStatus::violation: return "violation";
    case SurveyStatus::excluded: return "excluded";
    case SurveyStatus::unresolved: return "unresolved";
  }
  return "?";
}

struct SurveyRecord {
  std::size_t index = 0;  ///< position in the input stream
  std::string graph6;
  int n = 0, m = 0, k = 0;
  std::optional<int> iota;  ///< empty when excluded or the budget ran out
  Rational bound;
  SurveyStatus status = SurveyStatus::below;
  std::optional<std::string> extremal_class;  ///< "diamond" or "cons"

  bool operator==(const SurveyRecord&) const = default;
};

struct SizeHistogram {
  std::size_t records = 0, below = 0, equal = 0, violation = 0, excluded = 0, unresolved = 0;
  bool operator==(const SizeHistogram&) const = default;
};

struct SurveyReport {
  BoundSpec spec;
  std::size_t processed = 0;
  std::size_t parse_failures = 0;
  std::vector<SurveyRecord> records;  ///< ordered by input index
  std::vector<SurveyRecord> violations;
  std::vector<SurveyRecord> equalities;
  std::map<int, SizeHistogram> by_order;
  double wall_seconds = 0;

  std::size_t count(SurveyStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [s](const SurveyRecord& r) { return r.status == s; }));
  }
};

// ---- enumeration -------------------------------------------------------------

inline constexpr int kMaxEnumerationOrder = 8;

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, in increasing order of (edge count, canonical form).
inline std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumerate_connected: n must be in 1.." + std::to_string(kMaxEnumerationOrder));
  // Every connected graph has a vertex whose removal leaves it connected, so
  // growing level n-1 by one vertex joined to a nonempty subset reaches all.
  std::set<CanonicalForm> level{canonical_form(Graph(1))};
  for (int size = 2; size <= n; ++size) {
    std::set<CanonicalForm> next;
    for (const auto& f : level) {
      const Graph base = f.to_graph();
      std::vector<VertexSet> adj;
      for (Vertex v = 0; v < size - 1; ++v) adj.push_back(base.neighbors(v));
      adj.emplace_back();
      const std::uint64_t full = (std::uint64_t{1} << (size - 1)) - 1;
      for (std::uint64_t mask = 1; mask <= full; ++mask) {
        auto grown = adj;
        grown.back() = VertexSet::from_bits(mask);
        for (Vertex v = 0; v < size - 1; ++v)
          if (mask >> v & 1) grown[v].insert(size - 1);
        next.insert(canonical_form(Graph::from_adjacency(std::move(grown))));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& f : level) out.push_back(f.to_graph());
  std::stable_sort(out.begin(), out.end(), [](const Graph& x, const Graph& y) { return x.num_edges() < y.num_edges(); });
  return out;
}

// ---- ingestion ---------------------------------------------------------------

enum class IngestMode { abort, skip };

struct IngestFailure {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<std::size_t> lines;  ///< source line of each graph
  std::vector<IngestFailure> failures;
};

class IngestError : public std::invalid_argument {
 public:
  IngestError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Newline-separated graph6 records. Blank lines and the optional ">>graph6<<"
/// header are ignored.
inline IngestResult ingest_graph6(std::istream& in, IngestMode mode = IngestMode::abort) {
  IngestResult out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view text = line;
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) continue;
    try {
      out.graphs.push_back(parse_graph6(text));
      out.lines.push_back(no);
    } catch (const Graph6Error& e) {
      if (mode == IngestMode::abort) throw IngestError(no, e.what());
      out.failures.push_back({no, e.what()});
    }
  }
  return out;
}

// ---- per-graph check ---------------------------------------------------------

/// Node budget applied to each iota_exact call in a survey.
inline constexpr std::uint64_t kDefaultSurveyBudget = 200'000'000;

/// Connected, n = k, every degree 2.
inline bool is_cycle_graph(const Graph& g, int k) {
  return g.num_vertices() == k && g.num_vertices() >= 3 && g.min_degree() == 2 && g.max_degree() == 2 &&
         is_connected(g);
}

namespace detail {

inline bool is_diamond(const Graph& g) { return g.num_vertices() == 4 && g.num_edges() == 5; }

struct PreparedSpec {
  BoundSpec spec;
  std::vector<Graph> excluded;
};

inline PreparedSpec prepare(const BoundSpec& spec) {
  check_cycle_length(spec.k);
  if (spec.d < 1) throw std::invalid_argument("bound denominator must be at least 1");
  PreparedSpec p{spec, {}};
  for (const auto& s : spec.exclusions) p.excluded.push_back(parse_graph6(s));
  return p;
}

inline SurveyRecord check_prepared(const Graph& g, const PreparedSpec& p, std::uint64_t budget, std::size_t index) {
  SurveyRecord r;
  r.index = index;
  r.graph6 = encode_graph6(g);
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.k = p.spec.k;
  r.bound = p.spec.value(r.n, r.m);
  const bool excluded = is_cycle_graph(g, p.spec.k) || std::any_of(p.excluded.begin(), p.excluded.end(),
                                                                    [&](const Graph& x) { return isomorphic(x, g); });
  if (excluded) {
    r.status = SurveyStatus::excluded;
    return r;
  }
  try {
    r.iota = iota_exact(g, p.spec.k, budget).iota;
  } catch (const BudgetExhausted&) {
    r.status = SurveyStatus::unresolved;
    return r;
  }
  const Rational iota(*r.iota);
  r.status = iota > r.bound ? SurveyStatus::violation : iota == r.bound ? SurveyStatus::equal : SurveyStatus::below;
  if (r.status == SurveyStatus::equal) {
    if (p.spec.k == 4 && is_diamond(g)) r.extremal_class = "diamond";
    else if (recognize(g, p.spec.k)) r.extremal_class = "cons";
  }
  return r;
}

}  // namespace detail

inline SurveyRecord check_graph(const Graph& g, const BoundSpec& spec, std::uint64_t budget = kDefaultSurveyBudget) {
  return detail::check_prepared(g, detail::prepare(spec), budget, 0);
}

// ---- survey runner -----------------------------------------------------------

struct SurveyOptions {
  unsigned workers = 1;
  std::uint64_t budget = kDefaultSurveyBudget;
};

/// Checks every graph against the bound. Records come back ordered by input
/// index regardless of the worker count.
inline SurveyReport survey(const std::vector<Graph>& graphs, const BoundSpec& spec, SurveyOptions opt = {}) {
  const auto prepared = detail::prepare(spec);
  const auto start = std::chrono::steady_clock::now();
  std::vector<SurveyRecord> records(graphs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        records[i] = detail::check_prepared(graphs[i], prepared, opt.budget, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = graphs.size();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(graphs.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  SurveyReport rep;
  rep.spec = spec;
  rep.processed = records.size();
  for (const auto& r : records) {
    auto& h = rep.by_order[r.n];
    ++h.records;
    switch (r.status) {
      case SurveyStatus::below: ++h.below; break;
      case SurveyStatus::equal: ++h.equal; rep.equalities.push_back(r); break;
      case SurveyStatus::violation: ++h.violation; rep.violations.push_back(r); break;
      case SurveyStatus::excluded: ++h.excluded; break;
      case SurveyStatus::unresolved: ++h.unresolved; break;
    }
  }
  rep.records = std::move(records);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// All connected graphs with 1..max_n vertices, smallest order first.
inline std::vector<Graph> connected_universe(int max_n) {
  std::vector<Graph> all;
  for (int n = 1; n <= max_n; ++n) {
    auto level = enumerate_connected(n);
    all.insert(all.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return all;
}

}  // namespace ciso
