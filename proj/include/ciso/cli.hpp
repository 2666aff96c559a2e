#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ciso/canonical.hpp"
#include "ciso/constructive.hpp"
#include "ciso/extremal.hpp"
#include "ciso/graph.hpp"
#include "ciso/graph6.hpp"
#include "ciso/isolation.hpp"
#include "ciso/report.hpp"
#include "ciso/survey.hpp"
#include "ciso/trees.hpp"

namespace ciso::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kViolations = 2, kBudget = 3 };

/// Environment variable naming the default survey worker count.
inline constexpr const char* kWorkersEnv = "CISO_WORKERS";

struct CliConfig {
  std::string subcommand;
  std::optional<std::string> graph6;
  std::optional<std::string> file;   ///< edge-list file
  std::optional<std::string> input;  ///< graph6 stream file
  std::optional<int> enumerate;
  int order = 0;
  int k = 4;
  bool k_given = false;
  std::string format = "text";
  unsigned workers = 1;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> bound;
  bool thm13 = false, thm14 = false, conj = false;
  std::optional<std::string> exclude;
  bool skip_bad = false;
  bool timing = false;
  std::optional<std::string> set;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline unsigned default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kWorkersEnv) + " must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// "0,2,5", "{0,2,5}" or "" (empty set).
inline VertexSet parse_vertex_set(std::string text) {
  std::erase_if(text, [](char c) { return c == '{' || c == '}' || c == ' '; });
  VertexSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0 || v >= kMaxVertices) throw UsageError("bad vertex id '" + item + "' in --set");
    s.insert(v);
  }
  return s;
}

class Runner {
 public:
  Runner(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err)
      : cfg_(cfg), in_(in), out_(out), err_(err) {}

  int dispatch() {
    const auto& c = cfg_.subcommand;
    if (cfg_.k < 3) throw UsageError("-k must be at least 3");
    if (c == "verify") return verify_cmd();
    if (c == "exact") return exact_cmd();
    if (c == "construct") return construct_cmd();
    if (c == "cons") return cons_cmd();
    if (c == "recognize") return recognize_cmd();
    if (c == "trees") return trees_cmd();
    if (c == "enumerate") return enumerate_cmd();
    if (c == "survey") return survey_cmd();
    if (c == "check") return check_cmd();
    throw UsageError("unknown subcommand '" + c + "'");
  }

 private:
  bool json() const { return cfg_.format == "json"; }
  bool csv() const { return cfg_.format == "csv"; }
  void no_csv() const {
    if (csv()) throw UsageError("--format csv is not available for '" + cfg_.subcommand + "'");
  }
  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  /// --graph6, else --file (edge list), else the first graph6 line on stdin.
  Graph single_graph() {
    if (cfg_.graph6 && cfg_.file) throw UsageError("give either --graph6 or --file, not both");
    if (cfg_.graph6) return parse_graph6(*cfg_.graph6);
    if (cfg_.file) {
      std::ifstream f(*cfg_.file);
      if (!f) throw UsageError("cannot open '" + *cfg_.file + "'");
      try {
        return read_edge_list(f);
      } catch (const std::invalid_argument& e) {
        throw UsageError(*cfg_.file + ": " + e.what());
      }
    }
    auto got = ingest_graph6(in_);
    if (got.graphs.size() != 1)
      throw UsageError("expected exactly one graph6 line on standard input, got " + std::to_string(got.graphs.size()));
    return got.graphs.front();
  }

  int verify_cmd() {
    no_csv();
    if (!cfg_.set) throw UsageError("verify needs --set");
    const Graph g = single_graph();
    const auto cert = verify(g, parse_vertex_set(*cfg_.set), cfg_.k);
    if (json()) {
      emit(to_json(cert));
    } else {
      out_ << "valid=" << (cert.valid ? "true" : "false") << "\nset=" << to_string(cert.set)
           << "\nresidual_components=" << cert.residual.size() << '\n';
    }
    return kOk;
  }

  int exact_cmd() {
    no_csv();
    const Graph g = single_graph();
    const auto r = iota_exact(g, cfg_.k, cfg_.budget);
    if (json()) {
      emit({{"graph6", encode_graph6(g)}, {"k", cfg_.k}, {"iota", r.iota}, {"witness", to_json(r.witness)}, {"explored", r.explored}});
    } else {
      out_ << "iota=" << r.iota << "\nwitness=" << to_string(r.witness) << '\n';
    }
    return kOk;
  }

  int construct_cmd() {
    no_csv();
    if (cfg_.k != 4) throw UsageError("construct implements the C4 bound only (-k 4)");
    const Graph g = single_graph();
    const auto r = construct(g);
    const Rational bound = bound_value(g.num_edges());
    if (json()) {
      emit({{"graph6", encode_graph6(g)},
            {"n", g.num_vertices()},
            {"m", g.num_edges()},
            {"set", to_json(r.set)},
            {"size", r.set.size()},
            {"bound", to_json(bound)},
            {"fallback", r.trace.has_fallback()},
            {"trace", to_json(r.trace)}});
    } else {
      out_ << "set=" << to_string(r.set) << "\nsize=" << r.set.size() << "\nbound=" << to_string(bound) << "\ntrace:\n";
      for (const auto& s : r.trace.steps)
        out_ << std::string(2 * (s.depth + 1), ' ') << s.label << " working=" << to_string(s.working)
             << " increment=" << to_string(s.increment) << '\n';
    }
    return kOk;
  }

  int cons_cmd() {
    no_csv();
    const Graph t = single_graph();
    const auto built = cons(Tree::from_graph(t), cfg_.k);
    const auto& g = built.graph;
    if (json()) {
      emit({{"graph6", encode_graph6(g)}, {"n", g.num_vertices()}, {"m", g.num_edges()},
            {"decomposition", to_json(built.decomposition)}});
    } else {
      out_ << "graph6=" << encode_graph6(g) << "\nn=" << g.num_vertices() << "\nm=" << g.num_edges()
           << "\nconnection_vertices=" << to_string(built.decomposition.connection_vertices) << '\n';
    }
    return kOk;
  }

  int recognize_cmd() {
    no_csv();
    const Graph g = single_graph();
    const auto d = recognize(g, cfg_.k);
    if (json()) {
      emit({{"graph6", encode_graph6(g)}, {"k", cfg_.k}, {"member", d.has_value()},
            {"decomposition", d ? to_json(*d) : Json(nullptr)}});
    } else {
      out_ << "member=" << (d ? "true" : "false") << '\n';
      if (d) {
        out_ << "connection_vertices=" << to_string(d->connection_vertices) << '\n';
        for (const auto& c : d->constituents) {
          out_ << "constituent connection=" << c.connection << " cycle=";
          for (std::size_t i = 0; i < c.cycle.size(); ++i) out_ << (i ? "-" : "") << c.cycle[i];
          out_ << '\n';
        }
      }
    }
    return kOk;
  }

  static std::string edge_text(const std::vector<Edge>& edges) {
    std::string s;
    for (auto [a, b] : edges) s += (s.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
    return s;
  }

  int trees_cmd() {
    no_csv();
    const auto ts = enumerate_trees(cfg_.order);
    if (json()) {
      Json arr = Json::array();
      for (const auto& t : ts) {
        Json e = Json::array();
        for (auto [a, b] : t.edges()) e.push_back({a, b});
        arr.push_back({{"code", canonical_code(t)}, {"edges", e}});
      }
      emit({{"n", cfg_.order}, {"count", ts.size()}, {"trees", arr}});
    } else {
      for (const auto& t : ts) out_ << canonical_code(t) << ' ' << edge_text(t.edges()) << '\n';
    }
    return kOk;
  }

  int enumerate_cmd() {
    const auto gs = enumerate_connected(cfg_.order);
    if (json()) {
      Json arr = Json::array();
      for (const auto& g : gs) arr.push_back(encode_graph6(g));
      emit({{"n", cfg_.order}, {"count", gs.size()}, {"graphs", arr}});
    } else if (csv()) {
      out_ << "graph6,n,m\n";
      for (const auto& g : gs) out_ << encode_graph6(g) << ',' << g.num_vertices() << ',' << g.num_edges() << '\n';
    } else {
      for (const auto& g : gs) out_ << encode_graph6(g) << '\n';
    }
    return kOk;
  }

  BoundSpec bound_spec() const {
    const int chosen = int(cfg_.bound.has_value()) + int(cfg_.thm13) + int(cfg_.thm14) + int(cfg_.conj);
    if (chosen > 1) throw UsageError("choose one of --bound, --thm1.3, --thm1.4, --conj");
    BoundSpec spec;
    if (cfg_.thm13) {
      if (cfg_.k != 3 && cfg_.k_given) throw UsageError("--thm1.3 is the k=3 bound");
      spec = presets::triangle();
    } else if (cfg_.thm14) {
      if (cfg_.k != 4) throw UsageError("--thm1.4 is the k=4 bound");
      spec = presets::four_cycle();
    } else if (cfg_.bound) {
      spec = parse_bound(*cfg_.bound, cfg_.k);
    } else {
      spec = presets::conjecture(cfg_.k);
    }
    if (cfg_.exclude) {
      std::ifstream f(*cfg_.exclude);
      if (!f) throw UsageError("cannot open '" + *cfg_.exclude + "'");
      std::string line;
      std::size_t no = 0;
      while (std::getline(f, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
          (void)parse_graph6(line);
        } catch (const Graph6Error& e) {
          throw UsageError(*cfg_.exclude + ": line " + std::to_string(no) + ": " + e.what());
        }
        spec.exclusions.push_back(line);
      }
    }
    return spec;
  }

  std::uint64_t survey_budget() const { return cfg_.budget.value_or(kDefaultSurveyBudget); }

  int check_cmd() {
    const Graph g = single_graph();
    const auto r = check_graph(g, bound_spec(), survey_budget());
    if (json()) {
      emit(to_json(r));
    } else if (csv()) {
      out_ << kCsvHeader << '\n';
      write_csv_row(out_, r);
    } else {
      write_record_text(r);
    }
    if (r.status == SurveyStatus::violation) return kViolations;
    if (r.status == SurveyStatus::unresolved) return kBudget;
    return kOk;
  }

  void write_record_text(const SurveyRecord& r) {
    out_ << r.graph6 << " n=" << r.n << " m=" << r.m << " k=" << r.k
         << " iota=" << (r.iota ? std::to_string(*r.iota) : "-") << " bound=" << to_string(r.bound)
         << " status=" << to_string(r.status);
    if (r.extremal_class) out_ << " class=" << *r.extremal_class;
    out_ << '\n';
  }

  int survey_cmd() {
    const int sources = int(cfg_.enumerate.has_value()) + int(cfg_.input.has_value());
    if (sources > 1) throw UsageError("give either --enumerate or --input, not both");
    const BoundSpec spec = bound_spec();
    std::vector<Graph> graphs;
    std::size_t failures = 0;
    const IngestMode mode = cfg_.skip_bad ? IngestMode::skip : IngestMode::abort;
    if (cfg_.enumerate) {
      graphs = connected_universe(*cfg_.enumerate);
    } else {
      IngestResult got;
      if (cfg_.input) {
        std::ifstream f(*cfg_.input);
        if (!f) throw UsageError("cannot open '" + *cfg_.input + "'");
        got = ingest_graph6(f, mode);
      } else {
        got = ingest_graph6(in_, mode);
      }
      for (const auto& f : got.failures) err_ << "skipped line " << f.line << ": " << f.message << '\n';
      failures = got.failures.size();
      graphs = std::move(got.graphs);
    }
    auto rep = survey(graphs, spec, {cfg_.workers, survey_budget()});
    rep.parse_failures = failures;
    if (json()) {
      emit(to_json(rep, cfg_.timing));
    } else if (csv()) {
      write_csv(out_, rep);
    } else {
      out_ << "bound=" << spec.expression() << " k=" << spec.k << "\nprocessed=" << rep.processed
           << "\nbelow=" << rep.count(SurveyStatus::below) << "\nequal=" << rep.count(SurveyStatus::equal)
           << "\nviolation=" << rep.count(SurveyStatus::violation) << "\nexcluded=" << rep.count(SurveyStatus::excluded)
           << "\nunresolved=" << rep.count(SurveyStatus::unresolved) << "\nparse_failures=" << rep.parse_failures
           << '\n';
      for (const auto& r : rep.violations) {
        out_ << "violation ";
        write_record_text(r);
      }
      for (const auto& r : rep.equalities) {
        out_ << "equal ";
        write_record_text(r);
      }
      if (cfg_.timing) out_ << "wall_seconds=" << rep.wall_seconds << '\n';
    }
    if (!rep.violations.empty()) return kViolations;
    if (rep.count(SurveyStatus::unresolved) > 0) return kBudget;
    return kOk;
  }

  const CliConfig& cfg_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

/// Runs one invocation; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"C_k-isolation numbers: exact values, constructive C4 bound, extremal families, surveys", "ciso"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string workers_text;

  auto add_graph = [&](CLI::App* sc) {
    sc->add_option("--graph6", cfg.graph6, "Input graph in graph6");
    sc->add_option("--file", cfg.file, "Input graph as an edge list (\"n <count>\" then \"u v\" lines)");
  };
  auto add_k = [&](CLI::App* sc) { sc->add_option("-k", cfg.k, "Cycle length")->capture_default_str(); };
  auto add_format = [&](CLI::App* sc) {
    sc->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };
  auto add_budget = [&](CLI::App* sc) { sc->add_option("--budget", cfg.budget, "Search node budget for the exact solver"); };
  auto add_bound = [&](CLI::App* sc) {
    sc->add_option("--bound", cfg.bound, "Bound a*n+b*m+c/d, e.g. m+1/6");
    sc->add_flag("--thm1.3", cfg.thm13, "Bound (m+1)/5 with k=3");
    sc->add_flag("--thm1.4", cfg.thm14, "Bound (m+1)/6 with k=4");
    sc->add_flag("--conj", cfg.conj, "Bound (m+1)/(k+2) (the default)");
    sc->add_option("--exclude", cfg.exclude, "File of graph6 lines exempt from the bound (up to isomorphism)");
  };

  auto* verify_sc = app.add_subcommand("verify", "Check that --set is C_k-isolating");
  add_graph(verify_sc);
  add_k(verify_sc);
  add_format(verify_sc);
  verify_sc->add_option("--set", cfg.set, "Vertex ids, e.g. 0,3")->required();

  auto* exact_sc = app.add_subcommand("exact", "Exact isolation number with a witness");
  add_graph(exact_sc);
  add_k(exact_sc);
  add_format(exact_sc);
  add_budget(exact_sc);

  auto* construct_sc = app.add_subcommand("construct", "C4-isolating set of size at most (m+1)/6 with its case trace");
  add_graph(construct_sc);
  add_k(construct_sc);
  add_format(construct_sc);

  auto* cons_sc = app.add_subcommand("cons", "Build cons(T, C_k) from a tree");
  add_graph(cons_sc);
  add_k(cons_sc);
  add_format(cons_sc);

  auto* recognize_sc = app.add_subcommand("recognize", "Decide membership in {cons(T, C_k)}");
  add_graph(recognize_sc);
  add_k(recognize_sc);
  add_format(recognize_sc);

  auto* trees_sc = app.add_subcommand("trees", "Trees on n vertices up to isomorphism");
  trees_sc->add_option("-n", cfg.order, "Vertex count")->required()->check(CLI::Range(1, kMaxTreeOrder));
  add_format(trees_sc);

  auto* enumerate_sc = app.add_subcommand("enumerate", "Connected graphs on n vertices up to isomorphism");
  enumerate_sc->add_option("-n", cfg.order, "Vertex count")->required()->check(CLI::Range(1, kMaxEnumerationOrder));
  add_format(enumerate_sc);

  auto* survey_sc = app.add_subcommand("survey", "Check a bound on every graph of a stream");
  survey_sc->add_option("--enumerate", cfg.enumerate, "Use all connected graphs with 1..N vertices")
      ->check(CLI::Range(1, kMaxEnumerationOrder));
  survey_sc->add_option("--input", cfg.input, "graph6 file (default: standard input)");
  add_k(survey_sc);
  add_format(survey_sc);
  add_budget(survey_sc);
  add_bound(survey_sc);
  survey_sc->add_option("--workers", workers_text, "Worker threads (default: $" + std::string(kWorkersEnv) + " or all cores)");
  survey_sc->add_flag("--skip-bad", cfg.skip_bad, "Skip malformed graph6 lines instead of aborting");
  survey_sc->add_flag("--timing", cfg.timing, "Report wall time");

  auto* check_sc = app.add_subcommand("check", "Check a bound on one graph");
  add_graph(check_sc);
  add_k(check_sc);
  add_format(check_sc);
  add_budget(check_sc);
  add_bound(check_sc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  for (auto* sc : app.get_subcommands()) {
    cfg.subcommand = sc->get_name();
    if (const auto* opt = sc->get_option_no_throw("-k"); opt && opt->count() > 0) cfg.k_given = true;
  }

  try {
    if (cfg.subcommand == "survey") {
      if (workers_text.empty()) {
        cfg.workers = default_workers();
      } else {
        std::size_t used = 0;
        long w = 0;
        try {
          w = std::stol(workers_text, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != workers_text.size() || w < 1) throw UsageError("--workers must be a positive integer");
        cfg.workers = static_cast<unsigned>(w);
      }
    }
    Runner runner(cfg, in, out, err);
    return runner.dispatch();
  } catch (const ExcludedGraph& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ciso::cli
