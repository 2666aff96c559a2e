#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "ciso/constructive.hpp"
#include "ciso/extremal.hpp"
#include "ciso/isolation.hpp"
#include "ciso/survey.hpp"

namespace ciso {

using Json = nlohmann::ordered_json;

inline Json to_json(VertexSet s) { return s.to_vector(); }

inline Json to_json(const Rational& r) {
  return {{"num", r.numerator()}, {"den", r.denominator()}, {"text", to_string(r)}};
}

inline Json to_json(const BoundSpec& s) {
  return {{"k", s.k}, {"a", s.a}, {"b", s.b}, {"c", s.c}, {"d", s.d}, {"expression", s.expression()},
          {"exclusions", s.exclusions}};
}

inline Json to_json(const SurveyRecord& r) {
  return {{"index", r.index},
          {"graph6", r.graph6},
          {"n", r.n},
          {"m", r.m},
          {"k", r.k},
          {"iota", r.iota ? Json(*r.iota) : Json(nullptr)},
          {"bound", to_json(r.bound)},
          {"status", to_string(r.status)},
          {"extremal_class", r.extremal_class ? Json(*r.extremal_class) : Json(nullptr)}};
}

inline Json to_json(const SizeHistogram& h) {
  return {{"records", h.records}, {"below", h.below},         {"equal", h.equal},
          {"violation", h.violation}, {"excluded", h.excluded}, {"unresolved", h.unresolved}};
}

/// {spec, totals, violations, equalities}; "metadata" carries wall time only when asked.
inline Json to_json(const SurveyReport& rep, bool timing = false) {
  Json by_order = Json::object();
  for (const auto& [n, h] : rep.by_order) by_order[std::to_string(n)] = to_json(h);
  Json totals = {{"processed", rep.processed},
                 {"below", rep.count(SurveyStatus::below)},
                 {"equal", rep.count(SurveyStatus::equal)},
                 {"violation", rep.count(SurveyStatus::violation)},
                 {"excluded", rep.count(SurveyStatus::excluded)},
                 {"unresolved", rep.count(SurveyStatus::unresolved)},
                 {"parse_failures", rep.parse_failures},
                 {"by_order", by_order}};
  Json out = {{"spec", to_json(rep.spec)}, {"totals", totals}, {"violations", Json::array()}, {"equalities", Json::array()}};
  for (const auto& r : rep.violations) out["violations"].push_back(to_json(r));
  for (const auto& r : rep.equalities) out["equalities"].push_back(to_json(r));
  if (timing) out["metadata"] = {{"wall_seconds", rep.wall_seconds}};
  return out;
}

inline constexpr const char* kCsvHeader = "graph6,n,m,k,iota,bound_num,bound_den,status,extremal_class";

/// graph6 bytes lie in 63..126, so no field needs quoting.
inline void write_csv_row(std::ostream& out, const SurveyRecord& r) {
  out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.k << ',' << (r.iota ? std::to_string(*r.iota) : "") << ','
      << r.bound.numerator() << ',' << r.bound.denominator() << ',' << to_string(r.status) << ','
      << r.extremal_class.value_or("") << '\n';
}

inline void write_csv(std::ostream& out, const SurveyReport& rep) {
  out << kCsvHeader << '\n';
  for (const auto& r : rep.records) write_csv_row(out, r);
}

inline Json to_json(const TraceStep& s) {
  Json rec = Json::array();
  for (VertexSet r : s.recursed) rec.push_back(to_json(r));
  return {{"label", s.label}, {"depth", s.depth}, {"working", to_json(s.working)}, {"increment", to_json(s.increment)},
          {"recursed", rec}};
}

inline Json to_json(const CaseTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  return steps;
}

inline Json to_json(const ConsDecomposition& d) {
  Json cons = Json::array();
  for (const auto& c : d.constituents) cons.push_back({{"connection", c.connection}, {"attachment", c.attachment}, {"cycle", c.cycle}});
  Json tree = Json::array();
  for (auto [a, b] : d.tree_edges) tree.push_back({a, b});
  return {{"k", d.k}, {"connection_vertices", to_json(d.connection_vertices)}, {"constituents", cons}, {"tree_edges", tree}};
}

inline Json to_json(const IsolationCertificate& c) {
  Json residual = Json::array();
  for (const auto& comp : c.residual) residual.push_back(comp.embedding);
  return {{"k", c.k}, {"set", to_json(c.set)}, {"valid", c.valid}, {"residual_components", residual}};
}

}  // namespace ciso
