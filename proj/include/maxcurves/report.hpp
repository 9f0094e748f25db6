/**
 * @file report.hpp
 * @brief JSON and text renderings of verification reports and query results.
 *
 * Every JSON document carries `schema_version` (bumped only for
 * incompatible changes; fields are only ever added) and `tool_version`.
 * The layout is documented in docs/report_schema.md.
 */
#pragma once

#include <cstdint>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "maxcurves/curves.hpp"
#include "maxcurves/gf.hpp"
#include "maxcurves/numsg.hpp"
#include "maxcurves/verify.hpp"

namespace maxcurves::report {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";
/// Gap lists longer than this are elided from reports.
inline constexpr std::size_t kMaxListedGaps = 64;

using nlohmann::json;

inline json header(const std::string& kind) {
  return {{"schema_version", kSchemaVersion}, {"tool", "maxcurves"}, {"tool_version", kToolVersion}, {"kind", kind}};
}

inline json field_fragment(const gf::Field& f) {
  const auto mod = f.modulus();
  return {{"p", f.characteristic()},
          {"k", f.degree()},
          {"order", f.order()},
          {"modulus", std::vector<std::uint32_t>(mod.begin(), mod.end())},
          {"generator", f.generator().coefficients()}};
}

inline json gaps_json(const std::vector<std::int64_t>& gaps) {
  if (gaps.size() > kMaxListedGaps) return nullptr;
  return gaps;
}

inline json semigroup_fragment(const numsg::NumericalSemigroup& s) {
  return {{"generators", s.generators()},
          {"minimal_generators", s.minimal_generators()},
          {"genus", s.genus()},
          {"conductor", s.conductor()},
          {"frobenius_number", s.frobenius_number()},
          {"gaps", gaps_json(s.gaps())},
          {"gaps_elided", s.gaps().size() > kMaxListedGaps}};
}

inline json semigroup_fragment(const verify::SemigroupFragment& s) {
  return {{"place", s.place},
          {"generators", s.generators},
          {"genus", s.genus},
          {"conductor", s.conductor},
          {"gaps", gaps_json(s.gaps)},
          {"gaps_elided", s.gaps.size() > kMaxListedGaps},
          {"nongaps_upto_q_plus_1", s.nongaps_to_q1},
          {"certified_by", s.certified_by}};
}

inline json census_fragment(const curves::PlaceCensus& c) {
  json by_class = json::object();
  for (auto cls : curves::kPlaceClasses) by_class[curves::to_string(cls)] = c.count(cls);
  json diag = json::object();
  for (const auto& [k, v] : c.diagnostics) diag[k] = v;
  json samples = json::array();
  for (const auto& p : c.samples)
    samples.push_back({{"id", p.id},
                       {"class", curves::to_string(p.cls)},
                       {"coordinates", p.coordinates},
                       {"ramification", p.ramification},
                       {"degree", p.degree}});
  return {{"total", c.total()}, {"by_class", by_class}, {"diagnostics", diag}, {"samples", samples}};
}

inline json check_fragment(const verify::CheckResult& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"witness", c.witness}};
}

inline json to_json(const verify::VerificationReport& r) {
  json doc = header("verify");
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  doc["curve"] = {{"name", r.curve}, {"family", r.family}, {"equations", r.equations}, {"parameters", params}};
  doc["q"] = r.q;
  doc["p"] = r.p;
  doc["field"] = r.field ? field_fragment(*r.field) : json(nullptr);
  json cross = json::object();
  for (const auto& [k, v] : r.genus_cross_checks) cross[k] = v;
  doc["genus"] = {{"value", r.genus}, {"cross_checks", cross}};
  doc["census"] = census_fragment(r.census);
  doc["census"]["hasse_weil_bound"] = r.hasse_weil_bound;

  doc["semigroups"] = json::array();
  for (const auto& s : r.semigroups) doc["semigroups"].push_back(semigroup_fragment(s));

  if (r.scan) {
    json nongaps = json::array();
    for (const auto& [v, w] : r.scan->nongaps)
      nongaps.push_back({{"value", v}, {"source", w.source}, {"exponents", w.exponents}});
    doc["monomial_scan"] = {{"target", r.scan->target}, {"nongaps", nongaps}};
  } else {
    doc["monomial_scan"] = nullptr;
  }

  doc["frobenius_dimension"] = {
      {"value", r.frobenius_dimension ? json(*r.frobenius_dimension) : json(nullptr)},
      {"from_semigroup", r.dimension_from_semigroup ? json(*r.dimension_from_semigroup) : json(nullptr)},
      {"castelnuovo_candidates", r.dimension_candidates},
      {"conclusive", r.dimension_candidates.size() == 1}};

  doc["order_sequences"] = json::array();
  for (const auto& po : r.place_orders)
    doc["order_sequences"].push_back({{"place_class", po.place_class},
                                      {"role", numsg::to_string(po.orders.role())},
                                      {"orders", po.orders.orders()},
                                      {"j2", po.j2()},
                                      {"source", po.source}});

  if (r.epsilon) {
    json rejected = json::array();
    for (const auto& [e, why] : r.epsilon->rejected) rejected.push_back({{"eps2", e}, {"reason", why}});
    doc["epsilon"] = {{"orders", r.epsilon->epsilon.orders()},
                      {"rule", r.epsilon->rule},
                      {"min_j2", r.epsilon->min_j2},
                      {"rejected", rejected}};
  } else {
    doc["epsilon"] = nullptr;
  }

  doc["checks"] = json::array();
  for (const auto& c : r.checks) doc["checks"].push_back(check_fragment(c));
  doc["assumptions"] = r.assumptions;
  doc["passing"] = r.passing();
  return doc;
}

namespace detail {
inline std::string seq(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}
}  // namespace detail

inline void write_text(std::ostream& os, const verify::VerificationReport& r, int verbosity = 0) {
  os << r.curve << "  over " << (r.field ? r.field->name() : "?") << "  (q = " << r.q << ", p = " << r.p << ")\n";
  for (const auto& e : r.equations) os << "  " << e << "\n";
  os << "genus: " << r.genus << "\n";
  for (const auto& [k, v] : r.genus_cross_checks) os << "  " << k << ": " << v << "\n";
  os << "degree-one places: " << r.census.total() << "  (Hasse-Weil bound " << r.hasse_weil_bound << ")\n";
  for (auto cls : curves::kPlaceClasses)
    if (r.census.count(cls) != 0) os << "  " << curves::to_string(cls) << ": " << r.census.count(cls) << "\n";
  if (verbosity > 0) {
    for (const auto& [k, v] : r.census.diagnostics) os << "  [" << k << "] " << v << "\n";
    for (const auto& p : r.census.samples) os << "  sample " << curves::to_string(p.cls) << " " << p.id << " e=" << p.ramification << "\n";
  }
  for (const auto& s : r.semigroups) {
    os << "semigroup at " << s.place << ": <";
    for (std::size_t i = 0; i < s.generators.size(); ++i) os << (i ? "," : "") << s.generators[i];
    os << ">  genus " << s.genus << ", conductor " << s.conductor << ", non-gaps <= q+1: "
       << detail::seq(s.nongaps_to_q1) << "  [" << s.certified_by << "]\n";
  }
  if (r.scan && verbosity > 0) {
    os << "monomial scan at " << r.scan->target << ":\n";
    for (const auto& [v, w] : r.scan->nongaps) {
      os << "  " << v << " <- " << w.source;
      for (const auto& [sym, e] : w.exponents) os << " (" << sym << ")^" << e;
      os << "\n";
    }
  }
  os << "Frobenius dimension: " << (r.frobenius_dimension ? std::to_string(*r.frobenius_dimension) : "?")
     << "  (Castelnuovo candidates " << nlohmann::json(r.dimension_candidates).dump() << ")\n";
  for (const auto& po : r.place_orders)
    os << "orders at " << po.place_class << ": " << po.orders.str() << "\n";
  if (r.epsilon) os << "D-order sequence: " << r.epsilon->epsilon.str() << "  (" << r.epsilon->rule << ")\n";
  os << "checks:\n";
  for (const auto& c : r.checks) os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
  if (verbosity > 0)
    for (const auto& a : r.assumptions) os << "  assumption: " << a << "\n";
  os << (r.passing() ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
}

inline std::string to_text(const verify::VerificationReport& r, int verbosity = 0) {
  std::ostringstream os;
  write_text(os, r, verbosity);
  return os.str();
}

}  // namespace maxcurves::report
