/**
 * @file verify.hpp
 * @brief Deduction layer: maximality, Castelnuovo-type dimension bounds, the
 *        p-adic criterion, generic order-sequence deduction and per-curve
 *        theorem reports.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "maxcurves/curves.hpp"
#include "maxcurves/numsg.hpp"

namespace maxcurves::verify {

using curves::CurveModel;
using curves::PlaceCensus;
using curves::PlaceClass;
using numsg::NumericalSemigroup;
using numsg::OrderRole;
using numsg::OrderSequence;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  nlohmann::json witness = nlohmann::json::object();
};

inline CheckResult check_maximal(const PlaceCensus& census, std::int64_t g, std::int64_t q) {
  const std::int64_t bound = curves::maximal_N(q, g);
  const std::int64_t delta = census.total() - bound;
  CheckResult r{"maximal", delta == 0, {}, {{"N", census.total()}, {"hasse_weil_bound", bound}, {"delta", delta}}};
  r.detail = "N = " + std::to_string(census.total()) + ", q^2+1+2gq = " + std::to_string(bound);
  if (delta != 0) r.detail += " (delta " + std::to_string(delta) + ")";
  return r;
}

/// Exact non-negative rational kept in unreduced form so the raw
/// numerator/denominator of the bound can be shown.
struct Rational {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  [[nodiscard]] Rational reduced() const {
    const std::int64_t g = std::gcd(numerator, denominator);
    return g == 0 ? *this : Rational{numerator / g, denominator / g};
  }

  [[nodiscard]] bool is_integer() const { return numerator % denominator == 0; }

  /// value >= n, by cross-multiplication.
  [[nodiscard]] bool at_least(std::int64_t n) const { return numerator >= n * denominator; }

  [[nodiscard]] std::string raw_str() const {
    return std::to_string(numerator) + "/" + std::to_string(denominator);
  }

  [[nodiscard]] std::string str() const {
    const Rational r = reduced();
    return r.denominator == 1 ? std::to_string(r.numerator) : r.raw_str();
  }

  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.numerator) * b.denominator < static_cast<__int128>(b.numerator) * a.denominator;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.numerator) * b.denominator == static_cast<__int128>(b.numerator) * a.denominator;
  }
};

/// Genus bound for a maximal curve with Frobenius dimension r:
/// ((2q-(r-1))^2 - 1) / (8(r-1)) for even r, (2q-(r-1))^2 / (8(r-1)) for odd r.
inline Rational castelnuovo_bound(std::int64_t q, std::int64_t r) {
  if (r < 2) throw std::invalid_argument("castelnuovo_bound needs r >= 2, got " + std::to_string(r));
  const std::int64_t s = 2 * q - (r - 1);
  const std::int64_t num = r % 2 == 0 ? s * s - 1 : s * s;
  return {num, 8 * (r - 1)};
}

/// Frobenius dimensions compatible with genus g: every r >= 2 with
/// g <= castelnuovo_bound(q, r), except that r = 2 forces the Hermitian genus
/// q(q-1)/2. r is at most q+1, the degree of the Frobenius series.
inline std::set<int> deduce_frobenius_dimension(std::int64_t q, std::int64_t g) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  std::set<int> out;
  for (std::int64_t r = 2; r <= q + 1; ++r) {
    if (!castelnuovo_bound(q, r).at_least(g)) continue;
    if (r == 2 && 2 * g != q * (q - 1)) continue;
    out.insert(static_cast<int>(r));
  }
  return out;
}

/// p-adic criterion: every order e < p needs 0, 1, ..., e-1 as orders too.
inline bool padic_admissible(std::span<const std::int64_t> orders, std::int64_t p) {
  for (std::size_t i = 1; i < orders.size(); ++i)
    if (orders[i] <= orders[i - 1]) throw std::invalid_argument("orders must be strictly increasing");
  for (std::int64_t e : orders) {
    if (e >= p) continue;
    for (std::int64_t k = 0; k < e; ++k)
      if (!std::binary_search(orders.begin(), orders.end(), k)) return false;
  }
  return true;
}

inline bool padic_admissible(const OrderSequence& orders, std::int64_t p) {
  return padic_admissible(orders.orders(), p);
}

/// The four possible j_2 values at a rational place when eps_2 = 2, with
/// duplicates collapsed.
inline std::set<std::int64_t> allowed_j2_values(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  return {2, 3, q + 1 - (q + 1) / 2, q + 1 - (2 * (q + 1)) / 3};
}

inline bool validate_j2(std::int64_t j, std::int64_t q) { return allowed_j2_values(q).count(j) != 0; }

/// Whether the j_2 observations cover every class of degree-one places.
enum class Coverage { AllClasses, Partial };

struct EpsilonDeduction {
  OrderSequence epsilon;
  std::int64_t min_j2 = 0;
  std::string rule;
  std::vector<std::pair<std::int64_t, std::string>> rejected;
};

namespace detail {

/// Reason eps_2 = e is impossible, or empty when it is admissible.
inline std::string epsilon2_obstruction(std::int64_t e, std::int64_t q, std::int64_t p, std::int64_t min_j2) {
  if (e != 2 && e != 3) return "eps_2 must be 2 or 3";
  if (e >= q) return "eps_2 must be below eps_3 = q";
  const std::vector<std::int64_t> seq{0, 1, e, q};
  if (!padic_admissible(seq, p)) return "(0,1," + std::to_string(e) + "," + std::to_string(q) + ") violates the p-adic criterion";
  if (e == 3 && p != 3) return "eps_2 = 3 requires p = 3";
  if (e > min_j2) return "exceeds j_2 = " + std::to_string(min_j2) + " observed at a rational place";
  return {};
}

}  // namespace detail

/// Generic order sequence (0, 1, eps_2, q) from j_2 observations at rational
/// places, for Frobenius dimension 3.
///
/// With Coverage::AllClasses the minimum observed j_2 is attained by eps_2 at
/// some rational place, so eps_2 = min and it must be admissible. With
/// Coverage::Partial only eps_2 <= min is known and the value is found by
/// eliminating inadmissible candidates in {2, 3}; an ambiguous outcome throws.
/// Either way the result depends on the observations only through their minimum.
/// Throws std::domain_error naming the offending value.
inline EpsilonDeduction deduce_epsilon_sequence(std::span<const std::int64_t> j2_values, std::int64_t q,
                                                std::int64_t p, Coverage coverage,
                                                int frobenius_dimension = 3) {
  if (frobenius_dimension != 3)
    throw std::domain_error("eps_2 deduction needs Frobenius dimension 3, got " + std::to_string(frobenius_dimension));
  if (j2_values.empty()) throw std::domain_error("no j_2 observations");
  const std::int64_t m = *std::min_element(j2_values.begin(), j2_values.end());
  std::vector<std::pair<std::int64_t, std::string>> rejected;
  std::int64_t eps2 = 0;
  std::string rule;
  if (coverage == Coverage::AllClasses) {
    if (auto why = detail::epsilon2_obstruction(m, q, p, m); !why.empty())
      throw std::domain_error("eps_2 = min j_2 = " + std::to_string(m) + " is impossible: " + why);
    eps2 = m;
    rule = "eps_2 = min j_2 over all classes of rational places";
    for (std::int64_t e : {2, 3})
      if (e < m) rejected.emplace_back(e, "not attained at any rational place");
  } else {
    std::vector<std::int64_t> survivors;
    for (std::int64_t e : {2, 3}) {
      auto why = detail::epsilon2_obstruction(e, q, p, m);
      if (why.empty()) survivors.push_back(e);
      else rejected.emplace_back(e, why);
    }
    if (survivors.size() != 1)
      throw std::domain_error(survivors.empty() ? "no admissible eps_2 <= " + std::to_string(m)
                                                : "eps_2 is not determined by partial observations (min j_2 = " +
                                                      std::to_string(m) + ")");
    eps2 = survivors.front();
    rule = "eps_2 <= min j_2, remaining candidates eliminated";
  }
  return {OrderSequence({0, 1, eps2, q}, OrderRole::GenericEpsilon), m, rule, std::move(rejected)};
}

// ---- reports --------------------------------------------------------------------

struct SemigroupFragment {
  std::string place;
  std::vector<int> generators;
  std::int64_t genus = 0;
  std::int64_t conductor = 0;
  std::vector<std::int64_t> gaps;
  std::vector<std::int64_t> nongaps_to_q1;
  std::string certified_by;
};

inline SemigroupFragment make_fragment(std::string place, const NumericalSemigroup& s, std::int64_t q,
                                       std::string certified_by) {
  return {std::move(place), s.minimal_generators(), s.genus(), s.conductor(), s.gaps(), s.nongaps_upto(q + 1),
          std::move(certified_by)};
}

struct PlaceOrders {
  std::string place_class;
  OrderSequence orders;
  std::string source;

  [[nodiscard]] std::int64_t j2() const { return orders.size() > 2 ? orders[2] : -1; }
};

struct VerificationReport {
  std::string curve;
  std::string family;
  std::vector<std::string> equations;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::int64_t q = 0;
  std::int64_t p = 0;
  gf::FieldPtr field;

  std::int64_t genus = 0;
  std::vector<std::pair<std::string, std::int64_t>> genus_cross_checks;
  PlaceCensus census;
  std::int64_t hasse_weil_bound = 0;

  std::vector<SemigroupFragment> semigroups;
  std::optional<curves::MonomialScan> scan;

  std::optional<int> dimension_from_semigroup;
  std::set<int> dimension_candidates;
  std::optional<int> frobenius_dimension;

  std::vector<PlaceOrders> place_orders;
  std::optional<EpsilonDeduction> epsilon;

  std::vector<CheckResult> checks;
  std::vector<std::string> assumptions;

  [[nodiscard]] bool passing() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  [[nodiscard]] const CheckResult* find_check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void check(std::string name, bool passed, std::string detail, nlohmann::json witness = nlohmann::json::object()) {
    checks.push_back({std::move(name), passed, std::move(detail), std::move(witness)});
  }

  /// Runs one pipeline stage; an exception becomes a failing check.
  void stage(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check("stage:" + name, false, e.what());
    }
  }
};

struct ReportOptions {
  /// Added to the affine-split count before the maximality check (test hook).
  std::int64_t census_delta = 0;
};

namespace detail {

inline std::string seq_str(std::span<const std::int64_t> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

inline void begin_report(VerificationReport& rep, const CurveModel& curve, const ReportOptions& opts) {
  rep.curve = curve.name();
  rep.family = curves::to_string(curve.family);
  rep.equations = curve.equations;
  rep.q = curve.q;
  rep.p = curve.characteristic();
  rep.field = curve.field;
  rep.stage("genus", [&] { rep.genus = curve.genus(); });
  rep.stage("census", [&] {
    rep.census = curves::count_places(curve);
    if (opts.census_delta != 0) {
      rep.census.add(PlaceClass::AffineSplit, opts.census_delta);
      rep.census.note("injected_delta", opts.census_delta);
    }
    rep.hasse_weil_bound = curves::maximal_N(rep.q, rep.genus);
    rep.checks.push_back(check_maximal(rep.census, rep.genus, rep.q));
  });
}

inline void finish_epsilon(VerificationReport& rep, Coverage coverage) {
  rep.stage("epsilon", [&] {
    if (!rep.frobenius_dimension) throw std::domain_error("Frobenius dimension undetermined");
    std::vector<std::int64_t> j2;
    for (const auto& po : rep.place_orders) j2.push_back(po.j2());
    rep.epsilon = deduce_epsilon_sequence(j2, rep.q, rep.p, coverage, *rep.frobenius_dimension);
    rep.check("epsilon_padic_admissible", padic_admissible(rep.epsilon->epsilon, rep.p),
              rep.epsilon->epsilon.str() + " with p = " + std::to_string(rep.p));
    const std::int64_t eps2 = rep.epsilon->epsilon[2];
    if (eps2 == 2) {
      const auto allowed = allowed_j2_values(rep.q);
      for (const auto& po : rep.place_orders)
        rep.check("j2_allowed:" + po.place_class, allowed.count(po.j2()) != 0,
                  "j_2 = " + std::to_string(po.j2()) + " against allowed set for q = " + std::to_string(rep.q),
                  {{"j2", po.j2()}, {"allowed", allowed}});
    }
  });
}

inline void dimension_checks(VerificationReport& rep) {
  rep.stage("dimension", [&] {
    rep.dimension_candidates = deduce_frobenius_dimension(rep.q, rep.genus);
    if (rep.dimension_from_semigroup) {
      const int r = *rep.dimension_from_semigroup;
      rep.check("dimension_within_castelnuovo", rep.dimension_candidates.count(r) != 0,
                "r = " + std::to_string(r) + " from the semigroup; bound allows " +
                    nlohmann::json(rep.dimension_candidates).dump(),
                {{"r", r}, {"candidates", rep.dimension_candidates},
                 {"bound_at_r", castelnuovo_bound(rep.q, r).str()}});
      rep.frobenius_dimension = r;
    } else if (rep.dimension_candidates.size() == 1) {
      rep.frobenius_dimension = *rep.dimension_candidates.begin();
    }
    if (!rep.dimension_from_semigroup && rep.dimension_candidates.size() != 1)
      rep.assumptions.push_back("Frobenius dimension inconclusive from the genus bound");
  });
}

inline VerificationReport gk_report(const CurveModel& curve, const ReportOptions& opts) {
  VerificationReport rep;
  begin_report(rep, curve, opts);
  const std::int64_t qb = curve.qbar, q = curve.q, d = curve.cover_degree;
  rep.parameters = {{"qbar", qb}, {"q", q}, {"d", d}};
  rep.stage("census_shape", [&] {
    rep.check("single_infinite_place", rep.census.count(PlaceClass::Infinite) == 1,
              std::to_string(rep.census.count(PlaceClass::Infinite)) + " infinite place(s)");
  });

  rep.stage("ramified_semigroup", [&] {
    const std::vector<int> gens{static_cast<int>(q - qb * qb + qb), static_cast<int>(q), static_cast<int>(q + 1)};
    const NumericalSemigroup s(gens);
    rep.semigroups.push_back(make_fragment("ramified (e=" + std::to_string(d) + ")", s, q,
                                           "generators from the literature; gap count checked against the genus"));
    rep.genus_cross_checks.emplace_back("ramified_semigroup_gaps", s.genus());
    rep.genus_cross_checks.emplace_back("ramified_semigroup_apery_genus", numsg::apery_genus(gens));
    rep.check("ramified_semigroup_gap_count", s.genus() == rep.genus && numsg::apery_genus(gens) == rep.genus,
              "sieve " + std::to_string(s.genus()) + ", Apery " + std::to_string(numsg::apery_genus(gens)) +
                  ", genus " + std::to_string(rep.genus));
    rep.dimension_from_semigroup = numsg::frobenius_dimension_from_semigroup(s, q);
    rep.check("dimension_is_3", rep.dimension_from_semigroup == 3,
              "r = " + std::to_string(*rep.dimension_from_semigroup) + " from non-gaps <= q+1");
    const auto orders = numsg::rational_point_orders(s, q);
    const OrderSequence expect({0, 1, d, q + 1}, OrderRole::RationalPlace);
    rep.check("ramified_orders", orders == expect, orders.str() + " expected " + expect.str());
    rep.place_orders.push_back({"ramified", orders, "semigroup"});
  });
  rep.assumptions.push_back("ramified-place semigroup generators taken from the literature; only gap count = genus is verified");

  rep.stage("unramified_orders", [&] {
    if (!rep.dimension_from_semigroup) throw std::domain_error("dimension unknown");
    // Non-gap q - qb + 1 at an unramified place from a line meeting P with multiplicity qb.
    const std::vector<std::int64_t> prefix{0, q - qb + 1, q, q + 1};
    if (static_cast<int>(prefix.size()) != *rep.dimension_from_semigroup + 1)
      throw std::domain_error("non-gap prefix size does not match the Frobenius dimension");
    const auto orders = numsg::orders_from_nongaps(prefix, q);
    const OrderSequence expect({0, 1, qb, q + 1}, OrderRole::RationalPlace);
    rep.check("unramified_orders", orders == expect, orders.str() + " expected " + expect.str());
    rep.place_orders.push_back({"unramified", orders, "non-gap q-qbar+1 from an osculating line"});
  });
  rep.assumptions.push_back("non-gap q-qbar+1 at unramified places taken from the literature");
  rep.assumptions.push_back("j_2 is constant on each place class (automorphism group transitive on unramified places)");

  dimension_checks(rep);
  finish_epsilon(rep, Coverage::AllClasses);
  rep.stage("epsilon_claim", [&] {
    if (!rep.epsilon) throw std::domain_error("no epsilon sequence");
    const OrderSequence expect({0, 1, qb, q}, OrderRole::GenericEpsilon);
    rep.check("epsilon_sequence", rep.epsilon->epsilon == expect,
              rep.epsilon->epsilon.str() + " expected " + expect.str());
  });
  return rep;
}

inline VerificationReport gsx49_report(const CurveModel& curve, const ReportOptions& opts) {
  VerificationReport rep;
  begin_report(rep, curve, opts);
  const std::int64_t q = curve.q;
  rep.parameters = {{"q", q}, {"m", curve.m}, {"d", std::gcd(curve.m, q + 1)}};
  rep.check("genus_formula", rep.genus == 7, "g = (q+1-d)(q-1)/(2m) = " + std::to_string(rep.genus));
  rep.stage("census_shape", [&] {
    const std::int64_t k = rep.census.diagnostic("split_t_values").value_or(-1);
    rep.check("split_fibres", 16 * k + 4 == rep.census.total(),
              "16*" + std::to_string(k) + " + 4 = " + std::to_string(16 * k + 4), {{"k", k}});
    rep.check("places_over_minus_one", rep.census.count(PlaceClass::AffineRamified) == 2,
              std::to_string(rep.census.count(PlaceClass::AffineRamified)) + " places over t = -1");
  });
  rep.assumptions.push_back("special fibres t in {0,-1,inf} transcribed from the quotient-of-Hermitian divisor data");

  rep.stage("divisors", [&] {
    const auto table = curves::gsx49_divisor_table();
    const auto rel = table.at("z") * 16 - (table.at("t") + table.at("t+1") * 6);
    rep.check("divisor_relation", rel.empty(), "16(z) - (t) - 6(t+1) = " + rel.str());

    const std::vector<curves::ExponentRange> ranges{{"z", 0, 2 * rep.genus}, {"t+1", -rep.genus, 0}};
    rep.scan = curves::weierstrass_nongaps_from_monomials(table, "PbarInf", ranges, q);
    nlohmann::json witnesses = nlohmann::json::object();
    bool certified = true;
    for (std::int64_t v : {5, 10, 12, 13}) {
      if (!rep.scan->contains(v)) {
        certified = false;
        continue;
      }
      const auto& ex = rep.scan->nongaps.at(v).exponents;
      const std::int64_t i = ex.count("z") ? ex.at("z") : 0;
      const std::int64_t j = ex.count("t+1") ? -ex.at("t+1") : 0;
      certified = certified && 3 * i >= 8 * j && 7 * i - 16 * j == v;
      witnesses[std::to_string(v)] = {{"i", i}, {"j", j}};
    }
    rep.check("monomial_nongaps", certified, "5, 10, 12, 13 certified by z^i (t+1)^-j with 3i >= 8j", witnesses);
    rep.check("six_not_produced", !rep.scan->contains(6), "no monomial has pole order 6 at PbarInf");

    std::vector<int> gens;
    for (std::int64_t v : rep.scan->values())
      if (v > 0) gens.push_back(static_cast<int>(v));
    const NumericalSemigroup s(gens);
    rep.check("scan_semigroup_is_complete", s.genus() == rep.genus,
              "<scan> has " + std::to_string(s.genus()) + " gaps, genus " + std::to_string(rep.genus));
    rep.semigroups.push_back(make_fragment("PbarInf", s, q, "monomial scan; gap count equals genus"));
    const auto low = s.nongaps_upto(8);
    rep.check("nongaps_upto_8", low == std::vector<std::int64_t>{0, 5, 7, 8}, seq_str(low));
    rep.dimension_from_semigroup = numsg::frobenius_dimension_from_semigroup(s, q);
    rep.check("dimension_is_3", rep.dimension_from_semigroup == 3,
              "r = " + std::to_string(*rep.dimension_from_semigroup));
    const auto orders = numsg::rational_point_orders(s, q);
    rep.check("orders_at_PbarInf", orders == OrderSequence({0, 1, 3, 8}, OrderRole::RationalPlace), orders.str());
    const std::int64_t floor_value = (q + 1) - (2 * (q + 1)) / 3;
    rep.check("j2_matches_floor_value", orders[2] == floor_value,
              "j_2 = " + std::to_string(orders[2]) + ", q+1-floor(2(q+1)/3) = " + std::to_string(floor_value));
    rep.place_orders.push_back({"PbarInf", orders, "semigroup"});
  });

  dimension_checks(rep);
  finish_epsilon(rep, Coverage::Partial);
  rep.stage("epsilon_claim", [&] {
    if (!rep.epsilon) throw std::domain_error("no epsilon sequence");
    const OrderSequence expect({0, 1, 2, 7}, OrderRole::GenericEpsilon);
    rep.check("epsilon_sequence", rep.epsilon->epsilon == expect, rep.epsilon->epsilon.str());
  });
  return rep;
}

inline VerificationReport fk_report(const CurveModel& curve, const ReportOptions& opts) {
  VerificationReport rep;
  begin_report(rep, curve, opts);
  const std::int64_t q = curve.q, n = (q + 1) / 3;
  rep.parameters = {{"q", q}, {"n", n}, {"w_code", curve.w ? static_cast<std::int64_t>(curve.w->code()) : -1}};
  rep.stage("genus_cross_check", [&] {
    const std::int64_t base = curves::genus_plane_smooth(n);
    const std::int64_t hurwitz = 1 + 3 * (base - 1) + 3 * n;
    rep.genus_cross_checks.emplace_back("base_plane_curve_genus", base);
    rep.genus_cross_checks.emplace_back("riemann_hurwitz", hurwitz);
    rep.check("genus_formula", hurwitz == rep.genus && 6 * rep.genus == q * q - q + 4,
              "1+3(g(F)-1)+(q+1) = " + std::to_string(hurwitz) + ", (q^2-q+4)/6 = " + std::to_string(rep.genus));
    const std::int64_t base_places = rep.census.diagnostic("base_places").value_or(-1);
    rep.check("base_curve_maximal", base_places == curves::maximal_N(q, base),
              "base curve has " + std::to_string(base_places) + " rational places");
  });
  rep.stage("census_shape", [&] {
    const std::int64_t viol = rep.census.diagnostic("splitting_violations").value_or(-1);
    rep.check("splitting_everywhere", viol == 0,
              std::to_string(viol) + " violations over " +
                  std::to_string(rep.census.diagnostic("generic_base_points").value_or(0)) + " points");
    const std::int64_t ramified = rep.census.count(PlaceClass::CoverZero) + rep.census.count(PlaceClass::Infinite);
    rep.check("ramified_places", ramified == q + 1, std::to_string(ramified) + " fully ramified places");
  });

  dimension_checks(rep);
  rep.stage("dimension_claim", [&] {
    rep.check("dimension_is_3", rep.dimension_candidates == std::set<int>{3},
              "candidates " + nlohmann::json(rep.dimension_candidates).dump());
  });

  rep.stage("distinguished_place", [&] {
    const auto table = curves::fk_divisor_table(curve);
    const std::string target = "P(0,beta0)";
    const auto quotient = table.lift(curves::divisor_of_monomial(table, {{"x", 1}, {"y-beta0", -1}}));
    const std::int64_t pole = -quotient.valuation(target);
    rep.check("pole_order_x_over_y_minus_beta", pole == q - 2 && quotient.effective_away_from(target),
              "v(x/(y-beta)) = " + std::to_string(-pole) + " at the place over P(0,beta0)",
              {{"pole_order", pole}, {"base_pole_part", curves::divisor_of_monomial(table, {{"x", 1}, {"y-beta0", -1}}).pole_part().str()}});

    const std::vector<curves::ExponentRange> ranges{{"x", 0, 2 * rep.genus}, {"y-beta0", -rep.genus, 0}};
    rep.scan = curves::weierstrass_nongaps_from_monomials(table, target, ranges, q);
    std::vector<int> gens;
    for (std::int64_t v : rep.scan->values())
      if (v > 0) gens.push_back(static_cast<int>(v));
    const NumericalSemigroup s(gens);
    rep.semigroups.push_back(make_fragment(
        "P(0,beta0)", s, q,
        s.genus() == rep.genus ? "monomial scan; gap count equals genus" : "monomial scan; lower bound only"));
    if (!rep.frobenius_dimension) throw std::domain_error("Frobenius dimension undetermined");
    std::vector<std::int64_t> prefix;
    for (std::int64_t v : rep.scan->values())
      if (v <= q + 1) prefix.push_back(v);
    const bool determined = static_cast<int>(prefix.size()) == *rep.frobenius_dimension + 1;
    rep.check("nongap_prefix_determined", determined,
              "non-gaps <= q+1: " + seq_str(prefix) + ", r = " + std::to_string(*rep.frobenius_dimension));
    if (!determined) return;
    const auto orders = numsg::orders_from_nongaps(prefix, q);
    rep.check("orders_at_distinguished_place", orders == OrderSequence({0, 1, 3, q + 1}, OrderRole::RationalPlace),
              orders.str());
    rep.place_orders.push_back({"P(0,beta0)", orders, "monomial scan + Frobenius dimension"});
  });

  finish_epsilon(rep, Coverage::Partial);
  rep.stage("epsilon_claim", [&] {
    if (!rep.epsilon) throw std::domain_error("no epsilon sequence");
    const OrderSequence expect({0, 1, 2, q}, OrderRole::GenericEpsilon);
    rep.check("epsilon_sequence", rep.epsilon->epsilon == expect, rep.epsilon->epsilon.str());
  });
  return rep;
}

}  // namespace detail

/// Full pipeline for one curve. Stage failures are recorded as failing checks.
inline VerificationReport theorem_report(const CurveModel& curve, const ReportOptions& opts = {}) {
  switch (curve.family) {
    case curves::Family::GK: return detail::gk_report(curve, opts);
    case curves::Family::GSX49: return detail::gsx49_report(curve, opts);
    case curves::Family::FK: return detail::fk_report(curve, opts);
  }
  throw std::logic_error("unknown family");
}

}  // namespace maxcurves::verify
