/**
 * @file curves.hpp
 * @brief Curve catalog, degree-one place censuses, genus formulas and
 *        divisor arithmetic on fixed principal-divisor tables.
 *
 * Three families are supported:
 *  - GK:    y^{qb+1} = x^{qb} + x,  z^{qb^2-qb+1} = y (x^{qb^2-1} - 1)/(x^{qb-1} + 1)   over F_{qb^6}
 *  - GSX49: z^16 = t (t+1)^6                                                     over F_49
 *  - FK:    y^{(q+1)/3} + x^{(q+1)/3} + 1 = 0,  z^3 = w x y,  w^{(q+1)/3} = 3      over F_{q^2}
 *
 * Censuses are exact enumerations over the base field; every count is an
 * integer sum, so the order of enumeration does not matter.
 */
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "maxcurves/gf.hpp"

namespace maxcurves::curves {

using gf::Element;
using gf::Field;
using gf::FieldPtr;

// ---- integer helpers ----------------------------------------------------------

/// (p, e) with n = p^e, or nullopt when n is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  std::uint32_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), e};
}

inline std::int64_t ipow(std::int64_t base, unsigned e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

/// Hasse–Weil upper bound q^2 + 1 + 2gq.
inline std::int64_t maximal_N(std::int64_t q, std::int64_t g) {
  if (q < 2 || g < 0) throw std::invalid_argument("maximal_N needs q >= 2 and g >= 0");
  return q * q + 1 + 2 * g * q;
}

// ---- genus formulas -----------------------------------------------------------

inline std::int64_t genus_gk(std::int64_t qbar) {
  if (qbar < 2) throw std::invalid_argument("GK needs qbar >= 2");
  const std::int64_t twice = (qbar * qbar * qbar + 1) * (qbar * qbar - 2);
  if (twice % 2 != 0) throw std::invalid_argument("GK genus is not an integer");
  return twice / 2 + 1;
}

/// Genus of y^{(q^2-1)/m} = x (x+1)^{q-1}: (q+1-d)(q-1)/(2m), d = gcd(m, q+1).
inline std::int64_t genus_gsx(std::int64_t q, std::int64_t m) {
  if (q < 2 || m < 1 || (q * q - 1) % m != 0) throw std::invalid_argument("GSX needs m | q^2 - 1");
  const std::int64_t d = std::gcd(m, q + 1);
  const std::int64_t num = (q + 1 - d) * (q - 1);
  if (num % (2 * m) != 0) throw std::invalid_argument("GSX genus is not an integer");
  return num / (2 * m);
}

inline std::int64_t genus_plane_smooth(std::int64_t deg) {
  if (deg < 1) throw std::invalid_argument("plane curve degree must be positive");
  return (deg - 1) * (deg - 2) / 2;
}

inline void require_fk_parameter(std::int64_t q) {
  if (q < 2 || q % 2 == 0 || q % 3 != 2 || !prime_power(q))
    throw std::invalid_argument("FK needs an odd prime power q with q = 2 mod 3, got " + std::to_string(q));
}

/// (q^2 - q + 4)/6, cross-checked against Riemann–Hurwitz for the degree-3
/// Kummer cover of the smooth plane curve of degree (q+1)/3.
inline std::int64_t genus_fk(std::int64_t q) {
  require_fk_parameter(q);
  const std::int64_t base = genus_plane_smooth((q + 1) / 3);
  const std::int64_t hurwitz = 1 + 3 * (base - 1) + (q + 1);
  const std::int64_t num = q * q - q + 4;
  if (num % 6 != 0) throw std::invalid_argument("FK genus is not an integer");
  if (hurwitz != num / 6)
    throw std::logic_error("Riemann-Hurwitz genus " + std::to_string(hurwitz) + " disagrees with closed form " +
                           std::to_string(num / 6));
  return num / 6;
}

// ---- curve models -------------------------------------------------------------

enum class Family { GK, GSX49, FK };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::GK: return "GK";
    case Family::GSX49: return "GSX49";
    case Family::FK: return "FK";
  }
  return "?";
}

struct CurveModel {
  Family family = Family::GK;
  std::int64_t qbar = 0;   ///< GK only
  std::int64_t q = 0;      ///< the curve is maximal over F_{q^2}
  std::int64_t m = 0;      ///< GSX only
  std::int64_t cover_degree = 0;  ///< GK: qbar^2-qbar+1, GSX49: 16, FK: 3
  FieldPtr field;
  std::vector<std::string> equations;
  std::optional<Element> w;  ///< FK only

  [[nodiscard]] std::uint32_t characteristic() const { return field->characteristic(); }

  [[nodiscard]] std::string name() const {
    switch (family) {
      case Family::GK: return "GK(qbar=" + std::to_string(qbar) + ")";
      case Family::GSX49: return "GSX49(q=7,m=3)";
      case Family::FK: return "FK(q=" + std::to_string(q) + ")";
    }
    return "?";
  }

  [[nodiscard]] std::int64_t genus() const {
    switch (family) {
      case Family::GK: return genus_gk(qbar);
      case Family::GSX49: return genus_gsx(q, m);
      case Family::FK: return genus_fk(q);
    }
    return -1;
  }
};

inline CurveModel make_gk(std::int64_t qbar) {
  const auto pp = prime_power(qbar);
  if (qbar < 2 || !pp) throw std::invalid_argument("GK needs a prime power qbar >= 2, got " + std::to_string(qbar));
  if (ipow(qbar, 6) > gf::kMaxFieldOrder)
    throw std::invalid_argument("GK base field F_{qbar^6} exceeds the field cap for qbar=" + std::to_string(qbar));
  CurveModel c;
  c.family = Family::GK;
  c.qbar = qbar;
  c.q = qbar * qbar * qbar;
  c.cover_degree = qbar * qbar - qbar + 1;
  if ((c.q + 1) % c.cover_degree != 0) throw std::logic_error("qbar^2-qbar+1 must divide qbar^3+1");
  c.field = gf::make_field(pp->first, 6 * pp->second);
  c.equations = {"y^(qbar+1) = x^qbar + x", "u = y*(x^(qbar^2-1) - 1)/(x^(qbar-1) + 1)",
                 "z^(qbar^2-qbar+1) = u"};
  return c;
}

inline CurveModel make_gsx49() {
  CurveModel c;
  c.family = Family::GSX49;
  c.q = 7;
  c.m = 3;
  c.cover_degree = 16;
  c.field = gf::make_field(7, 2);
  c.equations = {"z^16 = t*(t+1)^6"};
  return c;
}

inline CurveModel make_fk(std::int64_t q) {
  require_fk_parameter(q);
  if (q * q > gf::kMaxFieldOrder)
    throw std::invalid_argument("FK base field F_{q^2} exceeds the field cap for q=" + std::to_string(q));
  const auto pp = prime_power(q);
  CurveModel c;
  c.family = Family::FK;
  c.q = q;
  c.cover_degree = 3;
  c.field = gf::make_field(pp->first, 2 * pp->second);
  const std::int64_t n = (q + 1) / 3;
  const Element three = c.field->from_int(3);
  for (const Element& e : c.field->elements())
    if (e.pow(n) == three) {
      c.w = e;
      break;
    }
  if (!c.w) throw std::logic_error("no w with w^((q+1)/3) = 3");
  c.equations = {"y^((q+1)/3) + x^((q+1)/3) + 1 = 0", "u = w*x*y, w^((q+1)/3) = 3", "z^3 = u"};
  return c;
}

// ---- places and censuses ------------------------------------------------------

enum class PlaceClass { AffineSplit, AffineRamified, CoverZero, Infinite };

inline constexpr std::array kPlaceClasses{PlaceClass::AffineSplit, PlaceClass::AffineRamified,
                                          PlaceClass::CoverZero, PlaceClass::Infinite};

inline const char* to_string(PlaceClass c) {
  switch (c) {
    case PlaceClass::AffineSplit: return "affine-split";
    case PlaceClass::AffineRamified: return "affine-ramified";
    case PlaceClass::CoverZero: return "zero-of-cover-function";
    case PlaceClass::Infinite: return "infinite";
  }
  return "?";
}

/// A degree-one place. Coordinates are packed field codes (base coordinates,
/// then the cover coordinate when the fibre is unramified).
struct Place {
  std::string id;
  PlaceClass cls = PlaceClass::AffineSplit;
  std::vector<std::uint32_t> coordinates;
  std::int64_t ramification = 1;
  int degree = 1;
};

struct PlaceCensus {
  static constexpr std::size_t kSamplesPerClass = 3;

  std::array<std::int64_t, kPlaceClasses.size()> counts{};
  std::vector<Place> samples;
  std::vector<std::pair<std::string, std::int64_t>> diagnostics;

  [[nodiscard]] std::int64_t count(PlaceClass c) const { return counts[static_cast<std::size_t>(c)]; }

  [[nodiscard]] std::int64_t total() const {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  }

  void add(PlaceClass c, std::int64_t n) { counts[static_cast<std::size_t>(c)] += n; }

  void sample(Place place) {
    std::size_t seen = 0;
    for (const auto& s : samples) seen += s.cls == place.cls;
    if (seen < kSamplesPerClass) samples.push_back(std::move(place));
  }

  void note(std::string key, std::int64_t value) { diagnostics.emplace_back(std::move(key), value); }

  [[nodiscard]] std::optional<std::int64_t> diagnostic(const std::string& key) const {
    for (const auto& [k, v] : diagnostics)
      if (k == key) return v;
    return std::nullopt;
  }
};

/// All (x0, y0) in F x F with y0^{qbar+1} = x0^{qbar} + x0.
inline std::vector<std::pair<Element, Element>> hermitian_affine_points(std::int64_t qbar, const Field& f) {
  const auto pp = prime_power(qbar);
  if (!pp || pp->first != f.characteristic())
    throw std::invalid_argument("qbar must be a power of the field characteristic");
  std::vector<std::pair<Element, Element>> points;
  for (const Element& x : f.elements())
    for (const Element& y : gf::nth_roots(x.pow(qbar) + x, static_cast<std::uint64_t>(qbar + 1)))
      points.emplace_back(x, y);
  return points;
}

namespace detail {
inline std::string coord_id(std::initializer_list<std::pair<const char*, std::uint32_t>> coords) {
  std::string out = "(";
  bool first = true;
  for (const auto& [name, code] : coords) {
    if (!first) out += ',';
    first = false;
    out += name;
    out += '=';
    out += std::to_string(code);
  }
  return out + ")";
}
}  // namespace detail

/// GK census. For an affine Hermitian point with num = x^{qb^2-1} - 1 and
/// den = x^{qb-1} + 1:
///   den != 0, y*num != 0  -> u = y*num/den != 0, unramified, |d-th roots of u| places
///   den != 0, y*num == 0  -> simple zero of u, one fully ramified place
///   den == 0              -> y = num = 0 and v(u) = 1 + (qb+1) - (qb+1) = 1, one fully ramified place
/// plus the single common pole P0 of x, y, z.
inline PlaceCensus count_gk_places(const CurveModel& curve) {
  if (curve.family != Family::GK) throw std::invalid_argument("not a GK curve");
  const Field& f = *curve.field;
  const std::int64_t qb = curve.qbar;
  const std::int64_t d = curve.cover_degree;
  PlaceCensus census;
  std::int64_t hermitian = 0, split = 0, inert = 0, case_a = 0, case_b = 0, case_c = 0;
  for (const auto& [x, y] : hermitian_affine_points(qb, f)) {
    ++hermitian;
    const Element num = x.pow(qb * qb - 1) - f.one();
    const Element den = x.pow(qb - 1) + f.one();
    if (den.is_zero()) {
      if (!y.is_zero() || !num.is_zero()) throw std::logic_error("den = 0 without y = num = 0");
      ++case_c;
      census.add(PlaceClass::AffineRamified, 1);
      census.sample({detail::coord_id({{"x", x.code()}, {"y", y.code()}}), PlaceClass::AffineRamified,
                     {x.code(), y.code()}, d});
      continue;
    }
    const Element u = y * num / den;
    if (u.is_zero()) {
      ++case_b;
      census.add(PlaceClass::CoverZero, 1);
      census.sample({detail::coord_id({{"x", x.code()}, {"y", y.code()}}), PlaceClass::CoverZero,
                     {x.code(), y.code()}, d});
      continue;
    }
    ++case_a;
    const auto roots = gf::nth_roots(u, static_cast<std::uint64_t>(d));
    if (roots.empty()) {
      ++inert;
      continue;
    }
    ++split;
    census.add(PlaceClass::AffineSplit, static_cast<std::int64_t>(roots.size()));
    census.sample({detail::coord_id({{"x", x.code()}, {"y", y.code()}, {"z", roots.front().code()}}),
                   PlaceClass::AffineSplit, {x.code(), y.code(), roots.front().code()}, 1});
  }
  census.add(PlaceClass::Infinite, 1);
  census.sample({"P0", PlaceClass::Infinite, {}, d});
  census.note("hermitian_affine_points", hermitian);
  census.note("unramified_points", case_a);
  census.note("unramified_split_fibres", split);
  census.note("unramified_inert_fibres", inert);
  census.note("zero_of_u_points", case_b);
  census.note("den_zero_points", case_c);
  return census;
}

inline PlaceCensus count_gk_places(std::int64_t qbar) { return count_gk_places(make_gk(qbar)); }

/// GSX49 census. Affine places over t0 not in {0, -1} come from 16th roots of
/// t0 (t0+1)^6; the special fibres contribute P0 (t=0), P1, P2 (t=-1) and P_inf.
inline PlaceCensus count_gsx49_places(const CurveModel& curve) {
  if (curve.family != Family::GSX49) throw std::invalid_argument("not the GSX49 curve");
  const Field& f = *curve.field;
  const Element minus_one = f.from_int(-1);
  PlaceCensus census;
  std::int64_t split = 0, inert = 0;
  for (const Element& t : f.elements()) {
    if (t.is_zero() || t == minus_one) continue;
    const auto roots = gf::nth_roots(t * (t + f.one()).pow(6), 16);
    if (roots.empty()) {
      ++inert;
      continue;
    }
    ++split;
    census.add(PlaceClass::AffineSplit, static_cast<std::int64_t>(roots.size()));
    census.sample({detail::coord_id({{"t", t.code()}, {"z", roots.front().code()}}), PlaceClass::AffineSplit,
                   {t.code(), roots.front().code()}, 1});
  }
  census.add(PlaceClass::CoverZero, 1);
  census.sample({"Pbar0", PlaceClass::CoverZero, {0}, 16});
  census.add(PlaceClass::AffineRamified, 2);
  census.sample({"Pbar1", PlaceClass::AffineRamified, {minus_one.code()}, 8});
  census.sample({"Pbar2", PlaceClass::AffineRamified, {minus_one.code()}, 8});
  census.add(PlaceClass::Infinite, 1);
  census.sample({"PbarInf", PlaceClass::Infinite, {}, 16});
  census.note("split_t_values", split);
  census.note("inert_t_values", inert);
  return census;
}

inline PlaceCensus count_gsx49_places() { return count_gsx49_places(make_gsx49()); }

/// FK census. Base places P_{a,b} with ab = 0 and the (q+1)/3 poles are fully
/// ramified; every other base point must split into exactly 3 places, which
/// is re-verified at each point (3(ab)^{(q+1)/3} in F_q, and three cube roots
/// of w a b). Violations are counted, not thrown.
inline PlaceCensus count_fk_places(const CurveModel& curve) {
  if (curve.family != Family::FK) throw std::invalid_argument("not an FK curve");
  const Field& f = *curve.field;
  const std::int64_t q = curve.q;
  const std::int64_t n = (q + 1) / 3;
  const Element w = *curve.w;
  const Element three = f.from_int(3);
  const std::uint32_t half = f.degree() / 2;
  PlaceCensus census;
  std::int64_t base_affine = 0, generic = 0, violations = 0;
  for (const Element& a : f.elements()) {
    for (const Element& b : gf::nth_roots(-(a.pow(n) + f.one()), static_cast<std::uint64_t>(n))) {
      ++base_affine;
      const Element ab = a * b;
      if (ab.is_zero()) {
        census.add(PlaceClass::CoverZero, 1);
        census.sample({detail::coord_id({{"x", a.code()}, {"y", b.code()}}), PlaceClass::CoverZero,
                       {a.code(), b.code()}, 3});
        continue;
      }
      ++generic;
      const auto roots = gf::nth_roots(w * ab, 3);
      if (!gf::is_in_subfield(three * ab.pow(n), half) || roots.size() != 3) ++violations;
      census.add(PlaceClass::AffineSplit, static_cast<std::int64_t>(roots.size()));
      if (!roots.empty())
        census.sample({detail::coord_id({{"x", a.code()}, {"y", b.code()}, {"z", roots.front().code()}}),
                       PlaceClass::AffineSplit, {a.code(), b.code(), roots.front().code()}, 1});
    }
  }
  census.add(PlaceClass::Infinite, n);
  for (std::int64_t i = 0; i < n; ++i)
    census.sample({"Pinf" + std::to_string(i), PlaceClass::Infinite, {}, 3});
  census.note("base_affine_points", base_affine);
  census.note("base_places", base_affine + n);
  census.note("generic_base_points", generic);
  census.note("splitting_violations", violations);
  return census;
}

inline PlaceCensus count_fk_places(std::int64_t q) { return count_fk_places(make_fk(q)); }

inline PlaceCensus count_places(const CurveModel& curve) {
  switch (curve.family) {
    case Family::GK: return count_gk_places(curve);
    case Family::GSX49: return count_gsx49_places(curve);
    case Family::FK: return count_fk_places(curve);
  }
  throw std::logic_error("unknown family");
}

// ---- divisors -----------------------------------------------------------------

/// Finite formal sum of degree-one places; zero multiplicities are never stored.
class Divisor {
 public:
  Divisor() = default;
  Divisor(std::initializer_list<std::pair<const std::string, std::int64_t>> terms) {
    for (const auto& [place, mult] : terms) add(place, mult);
  }

  void add(const std::string& place, std::int64_t mult) {
    if (mult == 0) return;
    auto it = terms_.find(place);
    if (it == terms_.end()) {
      terms_.emplace(place, mult);
    } else if ((it->second += mult) == 0) {
      terms_.erase(it);
    }
  }

  Divisor& operator+=(const Divisor& other) {
    for (const auto& [place, mult] : other.terms_) add(place, mult);
    return *this;
  }

  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a += b * -1; }

  friend Divisor operator*(const Divisor& a, std::int64_t k) {
    Divisor out;
    for (const auto& [place, mult] : a.terms_) out.add(place, mult * k);
    return out;
  }
  friend Divisor operator*(std::int64_t k, const Divisor& a) { return a * k; }

  friend bool operator==(const Divisor&, const Divisor&) = default;

  [[nodiscard]] std::int64_t valuation(const std::string& place) const {
    auto it = terms_.find(place);
    return it == terms_.end() ? 0 : it->second;
  }

  [[nodiscard]] std::int64_t degree() const {
    std::int64_t d = 0;
    for (const auto& [place, mult] : terms_) d += mult;
    return d;
  }

  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] const std::map<std::string, std::int64_t>& terms() const { return terms_; }

  /// (f)_inf for a principal divisor (f): the negated negative part.
  [[nodiscard]] Divisor pole_part() const {
    Divisor out;
    for (const auto& [place, mult] : terms_)
      if (mult < 0) out.add(place, -mult);
    return out;
  }

  [[nodiscard]] Divisor zero_part() const {
    Divisor out;
    for (const auto& [place, mult] : terms_)
      if (mult > 0) out.add(place, mult);
    return out;
  }

  [[nodiscard]] bool effective_away_from(const std::string& place) const {
    for (const auto& [p, mult] : terms_)
      if (p != place && mult < 0) return false;
    return true;
  }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [place, mult] : terms_) {
      if (!out.empty()) out += mult < 0 ? " - " : " + ";
      else if (mult < 0) out += "-";
      const std::int64_t a = mult < 0 ? -mult : mult;
      if (a != 1) out += std::to_string(a);
      out += place;
    }
    return out;
  }

 private:
  std::map<std::string, std::int64_t> terms_;
};

/// Principal divisors of named functions on one curve. When the divisors live
/// on a base curve under a cover, `ramification` holds e(P'|P) for the places
/// that ramify; lift() pulls divisors back to the cover (places with e = 1 are
/// not split apart, which is all the Weierstrass scan needs at a totally
/// ramified target).
struct PrincipalDivisorTable {
  std::string curve;
  std::map<std::string, Divisor> functions;
  std::map<std::string, std::int64_t> ramification;

  [[nodiscard]] const Divisor& at(const std::string& symbol) const {
    auto it = functions.find(symbol);
    if (it == functions.end()) throw std::invalid_argument("unknown function symbol '" + symbol + "'");
    return it->second;
  }

  [[nodiscard]] std::int64_t ramification_at(const std::string& place) const {
    auto it = ramification.find(place);
    return it == ramification.end() ? 1 : it->second;
  }

  [[nodiscard]] Divisor lift(const Divisor& d) const {
    Divisor out;
    for (const auto& [place, mult] : d.terms()) out.add(place, mult * ramification_at(place));
    return out;
  }

  void validate() const {
    for (const auto& [symbol, div] : functions)
      if (div.degree() != 0)
        throw std::logic_error("principal divisor of " + symbol + " has degree " + std::to_string(div.degree()));
  }
};

/// Divisors of z, t and t+1 on z^16 = t (t+1)^6 over F_49. The place data
/// comes from the cyclic cubic quotient of the Hermitian curve y^8 = x^7 + x.
inline PrincipalDivisorTable gsx49_divisor_table() {
  PrincipalDivisorTable table;
  table.curve = "GSX49(q=7,m=3)";
  table.functions["z"] = Divisor{{"Pbar1", 3}, {"Pbar2", 3}, {"Pbar0", 1}, {"PbarInf", -7}};
  table.functions["t+1"] = Divisor{{"Pbar1", 8}, {"Pbar2", 8}, {"PbarInf", -16}};
  table.functions["t"] = Divisor{{"Pbar0", 16}, {"PbarInf", -16}};
  table.validate();
  return table;
}

/// Base-curve divisors for FK: x, y and y - beta_i for every beta_i with
/// beta_i^{(q+1)/3} = -1 (sorted by code; beta_0 is the distinguished one).
/// All places involved are fully ramified (e = 3) in the Kummer cover.
inline PrincipalDivisorTable fk_divisor_table(const CurveModel& curve) {
  if (curve.family != Family::FK) throw std::invalid_argument("not an FK curve");
  const Field& f = *curve.field;
  const std::int64_t n = (curve.q + 1) / 3;
  const auto betas = gf::nth_roots(f.from_int(-1), static_cast<std::uint64_t>(n));
  if (static_cast<std::int64_t>(betas.size()) != n) throw std::logic_error("-1 must have (q+1)/3 roots");
  PrincipalDivisorTable table;
  table.curve = curve.name();
  Divisor poles;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::string inf = "Pinf" + std::to_string(i);
    poles.add(inf, 1);
    table.ramification[inf] = 3;
  }
  Divisor x_div = poles * -1, y_div = poles * -1;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const std::string zx = "P(0,beta" + std::to_string(i) + ")";
    const std::string zy = "P(alpha" + std::to_string(i) + ",0)";
    x_div.add(zx, 1);
    y_div.add(zy, 1);
    table.ramification[zx] = 3;
    table.ramification[zy] = 3;
  }
  table.functions["x"] = x_div;
  table.functions["y"] = y_div;
  // y = beta meets the curve where x^n = -(beta^n + 1) = 0: a single point of contact n.
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i].pow(n) + f.one()).is_zero()) throw std::logic_error("beta^n != -1");
    Divisor d = poles * -1;
    d.add("P(0,beta" + std::to_string(i) + ")", n);
    table.functions["y-beta" + std::to_string(i)] = d;
  }
  table.validate();
  return table;
}

using Exponents = std::map<std::string, std::int64_t>;

/// Sum of exponents[s] * (s) over the table.
inline Divisor divisor_of_monomial(const PrincipalDivisorTable& table, const Exponents& exponents) {
  Divisor out;
  for (const auto& [symbol, e] : exponents) out += table.at(symbol) * e;
  return out;
}

struct ExponentRange {
  std::string symbol;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct NongapWitness {
  std::string source;  ///< "monomial" or "maximality"
  Exponents exponents;
};

struct MonomialScan {
  std::string target;
  std::map<std::int64_t, NongapWitness> nongaps;

  [[nodiscard]] bool contains(std::int64_t v) const { return nongaps.count(v) != 0; }

  [[nodiscard]] std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out;
    for (const auto& [v, w] : nongaps) out.push_back(v);
    return out;
  }
};

/// Pole orders at `target` of monomials over the table whose (lifted) divisor
/// is effective away from target, plus q and q+1, which are non-gaps at every
/// rational place of an F_{q^2}-maximal curve. Each value keeps the witness
/// with the smallest total exponent.
inline MonomialScan weierstrass_nongaps_from_monomials(const PrincipalDivisorTable& table,
                                                       const std::string& target,
                                                       const std::vector<ExponentRange>& ranges,
                                                       std::int64_t q) {
  bool present = false;
  for (const auto& [symbol, div] : table.functions) present = present || div.valuation(target) != 0;
  if (!present) throw std::invalid_argument("place " + target + " does not occur in the table");
  for (const auto& r : ranges) {
    (void)table.at(r.symbol);
    if (r.lo > r.hi) throw std::invalid_argument("empty exponent range for " + r.symbol);
  }

  MonomialScan scan;
  scan.target = target;
  auto cost = [](const Exponents& e) {
    std::int64_t c = 0;
    for (const auto& [s, v] : e) c += v < 0 ? -v : v;
    return c;
  };
  Exponents current;
  for (const auto& r : ranges) current[r.symbol] = r.lo;
  for (;;) {
    const Divisor lifted = table.lift(divisor_of_monomial(table, current));
    const std::int64_t v = lifted.valuation(target);
    if (v <= 0 && lifted.effective_away_from(target)) {
      Exponents trimmed;
      for (const auto& [s, e] : current)
        if (e != 0) trimmed[s] = e;
      auto it = scan.nongaps.find(-v);
      if (it == scan.nongaps.end() || cost(trimmed) < cost(it->second.exponents))
        scan.nongaps[-v] = {"monomial", std::move(trimmed)};
    }
    std::size_t i = ranges.size();
    while (i-- > 0) {
      auto& e = current[ranges[i].symbol];
      if (++e <= ranges[i].hi) break;
      e = ranges[i].lo;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  for (std::int64_t v : {std::int64_t{0}, q, q + 1})
    if (!scan.contains(v)) scan.nongaps[v] = {v == 0 ? "constant" : "maximality", {}};
  return scan;
}

}  // namespace maxcurves::curves
