/**
 * @file numsg.hpp
 * @brief Numerical semigroups and (D,P)-order sequences at rational places.
 *
 * Gap structure is computed twice, by a membership sieve and by the Apéry
 * set with respect to the smallest generator (shortest paths over residues).
 * The two routes are kept independent so each can serve as the other's oracle.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxcurves::numsg {

namespace detail {

inline std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::vector<int> normalize_generators(std::span<const int> gens) {
  if (gens.empty()) throw std::invalid_argument("semigroup needs at least one generator");
  std::vector<int> out(gens.begin(), gens.end());
  for (int g : out)
    if (g <= 0) throw std::invalid_argument("generators must be positive, got " + std::to_string(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  int d = 0;
  for (int g : out) d = std::gcd(d, g);
  if (d != 1)
    throw std::invalid_argument("unsupported: gcd of generators {" + join(out) + "} is " + std::to_string(d) +
                                ", so the gap set is infinite");
  return out;
}

}  // namespace detail

/// Apéry set of <gens> with respect to the smallest generator m: entry r is the
/// least element of the semigroup congruent to r mod m.
inline std::vector<std::int64_t> apery_set(std::span<const int> gens) {
  const std::vector<int> g = detail::normalize_generators(gens);
  const int m = g.front();
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kInf);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[0] = 0;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [d, r] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (int a : g) {
      const int next = (r + a) % m;
      if (d + a < dist[static_cast<std::size_t>(next)]) {
        dist[static_cast<std::size_t>(next)] = d + a;
        heap.emplace(d + a, next);
      }
    }
  }
  return dist;
}

/// Genus via Selmer's formula: sum over the Apéry set of floor(w / m).
inline std::int64_t apery_genus(std::span<const int> gens) {
  const std::vector<int> g = detail::normalize_generators(gens);
  const auto m = static_cast<std::int64_t>(g.front());
  std::int64_t total = 0;
  for (std::int64_t w : apery_set(g)) total += w / m;
  return total;
}

/// Frobenius number via the Apéry set: max(Ap) - m (-1 when the semigroup is N).
inline std::int64_t apery_frobenius_number(std::span<const int> gens) {
  const std::vector<int> g = detail::normalize_generators(gens);
  const auto ap = apery_set(g);
  return *std::max_element(ap.begin(), ap.end()) - g.front();
}

/// A numerical semigroup given by generators with gcd 1. Immutable.
class NumericalSemigroup {
 public:
  /// Throws std::invalid_argument on empty input, non-positive generators or
  /// gcd != 1.
  explicit NumericalSemigroup(std::span<const int> gens) : generators_(detail::normalize_generators(gens)) {
    const auto max_gen = static_cast<std::int64_t>(generators_.back());
    // Frobenius number < 2 * (max gen)^2 (Erdős–Graham), so the conductor is inside.
    bound_ = std::max<std::int64_t>(2 * max_gen * max_gen, 2);
    sieve_.assign(static_cast<std::size_t>(bound_) + 1, false);
    sieve_[0] = true;
    for (std::int64_t n = 1; n <= bound_; ++n)
      for (int a : generators_) {
        if (a > n) break;
        if (sieve_[static_cast<std::size_t>(n - a)]) {
          sieve_[static_cast<std::size_t>(n)] = true;
          break;
        }
      }
    for (std::int64_t n = 0; n <= bound_; ++n)
      if (!sieve_[static_cast<std::size_t>(n)]) gaps_.push_back(n);
    conductor_ = gaps_.empty() ? 0 : gaps_.back() + 1;
    // A run of min-generator consecutive members past the last gap closes the tail.
    if (bound_ - conductor_ + 1 < generators_.front())
      throw std::logic_error("sieve bound too small to certify the conductor");
  }

  NumericalSemigroup(std::initializer_list<int> gens)
      : NumericalSemigroup(std::span<const int>(gens.begin(), gens.size())) {}

  [[nodiscard]] const std::vector<int>& generators() const { return generators_; }
  [[nodiscard]] std::int64_t sieve_bound() const { return bound_; }
  [[nodiscard]] const std::vector<std::int64_t>& gaps() const { return gaps_; }
  [[nodiscard]] std::int64_t genus() const { return static_cast<std::int64_t>(gaps_.size()); }
  /// Least c with [c, inf) inside the semigroup.
  [[nodiscard]] std::int64_t conductor() const { return conductor_; }
  [[nodiscard]] std::int64_t frobenius_number() const { return conductor_ - 1; }
  [[nodiscard]] int multiplicity() const { return generators_.front(); }

  [[nodiscard]] bool contains(std::int64_t n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return sieve_[static_cast<std::size_t>(n)];
  }

  /// Non-gaps in [0, upto], increasing.
  [[nodiscard]] std::vector<std::int64_t> nongaps_upto(std::int64_t upto) const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 0; n <= upto; ++n)
      if (contains(n)) out.push_back(n);
    return out;
  }

  /// Minimal generating system: positive non-gaps that are not a sum of two
  /// positive non-gaps.
  [[nodiscard]] std::vector<int> minimal_generators() const {
    std::vector<int> out;
    for (int a : generators_) {
      bool decomposable = false;
      for (std::int64_t b = 1; b < a && !decomposable; ++b)
        decomposable = contains(b) && contains(a - b);
      if (!decomposable) out.push_back(a);
    }
    return out;
  }

 private:
  std::vector<int> generators_;
  std::int64_t bound_ = 0;
  std::vector<bool> sieve_;
  std::vector<std::int64_t> gaps_;
  std::int64_t conductor_ = 0;
};

inline bool contains(const NumericalSemigroup& s, std::int64_t n) { return s.contains(n); }

inline std::vector<std::int64_t> nongaps_upto(const NumericalSemigroup& s, std::int64_t upto) {
  if (upto < 0) throw std::invalid_argument("bound must be non-negative");
  return s.nongaps_upto(upto);
}

/// Where an order sequence was observed.
enum class OrderRole { GenericEpsilon, RationalPlace, NonRationalPlace };

inline const char* to_string(OrderRole role) {
  switch (role) {
    case OrderRole::GenericEpsilon: return "generic-epsilon";
    case OrderRole::RationalPlace: return "rational-place-j";
    case OrderRole::NonRationalPlace: return "nonrational-place-j";
  }
  return "?";
}

/// Strictly increasing orders starting 0, 1.
class OrderSequence {
 public:
  OrderSequence(std::vector<std::int64_t> orders, OrderRole role) : orders_(std::move(orders)), role_(role) {
    if (orders_.empty() || orders_.front() != 0) throw std::invalid_argument("order sequence must start at 0");
    if (orders_.size() >= 2 && orders_[1] != 1) throw std::invalid_argument("second order must be 1");
    for (std::size_t i = 1; i < orders_.size(); ++i)
      if (orders_[i] <= orders_[i - 1]) throw std::invalid_argument("orders must be strictly increasing");
  }

  [[nodiscard]] const std::vector<std::int64_t>& orders() const { return orders_; }
  [[nodiscard]] OrderRole role() const { return role_; }
  [[nodiscard]] std::size_t size() const { return orders_.size(); }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const { return orders_.at(i); }
  [[nodiscard]] bool contains(std::int64_t v) const {
    return std::binary_search(orders_.begin(), orders_.end(), v);
  }

  [[nodiscard]] std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(orders_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const OrderSequence& a, const OrderSequence& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<std::int64_t> orders_;
  OrderRole role_;
};

namespace detail {

inline void require_maximal_shape(const NumericalSemigroup& s, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  if (!s.contains(q) || !s.contains(q + 1))
    throw std::domain_error("q=" + std::to_string(q) + " and q+1 must both be non-gaps; <" +
                            join(s.generators()) + "> cannot be a Weierstrass semigroup of a maximal curve over F_{q^2}");
}

}  // namespace detail

/// Frobenius dimension r = #{non-gaps <= q+1} - 1.
inline int frobenius_dimension_from_semigroup(const NumericalSemigroup& s, std::int64_t q) {
  detail::require_maximal_shape(s, q);
  return static_cast<int>(s.nongaps_upto(q + 1).size()) - 1;
}

/// Orders 0 < 1 < q+1-m_{r-2} < ... < q+1-m_1 < q+1 from the non-gaps
/// 0 = m_0 < ... < m_r = q+1 at a rational place.
inline OrderSequence orders_from_nongaps(std::span<const std::int64_t> nongaps_to_q1, std::int64_t q) {
  if (nongaps_to_q1.size() < 2 || nongaps_to_q1.front() != 0 || nongaps_to_q1.back() != q + 1 ||
      nongaps_to_q1[nongaps_to_q1.size() - 2] != q)
    throw std::domain_error("non-gap prefix must be 0 < ... < q < q+1");
  std::vector<std::int64_t> orders{0};
  for (std::size_t i = nongaps_to_q1.size() - 1; i-- > 0;) orders.push_back(q + 1 - nongaps_to_q1[i]);
  return OrderSequence(std::move(orders), OrderRole::RationalPlace);
}

inline OrderSequence rational_point_orders(const NumericalSemigroup& s, std::int64_t q) {
  detail::require_maximal_shape(s, q);
  const auto prefix = s.nongaps_upto(q + 1);
  return orders_from_nongaps(prefix, q);
}

}  // namespace maxcurves::numsg
