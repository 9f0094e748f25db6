// Brute-force reference computations for the test suites. Nothing here calls
// nth_roots, the census functions or the semigroup sieve.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "maxcurves/gf.hpp"

namespace oracle {

using maxcurves::gf::Element;
using maxcurves::gf::Field;

/// Schoolbook product of two packed codes modulo the field modulus.
inline std::uint32_t poly_mul(const Field& f, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = f.characteristic(), k = f.degree();
  const auto ca = f.coefficients(a), cb = f.coefficients(b);
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p;
  const auto mod = f.modulus();
  for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * mod[i]) % p;
  }
  std::uint32_t code = 0;
  for (std::uint32_t i = k; i-- > 0;) code = code * p + static_cast<std::uint32_t>(prod[i]);
  return code;
}

/// x^n by square-and-multiply over operator* only (n >= 0).
inline Element power(Element x, std::uint64_t n) {
  Element acc = x.field().one();
  for (; n; n >>= 1, x = x * x)
    if (n & 1u) acc = acc * x;
  return acc;
}

/// All x with x^n = a by exhaustive search, in code order.
inline std::vector<Element> roots(const Element& a, std::uint64_t n) {
  std::vector<Element> out;
  for (std::uint32_t c = 0; c < a.field().order(); ++c) {
    const Element x = a.field().element(c);
    if (power(x, n) == a) out.push_back(x);
  }
  return out;
}

/// roots() for every a at once: bucket[a.code()] lists the x with x^n = a.
inline std::vector<std::vector<std::uint32_t>> root_buckets(const Field& f, std::uint64_t n) {
  std::vector<std::vector<std::uint32_t>> bucket(f.order());
  for (std::uint32_t c = 0; c < f.order(); ++c) bucket[power(f.element(c), n).code()].push_back(c);
  return bucket;
}

/// Integers in [0, limit] not reachable as sums of gens, by direct closure.
inline std::vector<std::int64_t> gaps_by_combinations(const std::vector<int>& gens, std::int64_t limit) {
  std::vector<bool> hit(static_cast<std::size_t>(limit) + 1, false);
  hit[0] = true;
  // breadth-first closure under adding each generator
  std::vector<std::int64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (std::int64_t v : frontier)
      for (int g : gens)
        if (v + g <= limit && !hit[static_cast<std::size_t>(v + g)]) {
          hit[static_cast<std::size_t>(v + g)] = true;
          next.push_back(v + g);
        }
    frontier = std::move(next);
  }
  std::vector<std::int64_t> gaps;
  for (std::int64_t n = 0; n <= limit; ++n)
    if (!hit[static_cast<std::size_t>(n)]) gaps.push_back(n);
  return gaps;
}

/// Affine solutions of y^{qb+1} = x^qb + x, scanning every (x, y).
inline std::vector<std::pair<Element, Element>> hermitian_points(const Field& f, std::int64_t qb) {
  std::vector<std::pair<Element, Element>> pts;
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    const Element x = f.element(a);
    const Element rhs = power(x, static_cast<std::uint64_t>(qb)) + x;
    for (std::uint32_t b = 0; b < f.order(); ++b) {
      const Element y = f.element(b);
      if (power(y, static_cast<std::uint64_t>(qb + 1)) == rhs) pts.emplace_back(x, y);
    }
  }
  return pts;
}

inline std::int64_t count_solutions(const Field& f, std::uint64_t n, const Element& rhs) {
  std::int64_t c = 0;
  for (std::uint32_t z = 0; z < f.order(); ++z) c += power(f.element(z), n) == rhs;
  return c;
}

/// Degree-one places of the GK model by exhaustive search.
inline std::int64_t gk_places(const Field& f, std::int64_t qb) {
  const std::uint64_t d = static_cast<std::uint64_t>(qb * qb - qb + 1);
  std::int64_t n = 1;  // common pole
  for (const auto& [x, y] : hermitian_points(f, qb)) {
    const Element num = power(x, static_cast<std::uint64_t>(qb * qb - 1)) - f.one();
    const Element den = power(x, static_cast<std::uint64_t>(qb - 1)) + f.one();
    if (den.is_zero() || (y * num).is_zero()) ++n;
    else n += count_solutions(f, d, y * num / den);
  }
  return n;
}

/// Degree-one places of z^16 = t (t+1)^6 over F_49; second is the number of split t.
inline std::pair<std::int64_t, std::int64_t> gsx49_places(const Field& f) {
  std::int64_t n = 4, split = 0;  // P0, P1, P2 and the place at infinity
  for (std::uint32_t c = 0; c < f.order(); ++c) {
    const Element t = f.element(c);
    if (t.is_zero() || (t + f.one()).is_zero()) continue;
    const std::int64_t s = count_solutions(f, 16, t * power(t + f.one(), 6));
    n += s;
    split += s > 0;
  }
  return {n, split};
}

/// Degree-one places of the degree-3 Kummer cover z^3 = w x y of the Fermat-type
/// curve x^n + y^n + 1 = 0, n = (q+1)/3, over F_{q^2}.
inline std::int64_t fk_places(const Field& f, std::int64_t q, const Element& w) {
  const auto n = static_cast<std::uint64_t>((q + 1) / 3);
  std::int64_t total = static_cast<std::int64_t>(n);  // poles, totally ramified
  for (std::uint32_t a = 0; a < f.order(); ++a)
    for (std::uint32_t b = 0; b < f.order(); ++b) {
      const Element x = f.element(a), y = f.element(b);
      if (!(power(x, n) + power(y, n) + f.one()).is_zero()) continue;
      total += (x * y).is_zero() ? 1 : count_solutions(f, 3, w * x * y);
    }
  return total;
}

}  // namespace oracle
