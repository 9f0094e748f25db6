/**
 * @file gf.hpp
 * @brief Exact arithmetic in small finite fields F_{p^k}.
 *
 * A Field is built once per (p, k) and carries a coefficient representation
 * (packed base-p integer, digit i = coefficient of x^i) together with
 * discrete-log and antilog tables. Everything is tabulated eagerly, so field
 * orders are capped at kMaxFieldOrder.
 *
 * Construction is deterministic: the modulus is the lexicographically
 * smallest monic irreducible of degree k (constant coefficient compared
 * first), the generator is the smallest packed code of full multiplicative
 * order.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace maxcurves::gf {

/// Largest field order a Field will tabulate.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

namespace detail {

/// Polynomial over F_p, coefficients low-to-high, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const int dm = degree(m);
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (degree(a) >= dm) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const int shift = degree(a) - dm;
    for (int i = 0; i <= dm; ++i) {
      const std::uint64_t sub = factor * m[static_cast<std::size_t>(i)] % p;
      auto& c = a[static_cast<std::size_t>(i + shift)];
      c = static_cast<std::uint32_t>((c + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(prod), m, p);
}

inline Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result = poly_mod(Poly{1}, m, p);
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1u) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1u;
  }
  return result;
}

/// Ben-Or test: f of degree k is irreducible iff gcd(x^{p^i} - x, f) = 1 for
/// every 1 <= i <= k/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int k = degree(f);
  if (k < 1) return false;
  if (k == 1) return true;
  const Poly x{0, 1};
  Poly h = poly_mod(x, f, p);
  for (int i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    if (degree(poly_gcd(poly_sub(h, x, p), f, p)) > 0) return false;
  }
  return true;
}

}  // namespace detail

class Field;

/// A value in a Field. Holds a non-owning pointer: the Field must outlive it.
class Element {
 public:
  Element() = default;

  [[nodiscard]] const Field& field() const { return *field_; }
  [[nodiscard]] std::uint32_t code() const { return code_; }
  [[nodiscard]] bool is_zero() const { return code_ == 0; }
  [[nodiscard]] bool is_one() const { return code_ == 1; }

  [[nodiscard]] std::vector<std::uint32_t> coefficients() const;
  [[nodiscard]] Element inv() const;
  [[nodiscard]] Element pow(std::int64_t e) const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);

  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  friend bool operator==(const Element& a, const Element& b);
  /// Canonical order: by packed code.
  friend bool operator<(const Element& a, const Element& b) { return a.code_ < b.code_; }

 private:
  friend class Field;
  Element(const Field* field, std::uint32_t code) : field_(field), code_(code) {}

  const Field* field_ = nullptr;
  std::uint32_t code_ = 0;
};

/// F_{p^k} with dual representation (packed coefficients + log tables).
/// Immutable after construction.
class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  [[nodiscard]] std::uint32_t characteristic() const { return p_; }
  [[nodiscard]] std::uint32_t degree() const { return k_; }
  [[nodiscard]] std::uint32_t order() const { return q_; }
  /// Monic modulus, coefficients low-to-high (size k+1).
  [[nodiscard]] std::span<const std::uint32_t> modulus() const { return modulus_; }
  [[nodiscard]] std::string name() const {
    return "F_" + std::to_string(q_);
  }

  /// Fields with equal (p, k) are identical by construction and interoperate.
  [[nodiscard]] bool same_as(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_;
  }

  [[nodiscard]] Element zero() const { return {this, 0}; }
  [[nodiscard]] Element one() const { return {this, 1}; }
  [[nodiscard]] Element generator() const { return {this, generator_}; }

  [[nodiscard]] Element element(std::uint32_t code) const {
    if (code >= q_) throw std::out_of_range("element code " + std::to_string(code) + " outside " + name());
    return {this, code};
  }

  /// Image of an integer under Z -> F_p -> F_{p^k}.
  [[nodiscard]] Element from_int(std::int64_t n) const {
    const auto p = static_cast<std::int64_t>(p_);
    return {this, static_cast<std::uint32_t>(((n % p) + p) % p)};
  }

  [[nodiscard]] Element from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > k_) throw std::invalid_argument("too many coefficients for " + name());
    std::uint32_t code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range for " + name());
      code = code * p_ + coeffs[i];
    }
    return {this, code};
  }

  /// generator^i; any integer exponent.
  [[nodiscard]] Element exp(std::int64_t i) const {
    const auto n = static_cast<std::int64_t>(q_ - 1);
    return {this, exp_[static_cast<std::size_t>(((i % n) + n) % n)]};
  }

  /// Discrete log base the generator, in [0, q-2].
  [[nodiscard]] std::uint32_t log(const Element& a) const {
    check_owned(a);
    if (a.is_zero()) throw std::domain_error("log of zero");
    return log_[a.code()];
  }

  /// Zero first, then exp(0), exp(1), ..., exp(q-2).
  [[nodiscard]] std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(q_);
    out.push_back(zero());
    for (std::uint32_t i = 0; i + 1 < q_; ++i) out.push_back({this, exp_[i]});
    return out;
  }

  [[nodiscard]] std::vector<std::uint32_t> coefficients(std::uint32_t code) const {
    std::vector<std::uint32_t> out(k_);
    for (auto& c : out) {
      c = code % p_;
      code /= p_;
    }
    return out;
  }

  // Arithmetic on packed codes.
  [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      out += ((a % p_ + b % p_) % p_) * pow_p_[i];
      a /= p_;
      b /= p_;
    }
    return out;
  }

  [[nodiscard]] std::uint32_t neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      out += ((p_ - a % p_) % p_) * pow_p_[i];
      a /= p_;
    }
    return out;
  }

  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  [[nodiscard]] std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero in " + name());
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  [[nodiscard]] std::uint32_t pow(std::uint32_t a, std::int64_t e) const {
    if (a == 0) {
      if (e > 0) return 0;
      if (e == 0) return 1;
      throw std::domain_error("negative power of zero in " + name());
    }
    const auto n = static_cast<std::int64_t>(q_ - 1);
    const auto e_red = static_cast<std::uint64_t>(((e % n) + n) % n);
    return exp_[static_cast<std::size_t>(e_red * log_[a] % static_cast<std::uint64_t>(n))];
  }

  void check_owned(const Element& a) const {
    if (a.field_ == nullptr || !same_as(*a.field_))
      throw std::invalid_argument("element does not belong to " + name());
  }

 private:
  friend std::shared_ptr<const Field> make_field(std::uint32_t p, std::uint32_t k);

  Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    pow_p_.resize(k_);
    std::uint32_t pk = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      pow_p_[i] = pk;
      pk *= p_;
    }
    q_ = pk;
    choose_modulus();
    choose_generator();
    build_tables();
  }

  detail::Poly to_poly(std::uint32_t code) const {
    detail::Poly f = coefficients(code);
    detail::trim(f);
    return f;
  }

  std::uint32_t from_poly(const detail::Poly& f) const {
    std::uint32_t code = 0;
    for (std::size_t i = f.size(); i-- > 0;) code = code * p_ + f[i];
    return code;
  }

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    return from_poly(detail::poly_mulmod(to_poly(a), to_poly(b), modulus_, p_));
  }

  // Lower coefficients (c_0, ..., c_{k-1}) enumerated lexicographically with
  // c_0 most significant.
  void choose_modulus() {
    std::vector<std::uint32_t> low(k_, 0);
    for (;;) {
      detail::Poly f(low.begin(), low.end());
      f.push_back(1);
      if (detail::is_irreducible(f, p_)) {
        modulus_ = std::move(f);
        return;
      }
      std::size_t pos = k_;
      while (pos-- > 0) {
        if (++low[pos] < p_) break;
        low[pos] = 0;
      }
      if (pos == static_cast<std::size_t>(-1))
        throw std::logic_error("no irreducible polynomial found");  // unreachable
    }
  }

  void choose_generator() {
    if (q_ == 2) {
      generator_ = 1;
      return;
    }
    for (std::uint32_t c = 2; c < q_; ++c) {
      std::uint32_t acc = c;
      std::uint32_t ord = 1;
      while (acc != 1) {
        acc = mul_slow(acc, c);
        ++ord;
      }
      if (ord == q_ - 1) {
        generator_ = c;
        return;
      }
    }
    throw std::logic_error("no primitive element found");  // unreachable
  }

  void build_tables() {
    const std::uint32_t n = q_ - 1;
    exp_.resize(2 * static_cast<std::size_t>(n));
    log_.assign(q_, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = acc;
      exp_[i + n] = acc;
      log_[acc] = i;
      acc = mul_slow(acc, generator_);
    }
  }

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  detail::Poly modulus_;
  std::uint32_t generator_ = 1;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds F_{p^k}. Throws std::invalid_argument when p is not prime, k = 0,
/// or p^k exceeds kMaxFieldOrder.
inline FieldPtr make_field(std::uint32_t p, std::uint32_t k) {
  if (!detail::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("extension degree must be positive");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    order *= p;
    if (order > kMaxFieldOrder)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(k) +
                                  " exceeds cap " + std::to_string(kMaxFieldOrder));
  }
  return FieldPtr(new Field(p, k));
}

// ---- Element ----------------------------------------------------------------

namespace detail {
inline void check_same(const Element& a, const Element& b) {
  if (!a.field().same_as(b.field())) throw std::invalid_argument("mixed-field operands");
}
}  // namespace detail

inline std::vector<std::uint32_t> Element::coefficients() const { return field_->coefficients(code_); }

inline Element Element::inv() const { return {field_, field_->inv(code_)}; }

inline Element Element::pow(std::int64_t e) const { return {field_, field_->pow(code_, e)}; }

inline Element operator+(const Element& a, const Element& b) {
  detail::check_same(a, b);
  return {a.field_, a.field_->add(a.code_, b.code_)};
}

inline Element operator-(const Element& a) { return {a.field_, a.field_->neg(a.code_)}; }

inline Element operator-(const Element& a, const Element& b) {
  detail::check_same(a, b);
  return {a.field_, a.field_->add(a.code_, a.field_->neg(b.code_))};
}

inline Element operator*(const Element& a, const Element& b) {
  detail::check_same(a, b);
  return {a.field_, a.field_->mul(a.code_, b.code_)};
}

inline Element operator/(const Element& a, const Element& b) {
  detail::check_same(a, b);
  return {a.field_, a.field_->mul(a.code_, a.field_->inv(b.code_))};
}

inline bool operator==(const Element& a, const Element& b) {
  return a.code_ == b.code_ && a.field().same_as(b.field());
}

// ---- Field-level operations -------------------------------------------------

/// All x with x^n = a, sorted by code. For a = 0 this is {0}; otherwise it is
/// empty or has exactly gcd(n, q-1) elements.
inline std::vector<Element> nth_roots(const Element& a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("root index must be positive");
  const Field& f = a.field();
  if (a.is_zero()) return {f.zero()};
  const std::uint64_t order = f.order() - 1;
  const std::uint64_t g = std::gcd(n, order);
  const std::uint64_t l = f.log(a);
  if (l % g != 0) return {};
  // Solve n t = l (mod order): t = (l/g) * (n/g)^{-1} mod order/g.
  const std::uint64_t m = order / g;
  std::uint64_t t0 = 0;
  if (m > 1) {
    const std::uint64_t nm = (n / g) % m;
    // extended Euclid on (nm, m)
    std::int64_t old_r = static_cast<std::int64_t>(nm), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
      const std::int64_t quot = old_r / r;
      std::tie(old_r, r) = std::pair{r, old_r - quot * r};
      std::tie(old_s, s) = std::pair{s, old_s - quot * s};
    }
    const auto mi = static_cast<std::int64_t>(m);
    const auto inv = static_cast<std::uint64_t>(((old_s % mi) + mi) % mi);
    t0 = ((l / g) % m) * inv % m;
  }
  std::vector<Element> roots;
  roots.reserve(g);
  for (std::uint64_t j = 0; j < g; ++j) roots.push_back(f.exp(static_cast<std::int64_t>(t0 + j * m)));
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// True iff a lies in the subfield F_{p^m}, i.e. a^{p^m} = a. m must divide k.
inline bool is_in_subfield(const Element& a, std::uint32_t m) {
  const Field& f = a.field();
  if (m == 0 || f.degree() % m != 0)
    throw std::invalid_argument("subfield degree " + std::to_string(m) + " does not divide " +
                                std::to_string(f.degree()));
  std::int64_t pm = 1;
  for (std::uint32_t i = 0; i < m; ++i) pm *= f.characteristic();
  return a.pow(pm) == a;
}

inline std::vector<Element> enumerate_field(const Field& f) { return f.elements(); }

}  // namespace maxcurves::gf
