#pragma once

// Monomials and monomial ideals over K[x_1, ..., x_n]. The coefficient field
// never appears: every operation here is combinatorics on exponent vectors.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "monid/error.hpp"

namespace monid {

using Exponent = std::uint32_t;

/// Ambient polynomial ring: the number of variables and their display names.
class Ring {
 public:
  /// Variables named x1..xn.
  explicit Ring(std::size_t n) {
    if (n == 0) throw InvalidArgument("ring needs at least one variable");
    names_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names_.push_back("x" + std::to_string(i + 1));
  }

  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidArgument("ring needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
      if (name.empty()) throw InvalidArgument("empty variable name");
      if (!seen.insert(name).second) throw InvalidArgument("duplicate variable name '" + name + "'");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::size_t n) { return std::make_shared<const Ring>(n); }
inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw ContextMismatch("operands belong to different rings");
}

/// Checked exponent addition.
inline Exponent add_exponents(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) throw ExponentOverflow("exponent overflow");
  return a + b;
}

/// x^a for a length-n exponent vector a. The all-zero vector is the unit 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

  static Monomial unit(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }

  /// x_i^power in n variables (i is 0-based).
  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1) {
    if (i >= n) throw InvalidArgument("variable index out of range");
    std::vector<Exponent> e(n, 0);
    e[i] = power;
    return Monomial(std::move(e));
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  bool is_unit() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  /// floor(u): indices of the variables dividing u.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0) s.push_back(i);
    return s;
  }

  /// base(u): the squarefree monomial on floor(u).
  Monomial base() const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] > 0 ? 1 : 0;
    return Monomial(std::move(e));
  }

  bool is_squarefree() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  /// True when u = x_i^a for a single variable and a > 0.
  bool is_pure_power() const noexcept {
    return std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }) == 1;
  }

  Monomial with(std::size_t i, Exponent e) const {
    Monomial r = *this;
    r.exps_.at(i) = e;
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on exponent vectors.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

namespace detail {

inline void require_same_size(const Monomial& u, const Monomial& w) {
  if (u.size() != w.size()) throw ContextMismatch("monomials have different numbers of variables");
}

// Generator-list primitives without ring checks. Callers guarantee equal sizes.

inline bool divides_unchecked(const Monomial& u, const Monomial& w) {
  const auto a = u.exponents();
  const auto b = w.exponents();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline std::vector<Monomial> minimal_elements(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // A proper divisor is lexicographically smaller, so only kept elements need checking.
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& u : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& w) { return divides_unchecked(w, u); });
    if (!redundant) kept.push_back(std::move(u));
  }
  return kept;
}

inline bool member_unchecked(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return divides_unchecked(g, m); });
}

}  // namespace detail

inline bool divides(const Monomial& u, const Monomial& w) {
  detail::require_same_size(u, w);
  return detail::divides_unchecked(u, w);
}

inline Monomial lcm(const Monomial& u, const Monomial& w) {
  detail::require_same_size(u, w);
  std::vector<Exponent> e(u.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(u[i], w[i]);
  return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& u, const Monomial& w) {
  detail::require_same_size(u, w);
  std::vector<Exponent> e(u.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(u[i], w[i]);
  return Monomial(std::move(e));
}

inline Monomial multiply(const Monomial& u, const Monomial& w) {
  detail::require_same_size(u, w);
  std::vector<Exponent> e(u.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = add_exponents(u[i], w[i]);
  return Monomial(std::move(e));
}

/// u / gcd(u, w).
inline Monomial quotient_by_gcd(const Monomial& u, const Monomial& w) {
  detail::require_same_size(u, w);
  std::vector<Exponent> e(u.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = u[i] > w[i] ? u[i] - w[i] : 0;
  return Monomial(std::move(e));
}

/// A monomial ideal stored by its minimal generating set G(I), sorted
/// lexicographically. The zero ideal has no generators; the unit ideal has
/// the single generator 1.
class MonomialIdeal {
 public:
  /// Minimizes `gens`; input order and redundancy do not matter.
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    if (!ring_) throw InvalidArgument("null ring");
    for (const auto& g : gens)
      if (g.size() != ring_->size())
        throw ContextMismatch("generator length does not match the ring");
    gens_ = detail::minimal_elements(std::move(gens));
  }

  static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }
  static MonomialIdeal unit(RingPtr ring) {
    auto n = ring->size();
    return MonomialIdeal(std::move(ring), {Monomial::unit(n)});
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t num_variables() const noexcept { return ring_->size(); }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

  /// max{nu_j(u) : u in G(I)} for every variable j (0 for absent variables).
  std::vector<Exponent> max_exponents() const {
    std::vector<Exponent> m(ring_->size(), 0);
    for (const auto& g : gens_)
      for (std::size_t j = 0; j < m.size(); ++j) m[j] = std::max(m[j], g[j]);
    return m;
  }

  /// Structural equality of canonical forms.
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimize(RingPtr ring, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(ring), std::move(gens));
}

inline void require_in_ring(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.size() != ideal.num_variables())
    throw ContextMismatch("monomial length does not match the ring");
}

/// m in I iff some generator of I divides m.
inline bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  require_in_ring(ideal, m);
  return detail::member_unchecked(ideal.generators(), m);
}

/// J subset of I.
inline bool ideal_contains(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  require_same_ring(outer.ring(), inner.ring());
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Monomial& g) { return detail::member_unchecked(outer.generators(), g); });
}

inline bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  return a == b;
}

/// (I : v) = < u / gcd(u, v) : u in G(I) >.
inline MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& v) {
  require_in_ring(ideal, v);
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& u : ideal.generators()) gens.push_back(quotient_by_gcd(u, v));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& w : b.generators()) gens.push_back(lcm(u, w));
  return MonomialIdeal(a.ring(), std::move(gens));
}

/// (I : J) = intersection of (I : v) over v in G(J).
inline MonomialIdeal colon_by_ideal(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal.ring(), by.ring());
  if (by.is_zero()) throw InvalidArgument("colon by the zero ideal");
  std::optional<MonomialIdeal> acc;
  for (const auto& v : by.generators()) {
    auto part = colon_by_monomial(ideal, v);
    acc = acc ? intersect(*acc, part) : std::move(part);
  }
  return std::move(*acc);
}

/// I + J.
inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

/// Replaces every generator by its base.
inline MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& u : ideal.generators()) gens.push_back(u.base());
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

inline bool is_squarefree(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

/// A monomial prime <x_i : i in vars>, vars non-empty (0-based indices).
class PrimeSupport {
 public:
  PrimeSupport(RingPtr ring, std::vector<std::size_t> vars) : ring_(std::move(ring)), vars_(std::move(vars)) {
    if (!ring_) throw InvalidArgument("null ring");
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    if (vars_.empty()) throw InvalidArgument("prime needs at least one variable");
    if (vars_.back() >= ring_->size()) throw InvalidArgument("prime variable out of range");
  }

  /// <x_1, ..., x_n>.
  static PrimeSupport maximal(RingPtr ring) {
    std::vector<std::size_t> vars(ring->size());
    for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
    return PrimeSupport(std::move(ring), std::move(vars));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<std::size_t>& vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  bool contains_var(std::size_t i) const { return std::binary_search(vars_.begin(), vars_.end(), i); }
  bool is_full() const noexcept { return vars_.size() == ring_->size(); }

  /// Variables of the ring not in the prime, ascending.
  std::vector<std::size_t> complement() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ring_->size(); ++i)
      if (!contains_var(i)) out.push_back(i);
    return out;
  }

  MonomialIdeal to_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(vars_.size());
    for (auto i : vars_) gens.push_back(Monomial::variable(ring_->size(), i));
    return MonomialIdeal(ring_, std::move(gens));
  }

  /// Recognizes an ideal generated by variables; nullopt otherwise.
  static std::optional<PrimeSupport> from_ideal(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return std::nullopt;
    std::vector<std::size_t> vars;
    for (const auto& g : ideal.generators()) {
      auto s = g.support();
      if (s.size() != 1 || g[s.front()] != 1) return std::nullopt;
      vars.push_back(s.front());
    }
    return PrimeSupport(ideal.ring(), std::move(vars));
  }

  friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) {
    return same_ring(a.ring_, b.ring_) && a.vars_ == b.vars_;
  }
  friend auto operator<=>(const PrimeSupport& a, const PrimeSupport& b) { return a.vars_ <=> b.vars_; }

 private:
  RingPtr ring_;
  std::vector<std::size_t> vars_;
};

}  // namespace monid
