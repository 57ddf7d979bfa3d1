#pragma once

// Irredundant irreducible decomposition (IID) of a monomial ideal and the
// associated primes read off from it.

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "monid/core.hpp"

namespace monid {

/// Pure-power ideal <x_{i_1}^{a_1}, ..., x_{i_k}^{a_k}>, every a_j >= 1.
class IrreducibleComponent {
 public:
  using Power = std::pair<std::size_t, Exponent>;

  IrreducibleComponent(RingPtr ring, std::vector<Power> powers) : ring_(std::move(ring)), powers_(std::move(powers)) {
    if (!ring_) throw InvalidArgument("null ring");
    if (powers_.empty()) throw InvalidArgument("irreducible component needs at least one generator");
    std::sort(powers_.begin(), powers_.end());
    for (std::size_t p = 0; p < powers_.size(); ++p) {
      if (powers_[p].first >= ring_->size()) throw InvalidArgument("component variable out of range");
      if (powers_[p].second == 0) throw InvalidArgument("component exponents must be positive");
      if (p > 0 && powers_[p].first == powers_[p - 1].first)
        throw InvalidArgument("component lists a variable twice");
    }
  }

  /// Reads a component from its exponent vector; zero entries are absent variables.
  static IrreducibleComponent from_exponents(RingPtr ring, const Monomial& corner) {
    std::vector<Power> powers;
    for (std::size_t i = 0; i < corner.size(); ++i)
      if (corner[i] > 0) powers.emplace_back(i, corner[i]);
    return IrreducibleComponent(std::move(ring), std::move(powers));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Power>& powers() const noexcept { return powers_; }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    s.reserve(powers_.size());
    for (const auto& [var, exp] : powers_) s.push_back(var);
    return s;
  }

  /// Exponent of x_i among the generators, 0 when x_i is absent.
  Exponent exponent_of(std::size_t i) const {
    auto it = std::lower_bound(powers_.begin(), powers_.end(), Power{i, 0});
    return it != powers_.end() && it->first == i ? it->second : 0;
  }

  /// Exponent vector with 0 for absent variables.
  Monomial exponents() const {
    std::vector<Exponent> e(ring_->size(), 0);
    for (const auto& [var, exp] : powers_) e[var] = exp;
    return Monomial(std::move(e));
  }

  PrimeSupport prime() const { return PrimeSupport(ring_, support()); }

  MonomialIdeal to_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(powers_.size());
    for (const auto& [var, exp] : powers_) gens.push_back(Monomial::variable(ring_->size(), var, exp));
    return MonomialIdeal(ring_, std::move(gens));
  }

  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return same_ring(a.ring_, b.ring_) && a.powers_ == b.powers_;
  }

  /// Canonical order: support set first, then exponents in support order.
  friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    auto sa = a.support();
    auto sb = b.support();
    if (sa != sb) return sa < sb;
    return a.powers_ < b.powers_;
  }

 private:
  RingPtr ring_;
  std::vector<Power> powers_;
};

/// I = Q_1 cap ... cap Q_r with the Q_i irreducible and none omissible.
struct Decomposition {
  MonomialIdeal ideal;
  std::vector<IrreducibleComponent> components;

  bool has_component(const IrreducibleComponent& q) const {
    return std::find(components.begin(), components.end(), q) != components.end();
  }
};

namespace detail {

// Irreducible ideals are carried as exponent vectors (0 = variable absent).
// Q is inside Q' iff every x_i^{a_i} of Q lies in Q', i.e. Q' has x_i with
// exponent at most a_i.
inline bool irreducible_subset(const Monomial& q, const Monomial& outer) {
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] > 0 && (outer[i] == 0 || outer[i] > q[i])) return false;
  return true;
}

// Drops every irreducible ideal that contains another one in the list. An
// irreducible ideal contains an intersection of monomial ideals only if it
// contains one of them, so this is exactly the irredundancy condition.
inline std::vector<Monomial> prune_redundant(std::vector<Monomial> comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<Monomial> kept;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
      redundant = j != i && irreducible_subset(comps[j], comps[i]);
    if (!redundant) kept.push_back(comps[i]);
  }
  return kept;
}

class Splitter {
 public:
  // gens must already be minimal, sorted, proper and nonzero.
  const std::vector<Monomial>& run(const std::vector<Monomial>& gens) {
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

    auto split = std::find_if(gens.begin(), gens.end(), [](const Monomial& g) { return !g.is_pure_power(); });
    std::vector<Monomial> result;
    if (split == gens.end()) {
      std::vector<Exponent> corner(gens.front().size(), 0);
      for (const auto& g : gens) {
        auto i = g.support().front();
        corner[i] = g[i];
      }
      result.emplace_back(std::move(corner));
    } else {
      // u = x_i^{nu_i(u)} * u' with i the lowest variable of u.
      const Monomial& u = *split;
      const std::size_t i = u.support().front();
      const Monomial power = Monomial::variable(u.size(), i, u[i]);
      const Monomial cofactor = u.with(i, 0);

      std::vector<Monomial> rest;
      rest.reserve(gens.size());
      for (const auto& g : gens)
        if (&g != &u) rest.push_back(g);

      for (const Monomial* extra : {&power, &cofactor}) {
        auto branch = rest;
        branch.push_back(*extra);
        const auto& sub = run(minimal_elements(std::move(branch)));
        result.insert(result.end(), sub.begin(), sub.end());
      }
      result = prune_redundant(std::move(result));
    }
    return memo_.emplace(gens, std::move(result)).first->second;
  }

 private:
  std::map<std::vector<Monomial>, std::vector<Monomial>> memo_;
};

}  // namespace detail

/// The unique irredundant irreducible decomposition of a proper nonzero
/// monomial ideal, components in canonical order.
inline Decomposition irreducible_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("the zero ideal has no irreducible decomposition");
  if (ideal.is_unit()) throw InvalidArgument("the unit ideal has no irreducible decomposition");

  detail::Splitter splitter;
  auto corners = detail::prune_redundant(splitter.run(ideal.generators()));

  Decomposition out{ideal, {}};
  out.components.reserve(corners.size());
  for (const auto& c : corners) out.components.push_back(IrreducibleComponent::from_exponents(ideal.ring(), c));
  std::sort(out.components.begin(), out.components.end());
  return out;
}

/// Ass(I): radicals of the IID components, deduplicated and sorted.
inline std::vector<PrimeSupport> associated_primes(const Decomposition& decomposition) {
  std::vector<PrimeSupport> primes;
  for (const auto& q : decomposition.components) {
    auto p = q.prime();
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(std::move(p));
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

inline std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal) {
  return associated_primes(irreducible_decomposition(ideal));
}

inline bool is_associated(const Decomposition& decomposition, const PrimeSupport& prime) {
  require_same_ring(decomposition.ideal.ring(), prime.ring());
  return std::any_of(decomposition.components.begin(), decomposition.components.end(),
                     [&](const IrreducibleComponent& q) { return q.support() == prime.vars(); });
}

/// The P-primary components of the decomposition, in canonical order.
inline std::vector<IrreducibleComponent> components_for_prime(const Decomposition& decomposition,
                                                              const PrimeSupport& prime) {
  require_same_ring(decomposition.ideal.ring(), prime.ring());
  std::vector<IrreducibleComponent> out;
  for (const auto& q : decomposition.components)
    if (q.support() == prime.vars()) out.push_back(q);
  if (out.empty()) throw NotAssociated("prime is not associated to the ideal");
  return out;
}

/// Intersection of the components, for recombination checks.
inline MonomialIdeal recombine(const RingPtr& ring, const std::vector<IrreducibleComponent>& components) {
  auto acc = MonomialIdeal::unit(ring);
  for (const auto& q : components) acc = intersect(acc, q.to_ideal());
  return acc;
}

}  // namespace monid
