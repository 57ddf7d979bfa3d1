#pragma once

// Witness monomials: monomials v with P = (I : v) for an associated prime P.
//
// For a P-primary component Q = <x_{i_1}^{a_1}, ..., x_{i_k}^{a_k}> of the
// IID, the monomial
//
//     v = prod_j x_{i_j}^{a_j - 1} * prod_t x_{s_t}^{b_t}
//
// over the complement variables s_t, with b_t at least the largest exponent
// of x_{s_t} among the minimal generators, always satisfies P = (I : v).
// Conversely every witness determines a component: adding one to its
// exponents on P gives a member of the IID.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "monid/core.hpp"
#include "monid/decomposition.hpp"

namespace monid {

/// A prime, one of its primary components, and increments over the minimal
/// exponent floor for the complement variables.
struct WitnessSpec {
  PrimeSupport prime;
  IrreducibleComponent component;
  std::map<std::size_t, Exponent> offsets;  // keyed by complement variable

  void validate() const {
    require_same_ring(prime.ring(), component.ring());
    if (component.support() != prime.vars())
      throw InvalidArgument("component support does not match the prime");
    for (const auto& [var, off] : offsets) {
      if (var >= prime.ring()->size()) throw InvalidArgument("offset variable out of range");
      if (prime.contains_var(var)) throw InvalidArgument("offsets are only allowed on variables outside the prime");
    }
  }
};

/// Offsets drawn uniformly from [0, max_offset] for every complement
/// variable. The mapping from seed to offsets is fixed across platforms.
inline std::map<std::size_t, Exponent> seeded_offsets(const PrimeSupport& prime, std::uint64_t seed,
                                                      Exponent max_offset = 8) {
  std::mt19937_64 rng(seed);
  std::map<std::size_t, Exponent> out;
  for (auto var : prime.complement())
    out[var] = static_cast<Exponent>(rng() % (static_cast<std::uint64_t>(max_offset) + 1));
  return out;
}

/// Builds v from the spec; `decomposition` must be the IID of its ideal.
inline Monomial witness_from_component(const Decomposition& decomposition, const WitnessSpec& spec) {
  spec.validate();
  require_same_ring(decomposition.ideal.ring(), spec.prime.ring());
  if (!decomposition.has_component(spec.component))
    throw InvalidArgument("component is not in the irredundant irreducible decomposition");

  const auto floors = decomposition.ideal.max_exponents();
  std::vector<Exponent> e(floors.size(), 0);
  for (const auto& [var, exp] : spec.component.powers()) e[var] = exp - 1;
  for (auto var : spec.prime.complement()) {
    auto it = spec.offsets.find(var);
    e[var] = add_exponents(floors[var], it == spec.offsets.end() ? 0 : it->second);
  }
  return Monomial(std::move(e));
}

inline Monomial witness_from_component(const MonomialIdeal& ideal, const WitnessSpec& spec) {
  return witness_from_component(irreducible_decomposition(ideal), spec);
}

/// Does (I : v) equal P?
inline bool verify_witness(const MonomialIdeal& ideal, const PrimeSupport& prime, const Monomial& v) {
  require_same_ring(ideal.ring(), prime.ring());
  return colon_by_monomial(ideal, v) == prime.to_ideal();
}

/// The IID member <x_i^{v_i + 1} : i in P> determined by a valid witness.
inline IrreducibleComponent component_from_witness(const Decomposition& decomposition, const PrimeSupport& prime,
                                                   const Monomial& v) {
  if (!verify_witness(decomposition.ideal, prime, v)) throw InvalidWitness("(I : v) is not the given prime");
  std::vector<IrreducibleComponent::Power> powers;
  for (auto var : prime.vars()) powers.emplace_back(var, add_exponents(v[var], 1));
  IrreducibleComponent q(prime.ring(), std::move(powers));
  if (!decomposition.has_component(q))
    throw InternalInconsistency("component derived from a valid witness is missing from the decomposition");
  return q;
}

inline IrreducibleComponent component_from_witness(const MonomialIdeal& ideal, const PrimeSupport& prime,
                                                   const Monomial& v) {
  return component_from_witness(irreducible_decomposition(ideal), prime, v);
}

/// For squarefree I every witness of P avoids the variables of P. Returns
/// true, or throws InternalInconsistency if a verified witness does not.
inline bool squarefree_witness_check(const MonomialIdeal& ideal, const PrimeSupport& prime, const Monomial& v) {
  if (!is_squarefree(ideal)) throw InvalidArgument("ideal is not squarefree");
  if (!verify_witness(ideal, prime, v)) throw InvalidWitness("(I : v) is not the given prime");
  for (auto var : prime.vars())
    if (v[var] != 0) throw InternalInconsistency("squarefree witness has a positive exponent on the prime");
  return true;
}

// ---------------------------------------------------------------------------
// Symmetric power-pattern ideals
// ---------------------------------------------------------------------------

/// I = < x_{i_1}^{a_1} ... x_{i_k}^{a_k} : i_p pairwise distinct > for a
/// non-decreasing exponent list a_1 <= ... <= a_k.
struct SymmetricPatternIdeal {
  RingPtr ring;
  std::vector<Exponent> exps;

  std::size_t k() const noexcept { return exps.size(); }

  void validate() const {
    if (!ring) throw InvalidArgument("null ring");
    if (exps.empty()) throw InvalidArgument("pattern needs at least one exponent");
    if (exps.size() > ring->size()) throw InvalidArgument("pattern length k exceeds the number of variables");
    for (std::size_t p = 0; p < exps.size(); ++p) {
      if (exps[p] == 0) throw InvalidArgument("pattern exponents must be positive");
      if (p > 0 && exps[p] < exps[p - 1]) throw InvalidArgument("pattern exponents must be non-decreasing");
    }
  }

  /// 0-based positions where a new exponent value starts (the first is 0).
  std::vector<std::size_t> breaks() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < exps.size(); ++p)
      if (p == 0 || exps[p] != exps[p - 1]) out.push_back(p);
    return out;
  }
};

inline MonomialIdeal build_symmetric_ideal(const SymmetricPatternIdeal& spec) {
  spec.validate();
  const std::size_t n = spec.ring->size();
  const std::size_t k = spec.k();
  std::vector<Monomial> gens;
  std::vector<std::size_t> chosen;
  std::vector<bool> used(n, false);

  // Every injective assignment of pattern positions to variables.
  auto assign = [&](auto&& self) -> void {
    if (chosen.size() == k) {
      std::vector<Exponent> e(n, 0);
      for (std::size_t p = 0; p < k; ++p) e[chosen[p]] = spec.exps[p];
      gens.emplace_back(std::move(e));
      return;
    }
    for (std::size_t var = 0; var < n; ++var) {
      if (used[var]) continue;
      used[var] = true;
      chosen.push_back(var);
      self(self);
      chosen.pop_back();
      used[var] = false;
    }
  };
  assign(assign);
  return MonomialIdeal(spec.ring, std::move(gens));
}

/// Witness for the prime on `prime_vars` coming from the breakpoint with
/// index `brk` (into breaks()). The prime has n - k + k_j variables, each
/// carrying exponent a_{k_j} - 1; the complement variables, ascending, get
/// b_choices[t] >= a_{k_j + t + 1}.
inline std::pair<PrimeSupport, Monomial> symmetric_witness(const SymmetricPatternIdeal& spec, std::size_t brk,
                                                           const std::vector<std::size_t>& prime_vars,
                                                           const std::vector<Exponent>& b_choices) {
  spec.validate();
  const auto breaks = spec.breaks();
  if (brk >= breaks.size()) throw InvalidArgument("breakpoint index out of range");
  const std::size_t n = spec.ring->size();
  const std::size_t pos = breaks[brk];  // k_j - 1
  const std::size_t k = spec.k();

  PrimeSupport prime(spec.ring, prime_vars);
  if (prime.size() != prime_vars.size()) throw InvalidArgument("prime variables repeat");
  if (prime.size() != n - k + pos + 1) throw InvalidArgument("prime must have n - k + k_j variables");
  const auto complement = prime.complement();
  if (b_choices.size() != complement.size()) throw InvalidArgument("need one exponent per complement variable");

  std::vector<Exponent> e(n, 0);
  for (auto var : prime.vars()) e[var] = spec.exps[pos] - 1;
  for (std::size_t t = 0; t < complement.size(); ++t) {
    if (b_choices[t] < spec.exps[pos + t + 1]) throw InvalidArgument("complement exponent below its floor");
    e[complement[t]] = b_choices[t];
  }
  Monomial v(std::move(e));
  if (!verify_witness(build_symmetric_ideal(spec), prime, v))
    throw InternalInconsistency("symmetric-pattern witness does not verify");
  return {std::move(prime), std::move(v)};
}

// ---------------------------------------------------------------------------
// Uniqueness
// ---------------------------------------------------------------------------

struct UniqueWitness {
  Monomial witness;
};

struct NonUniqueWitnesses {
  Monomial first;
  Monomial second;
};

using UniquenessVerdict = std::variant<UniqueWitness, NonUniqueWitnesses>;

/// The witness of P is unique exactly when P = <x_1, ..., x_n> and P has a
/// single primary component. Otherwise two distinct verified witnesses are
/// returned: two floors on a complement variable when P is not maximal, or
/// the witnesses of two different components when it is.
inline UniquenessVerdict classify_uniqueness(const Decomposition& decomposition, const PrimeSupport& prime) {
  const auto comps = components_for_prime(decomposition, prime);
  const MonomialIdeal& ideal = decomposition.ideal;

  auto check = [&](const Monomial& v) {
    if (!verify_witness(ideal, prime, v)) throw InternalInconsistency("constructed witness does not verify");
  };

  const Monomial base = witness_from_component(decomposition, {prime, comps.front(), {}});
  check(base);
  if (prime.is_full() && comps.size() == 1) return UniqueWitness{base};

  Monomial other;
  if (!prime.is_full()) {
    const auto var = prime.complement().front();
    other = witness_from_component(decomposition, {prime, comps.front(), {{var, 1}}});
  } else {
    other = witness_from_component(decomposition, {prime, comps[1], {}});
  }
  check(other);
  if (other == base) throw InternalInconsistency("non-uniqueness certificate witnesses coincide");
  return NonUniqueWitnesses{base, other};
}

inline UniquenessVerdict classify_uniqueness(const MonomialIdeal& ideal, const PrimeSupport& prime) {
  return classify_uniqueness(irreducible_decomposition(ideal), prime);
}

}  // namespace monid
