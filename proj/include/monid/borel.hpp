#pragma once

// Ideals of Borel type: I : x_i^inf = I : <x_1, ..., x_i>^inf for every i.
// Equivalently, for each u in I and j < i some x_j^t (u / x_i^{nu_i(u)})
// lies in I; equivalently every associated prime is <x_1, ..., x_j>.

#include <cstddef>
#include <optional>
#include <vector>

#include "monid/core.hpp"
#include "monid/decomposition.hpp"
#include "monid/witness.hpp"

namespace monid {

/// A generator u and variables j < i (0-based) such that no power of x_j
/// times u / x_i^{nu_i(u)} lies in I.
struct BorelViolation {
  Monomial generator;
  std::size_t i;
  std::size_t j;
};

struct BorelReport {
  bool is_borel_type = false;
  std::optional<BorelViolation> violation;        // set when !is_borel_type
  std::vector<PrimeSupport> associated_primes;    // set when is_borel_type
};

/// x_j^t (u / x_i^{nu_i(u)}) with t = max{nu_j(g) : g in G(I)}. A generator
/// g divides x_j^s m for some s iff it divides it at s = t, so membership at
/// this t decides the existential.
inline Monomial borel_exchange_probe(const MonomialIdeal& ideal, const Monomial& u, std::size_t i, std::size_t j) {
  const auto bound = ideal.max_exponents()[j];
  return u.with(i, 0).with(j, add_exponents(u[j], bound));
}

inline bool prefix_prime(const PrimeSupport& prime) { return prime.vars().back() + 1 == prime.size(); }

/// Checks the exchange condition over G(I). A positive report carries the
/// associated primes, all of which are prefix primes.
inline BorelReport is_borel_type(const MonomialIdeal& ideal) {
  if (!ideal.is_proper_nonzero()) throw InvalidArgument("Borel-type test needs a proper nonzero ideal");
  const std::size_t n = ideal.num_variables();
  for (const auto& u : ideal.generators())
    for (std::size_t i = 1; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < i; ++j)
        if (!contains(ideal, borel_exchange_probe(ideal, u, i, j)))
          return BorelReport{false, BorelViolation{u, i, j}, {}};
    }

  BorelReport report{true, std::nullopt, associated_primes(ideal)};
  for (const auto& p : report.associated_primes)
    if (!prefix_prime(p)) throw InternalInconsistency("Borel-type ideal has a non-prefix associated prime");
  return report;
}

/// I : J^inf, iterating the colon to its fixed point.
inline MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  if (by.is_zero()) throw InvalidArgument("saturation by the zero ideal");
  MonomialIdeal current = ideal;
  for (;;) {
    auto next = colon_by_ideal(current, by);
    if (next == current) return current;
    current = std::move(next);
  }
}

/// Borel type straight from the definition, via saturations.
inline bool is_borel_type_by_saturation(const MonomialIdeal& ideal) {
  const auto& ring = ideal.ring();
  const std::size_t n = ring->size();
  std::vector<Monomial> prefix;
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = Monomial::variable(n, i);
    prefix.push_back(xi);
    if (saturate(ideal, MonomialIdeal(ring, {xi})) != saturate(ideal, MonomialIdeal(ring, prefix))) return false;
  }
  return true;
}

/// Adds x_j^{nu_i(u)} u / x_i^{nu_i(u)} for every generator u and j < i
/// until nothing changes. The result is of Borel type.
inline MonomialIdeal borel_closure(const MonomialIdeal& ideal) {
  MonomialIdeal current = ideal;
  const std::size_t n = ideal.num_variables();
  for (;;) {
    auto gens = current.generators();
    for (const auto& u : current.generators())
      for (std::size_t i = 1; i < n; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < i; ++j) gens.push_back(u.with(i, 0).with(j, add_exponents(u[j], u[i])));
      }
    MonomialIdeal next(current.ring(), std::move(gens));
    if (next == current) return current;
    current = std::move(next);
  }
}

/// v = x_1^{a_1 - 1} ... x_k^{a_k - 1} x_{k+1}^{b} for the component
/// Q = <x_1^{a_1}, ..., x_k^{a_k}> of the prefix prime P = <x_1, ..., x_k>,
/// where b = max nu_{k+1} over G(I) + extra. When k = n there is no extra
/// factor.
inline Monomial borel_witness(const Decomposition& decomposition, const PrimeSupport& prime,
                              const IrreducibleComponent& component, Exponent extra = 0) {
  const MonomialIdeal& ideal = decomposition.ideal;
  require_same_ring(ideal.ring(), prime.ring());
  if (!is_borel_type(ideal).is_borel_type) throw InvalidArgument("ideal is not of Borel type");
  if (!prefix_prime(prime)) throw InvalidArgument("prime is not of the form <x_1, ..., x_k>");
  if (component.support() != prime.vars())
    throw InvalidArgument("component support does not match the prime");
  if (!decomposition.has_component(component))
    throw InvalidArgument("component is not in the irredundant irreducible decomposition");

  const std::size_t n = ideal.num_variables();
  const std::size_t k = prime.size();
  std::vector<Exponent> e(n, 0);
  for (const auto& [var, exp] : component.powers()) e[var] = exp - 1;
  if (k < n) e[k] = add_exponents(ideal.max_exponents()[k], extra);
  return Monomial(std::move(e));
}

inline Monomial borel_witness(const MonomialIdeal& ideal, const PrimeSupport& prime,
                              const IrreducibleComponent& component, Exponent extra = 0) {
  return borel_witness(irreducible_decomposition(ideal), prime, component, extra);
}

}  // namespace monid
