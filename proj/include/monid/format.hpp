#pragma once

#include <string>

#include "monid/core.hpp"
#include "monid/decomposition.hpp"

namespace monid {

/// "x2^6*x3^4*x4", variables in ring order, "^1" elided, "1" for the unit.
inline std::string to_string(const Ring& ring, const Monomial& m) {
  if (m.size() != ring.size()) throw ContextMismatch("monomial length does not match the ring");
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// "(g1, g2, ...)" with x1-heavy generators first (descending lex);
/// "(0)" for the zero ideal.
inline std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  const auto& gens = ideal.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    if (it != gens.rbegin()) out += ", ";
    out += to_string(*ideal.ring(), *it);
  }
  return out + ")";
}

inline std::string to_string(const PrimeSupport& prime) {
  std::string out = "(";
  for (std::size_t k = 0; k < prime.size(); ++k) {
    if (k > 0) out += ", ";
    out += prime.ring()->name(prime.vars()[k]);
  }
  return out + ")";
}

inline std::string to_string(const IrreducibleComponent& q) {
  std::string out = "(";
  bool first = true;
  for (const auto& [var, exp] : q.powers()) {
    if (!first) out += ", ";
    first = false;
    out += q.ring()->name(var);
    if (exp > 1) out += '^' + std::to_string(exp);
  }
  return out + ")";
}

}  // namespace monid
