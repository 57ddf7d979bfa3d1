#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// that tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monid/borel.hpp"
#include "monid/clutter.hpp"
#include "monid/core.hpp"
#include "monid/decomposition.hpp"
#include "monid/format.hpp"
#include "monid/parse.hpp"
#include "monid/witness.hpp"

namespace monid::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;

namespace detail {

/// Usage mistakes detected after option parsing (bad --prime etc.).
class UsageError : public Error {
 public:
  using Error::Error;
};

inline json monomial_json(const Ring& ring, const Monomial& m) {
  json out = json::object();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) out[ring.name(i)] = m[i];
  return out;
}

inline json ideal_json(const MonomialIdeal& ideal) {
  json out = json::array();
  // same order as the text output
  const auto& gens = ideal.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) out.push_back(monomial_json(*ideal.ring(), *it));
  return out;
}

inline json prime_json(const PrimeSupport& p) {
  json out = json::array();
  for (auto v : p.vars()) out.push_back(p.ring()->name(v));
  return out;
}

inline json component_json(const IrreducibleComponent& q) {
  json exps = json::object();
  for (const auto& [var, exp] : q.powers()) exps[q.ring()->name(var)] = exp;
  return json{{"support", prime_json(q.prime())}, {"exponents", exps}};
}

inline json ring_json(const Ring& ring) { return json{{"n", ring.size()}, {"variables", ring.names()}}; }

/// The fixed top-level document; commands fill in what applies.
inline json base_document(const MonomialIdeal& ideal, const std::optional<Decomposition>& dec) {
  json doc;
  doc["ring"] = ring_json(*ideal.ring());
  doc["ideal"] = ideal_json(ideal);
  doc["components"] = nullptr;
  doc["associated_primes"] = nullptr;
  if (dec) {
    doc["components"] = json::array();
    for (const auto& q : dec->components) doc["components"].push_back(component_json(q));
    doc["associated_primes"] = json::array();
    for (const auto& p : associated_primes(*dec)) doc["associated_primes"].push_back(prime_json(p));
  }
  doc["witness"] = nullptr;
  doc["verified"] = nullptr;
  return doc;
}

inline std::optional<Decomposition> try_decompose(const MonomialIdeal& ideal) {
  if (!ideal.is_proper_nonzero()) return std::nullopt;
  return irreducible_decomposition(ideal);
}

inline Decomposition decompose_or_throw(const MonomialIdeal& ideal) {
  if (!ideal.is_proper_nonzero()) throw UsageError("the ideal must be proper and nonzero");
  return irreducible_decomposition(ideal);
}

inline bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

/// "--prime 1" (index into Ass) or "--prime x1,x2" (variable list).
inline PrimeSupport resolve_prime(const std::string& text, const RingPtr& ring,
                                  const std::vector<PrimeSupport>& candidates) {
  if (all_digits(text)) {
    auto index = std::stoull(text);
    if (index >= candidates.size())
      throw UsageError("prime index " + text + " out of range; there are " + std::to_string(candidates.size()) +
                       " associated primes");
    return candidates[index];
  }
  std::vector<std::size_t> vars;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    auto idx = ring->index_of(name);
    if (!idx) throw UsageError("unknown variable '" + name + "' in --prime");
    vars.push_back(*idx);
  }
  if (vars.empty()) throw UsageError("--prime needs at least one variable");
  return PrimeSupport(ring, std::move(vars));
}

inline std::vector<std::size_t> resolve_vars(const std::string& text, const RingPtr& ring, const char* flag) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto idx = ring->index_of(name);
    if (!idx) throw UsageError(std::string("unknown variable '") + name + "' in " + flag);
    out.push_back(*idx);
  }
  return out;
}

inline void list_primes(std::ostream& out, const std::vector<PrimeSupport>& primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) out << "P_" << i << " = " << to_string(primes[i]) << "\n";
}

inline void list_components(std::ostream& out, const std::vector<IrreducibleComponent>& comps) {
  for (std::size_t i = 0; i < comps.size(); ++i) out << "Q_" << i << " = " << to_string(comps[i]) << "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  std::string file;
  std::string format = "text";
};

struct Loaded {
  ProblemFile problem;

  const MonomialIdeal& ideal(const std::string& name) const {
    if (problem.ideals.empty()) throw UsageError("the problem file declares no ideal");
    if (name.empty()) return problem.ideals.front().ideal;
    for (const auto& i : problem.ideals)
      if (i.name == name) return i.ideal;
    throw UsageError("no ideal named '" + name + "'");
  }

  const Clutter& clutter(const std::string& name) const {
    if (problem.clutters.empty()) throw UsageError("the problem file declares no clutter");
    if (name.empty()) return problem.clutters.front().clutter;
    for (const auto& c : problem.clutters)
      if (c.name == name) return c.clutter;
    throw UsageError("no clutter named '" + name + "'");
  }

  const SymmetricPatternIdeal& pattern(const std::string& name) const {
    if (problem.patterns.empty()) throw UsageError("the problem file declares no sym stanza");
    if (name.empty()) return problem.patterns.front().pattern;
    for (const auto& p : problem.patterns)
      if (p.name == name) return p.pattern;
    throw UsageError("no sym stanza named '" + name + "'");
  }
};

inline Loaded load(const std::string& path) {
  auto text = read_file(path);
  try {
    return Loaded{parse_problem(text)};
  } catch (const ParseError& e) {
    throw ParseError(e.message() + " (in " + path + ")", e.line(), e.column());
  }
}

}  // namespace detail

/// Runs the CLI. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;

  CLI::App app{"Irreducible decompositions, associated primes and colon witnesses of monomial ideals"};
  app.name("monid");
  app.require_subcommand(1);

  Common common;
  std::string ideal_name, clutter_name, sym_name;
  std::string prime_text, v_text, by_name, prime_vars_text, b_text;
  std::optional<std::size_t> component_index;
  std::vector<std::string> offset_texts;
  std::optional<std::uint64_t> seed;
  Exponent max_offset = 8;
  bool list_only = false;
  bool cross_check = false;
  std::size_t max_vertices = 16;
  std::optional<std::size_t> break_index;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", common.file, "Problem file")->required();
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_ideal = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--ideal", ideal_name, "Name of the ideal stanza (default: the first)");
  };

  auto* decompose = app.add_subcommand("decompose", "Irredundant irreducible decomposition");
  add_ideal(decompose);
  auto* assprimes = app.add_subcommand("assprimes", "Associated primes");
  add_ideal(assprimes);

  auto* witness = app.add_subcommand("witness", "Construct v with P = (I : v)");
  add_ideal(witness);
  witness->add_option("--prime", prime_text, "Prime index or comma-separated variables");
  witness->add_option("--component", component_index, "Index of the P-primary component");
  witness->add_option("--offset", offset_texts, "var=k increment over the minimal floor (repeatable)");
  witness->add_option("--seed", seed, "Draw offsets from this seed");
  witness->add_option("--max-offset", max_offset, "Largest seeded offset");
  witness->add_flag("--list", list_only, "List primes (and components of --prime) and exit");

  auto* verify = app.add_subcommand("verify", "Check whether (I : v) = P");
  add_ideal(verify);
  verify->add_option("--prime", prime_text, "Prime index or comma-separated variables")->required();
  verify->add_option("--v", v_text, "Candidate monomial")->required();

  auto* colon = app.add_subcommand("colon", "Colon ideal (I : v) or (I : J)");
  add_ideal(colon);
  auto* colon_v = colon->add_option("--v", v_text, "Monomial divisor");
  auto* colon_by = colon->add_option("--by", by_name, "Name of an ideal stanza to divide by");
  colon_v->excludes(colon_by);

  auto* borel = app.add_subcommand("borel", "Borel-type detection and witnesses");
  add_ideal(borel);
  borel->add_flag("--cross-check", cross_check, "Also decide Borel type through saturations");

  auto* uniqueness = app.add_subcommand("uniqueness", "Is the witness of P unique?");
  add_ideal(uniqueness);
  uniqueness->add_option("--prime", prime_text, "Prime index or comma-separated variables")->required();

  auto* clutter_base = app.add_subcommand("clutter-base", "Squarefree witness t_A of edge-ideal primes");
  add_common(clutter_base);
  clutter_base->add_option("--clutter", clutter_name, "Name of the clutter stanza (default: the first)");
  clutter_base->add_option("--prime", prime_text, "Prime index or comma-separated vertices");
  clutter_base->add_option("--max-vertices", max_vertices, "Enumeration limit");

  auto* symgen = app.add_subcommand("symgen", "Symmetric power-pattern ideals");
  add_common(symgen);
  symgen->add_option("--sym", sym_name, "Name of the sym stanza (default: the first)");
  symgen->add_option("--break", break_index, "Breakpoint index (0-based) for a witness");
  symgen->add_option("--prime-vars", prime_vars_text, "Comma-separated prime variables");
  symgen->add_option("--b", b_text, "Comma-separated complement exponents");

  std::vector<const char*> argv{"monid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const bool as_json = common.format == "json";
  auto emit = [&](const json& doc) { out << doc.dump(2) << "\n"; };

  try {
    const Loaded loaded = load(common.file);

    if (decompose->parsed() || assprimes->parsed()) {
      const auto& ideal = loaded.ideal(ideal_name);
      const auto dec = decompose_or_throw(ideal);
      const auto primes = associated_primes(dec);
      if (as_json) {
        emit(base_document(ideal, dec));
      } else if (decompose->parsed()) {
        out << "I = " << to_string(ideal) << "\n";
        out << "irredundant irreducible decomposition (" << dec.components.size() << " components):\n";
        list_components(out, dec.components);
      } else {
        out << "associated primes of I = " << to_string(ideal) << ":\n";
        list_primes(out, primes);
      }
      return kExitOk;
    }

    if (witness->parsed()) {
      const auto& ideal = loaded.ideal(ideal_name);
      const auto dec = decompose_or_throw(ideal);
      const auto primes = associated_primes(dec);
      if (prime_text.empty()) {
        if (list_only) {
          list_primes(out, primes);
          return kExitOk;
        }
        err << "error: --prime is required; the associated primes are:\n";
        list_primes(err, primes);
        return kExitInput;
      }
      const auto prime = resolve_prime(prime_text, ideal.ring(), primes);
      if (!is_associated(dec, prime)) throw UsageError(to_string(prime) + " is not an associated prime");
      const auto comps = components_for_prime(dec, prime);
      if (list_only) {
        out << to_string(prime) << "-primary components:\n";
        list_components(out, comps);
        return kExitOk;
      }
      std::size_t pick = 0;
      if (component_index) {
        if (*component_index >= comps.size())
          throw UsageError("component index out of range; there are " + std::to_string(comps.size()));
        pick = *component_index;
      } else if (comps.size() > 1) {
        err << "error: " << to_string(prime) << " has " << comps.size()
            << " primary components; choose one with --component:\n";
        list_components(err, comps);
        return kExitInput;
      }

      WitnessSpec spec{prime, comps[pick], {}};
      if (seed) spec.offsets = seeded_offsets(prime, *seed, max_offset);
      for (const auto& text : offset_texts) {
        auto eq = text.find('=');
        if (eq == std::string::npos) throw UsageError("--offset expects var=k, got '" + text + "'");
        auto var = ideal.ring()->index_of(text.substr(0, eq));
        const auto value = text.substr(eq + 1);
        if (!var) throw UsageError("unknown variable in --offset '" + text + "'");
        if (!all_digits(value)) throw UsageError("--offset expects a non-negative integer, got '" + text + "'");
        spec.offsets[*var] = static_cast<Exponent>(std::stoul(value));
      }

      const auto v = witness_from_component(dec, spec);
      const auto quotient = colon_by_monomial(ideal, v);
      const bool ok = quotient == prime.to_ideal();
      if (as_json) {
        auto doc = base_document(ideal, dec);
        doc["witness"] = json{{"prime", prime_json(prime)},
                              {"component", component_json(spec.component)},
                              {"monomial", monomial_json(*ideal.ring(), v)},
                              {"text", to_string(*ideal.ring(), v)}};
        doc["verified"] = ok;
        emit(doc);
      } else {
        out << "P = " << to_string(prime) << "\n";
        out << "Q = " << to_string(spec.component) << "\n";
        out << "v = " << to_string(*ideal.ring(), v) << "\n";
        out << "(I : v) = " << to_string(quotient) << "\n";
        out << (ok ? "VERIFIED" : "FAILED") << "\n";
      }
      return ok ? kExitOk : kExitVerification;
    }

    if (verify->parsed()) {
      const auto& ideal = loaded.ideal(ideal_name);
      const auto dec = try_decompose(ideal);
      const auto primes = dec ? associated_primes(*dec) : std::vector<PrimeSupport>{};
      const auto prime = resolve_prime(prime_text, ideal.ring(), primes);
      const auto v = parse_monomial(*ideal.ring(), v_text);
      const auto quotient = colon_by_monomial(ideal, v);
      const bool ok = quotient == prime.to_ideal();
      if (as_json) {
        auto doc = base_document(ideal, dec);
        doc["witness"] = json{{"prime", prime_json(prime)},
                              {"monomial", monomial_json(*ideal.ring(), v)},
                              {"text", to_string(*ideal.ring(), v)}};
        doc["verified"] = ok;
        doc["colon"] = ideal_json(quotient);
        emit(doc);
      } else {
        out << "(I : " << to_string(*ideal.ring(), v) << ") = " << to_string(quotient) << "\n";
        out << "P = " << to_string(prime) << "\n";
        out << (ok ? "VERIFIED" : "FAILED") << "\n";
      }
      return ok ? kExitOk : kExitVerification;
    }

    if (colon->parsed()) {
      const auto& ideal = loaded.ideal(ideal_name);
      MonomialIdeal quotient = ideal;
      std::string label;
      if (!by_name.empty()) {
        quotient = colon_by_ideal(ideal, loaded.ideal(by_name));
        label = by_name;
      } else if (!v_text.empty()) {
        auto v = parse_monomial(*ideal.ring(), v_text);
        quotient = colon_by_monomial(ideal, v);
        label = to_string(*ideal.ring(), v);
      } else {
        throw UsageError("colon needs --v or --by");
      }
      if (as_json) {
        auto doc = base_document(ideal, try_decompose(ideal));
        doc["colon"] = ideal_json(quotient);
        emit(doc);
      } else {
        out << "(I : " << label << ") = " << to_string(quotient) << "\n";
      }
      return kExitOk;
    }

    if (borel->parsed()) {
      const auto& ideal = loaded.ideal(ideal_name);
      const auto dec = decompose_or_throw(ideal);
      const auto report = is_borel_type(ideal);
      std::optional<bool> by_saturation;
      if (cross_check) by_saturation = is_borel_type_by_saturation(ideal);
      const bool agree = !by_saturation || *by_saturation == report.is_borel_type;

      json witnesses = json::array();
      bool all_ok = true;
      std::ostringstream text;
      if (report.is_borel_type) {
        text << "I is of Borel type; associated primes:\n";
        for (const auto& p : report.associated_primes)
          for (const auto& q : components_for_prime(dec, p)) {
            auto v = borel_witness(dec, p, q);
            bool ok = verify_witness(ideal, p, v);
            all_ok = all_ok && ok;
            text << "  P = " << to_string(p) << "  Q = " << to_string(q) << "  v = " << to_string(*ideal.ring(), v)
                 << "  " << (ok ? "VERIFIED" : "FAILED") << "\n";
            witnesses.push_back(json{{"prime", prime_json(p)},
                                     {"component", component_json(q)},
                                     {"monomial", monomial_json(*ideal.ring(), v)},
                                     {"text", to_string(*ideal.ring(), v)},
                                     {"verified", ok}});
          }
      } else {
        const auto& bad = *report.violation;
        text << "I is not of Borel type: for u = " << to_string(*ideal.ring(), bad.generator) << ", no power of "
             << ideal.ring()->name(bad.j) << " times u / " << ideal.ring()->name(bad.i) << "^" << bad.generator[bad.i]
             << " lies in I\n";
      }
      if (by_saturation)
        text << "saturation check: " << (*by_saturation ? "Borel type" : "not Borel type")
             << (agree ? " (agrees)" : " (DISAGREES)") << "\n";

      if (as_json) {
        auto doc = base_document(ideal, dec);
        json b{{"is_borel_type", report.is_borel_type}};
        if (report.violation)
          b["violation"] = json{{"generator", monomial_json(*ideal.ring(), report.violation->generator)},
                                {"i", ideal.ring()->name(report.violation->i)},
                                {"j", ideal.ring()->name(report.violation->j)}};
        if (by_saturation) b["saturation_agrees"] = agree;
        b["witnesses"] = witnesses;
        doc["borel"] = b;
        if (report.is_borel_type) doc["verified"] = all_ok;
        emit(doc);
      } else {
        out << text.str();
      }
      return all_ok && agree ? kExitOk : kExitVerification;
    }

    if (uniqueness->parsed()) {
      const auto& ideal = loaded.ideal(ideal_name);
      const auto dec = decompose_or_throw(ideal);
      const auto prime = resolve_prime(prime_text, ideal.ring(), associated_primes(dec));
      if (!is_associated(dec, prime)) throw UsageError(to_string(prime) + " is not an associated prime");
      const auto verdict = classify_uniqueness(dec, prime);
      const auto& ring = *ideal.ring();
      if (as_json) {
        auto doc = base_document(ideal, dec);
        if (auto* u = std::get_if<UniqueWitness>(&verdict)) {
          doc["witness"] = json{{"prime", prime_json(prime)}, {"monomial", monomial_json(ring, u->witness)},
                                {"text", to_string(ring, u->witness)}};
          doc["uniqueness"] = json{{"unique", true}};
        } else {
          const auto& nu = std::get<NonUniqueWitnesses>(verdict);
          doc["witness"] = json{{"prime", prime_json(prime)}, {"monomial", monomial_json(ring, nu.first)},
                                {"text", to_string(ring, nu.first)}};
          doc["uniqueness"] = json{{"unique", false},
                                   {"witnesses", {to_string(ring, nu.first), to_string(ring, nu.second)}}};
        }
        doc["verified"] = true;
        emit(doc);
      } else if (auto* u = std::get_if<UniqueWitness>(&verdict)) {
        out << "UNIQUE: v = " << to_string(ring, u->witness) << "\n";
      } else {
        const auto& nu = std::get<NonUniqueWitnesses>(verdict);
        out << "NOT UNIQUE: v = " << to_string(ring, nu.first) << " and v' = " << to_string(ring, nu.second)
            << " both verify\n";
      }
      return kExitOk;
    }

    if (clutter_base->parsed()) {
      const auto& c = loaded.clutter(clutter_name);
      const auto ideal = edge_ideal(c);
      const EnumerationLimit limit{max_vertices};
      std::vector<PrimeSupport> primes;
      for (const auto& cover : minimal_vertex_covers(c, limit)) primes.emplace_back(c.ring(), cover);

      std::vector<PrimeSupport> targets = primes;
      if (!prime_text.empty()) targets = {resolve_prime(prime_text, c.ring(), primes)};

      json doc;
      doc["ring"] = ring_json(*c.ring());
      doc["ideal"] = ideal_json(ideal);
      // Squarefree: the IID is the intersection of the minimal primes.
      doc["components"] = json::array();
      doc["associated_primes"] = json::array();
      for (const auto& p : primes) {
        std::vector<IrreducibleComponent::Power> powers;
        for (auto v : p.vars()) powers.emplace_back(v, 1);
        doc["components"].push_back(component_json(IrreducibleComponent(c.ring(), powers)));
        doc["associated_primes"].push_back(prime_json(p));
      }
      json bases = json::array();
      for (const auto& p : targets) {
        auto base = witness_base(c, p);
        if (!as_json) out << "P = " << to_string(p) << "  t_A = " << to_string(*c.ring(), base) << "  VERIFIED\n";
        bases.push_back(json{{"prime", prime_json(p)},
                             {"monomial", monomial_json(*c.ring(), base)},
                             {"text", to_string(*c.ring(), base)}});
      }
      doc["witness"] = targets.size() == 1 ? bases.front() : bases;
      doc["verified"] = true;
      if (as_json) emit(doc);
      return kExitOk;
    }

    if (symgen->parsed()) {
      const auto& pattern = loaded.pattern(sym_name);
      const auto ideal = build_symmetric_ideal(pattern);
      json doc = base_document(ideal, std::nullopt);
      if (!as_json) out << "I = " << to_string(ideal) << "\n";
      if (break_index) {
        const auto vars = resolve_vars(prime_vars_text, pattern.ring, "--prime-vars");
        std::vector<Exponent> bs;
        if (!b_text.empty()) {
          std::stringstream ss(b_text);
          std::string item;
          while (std::getline(ss, item, ',')) {
            if (!all_digits(item)) throw UsageError("--b expects non-negative integers");
            bs.push_back(static_cast<Exponent>(std::stoul(item)));
          }
        }
        auto [prime, v] = symmetric_witness(pattern, *break_index, vars, bs);
        if (as_json) {
          doc["witness"] = json{{"prime", prime_json(prime)},
                                {"monomial", monomial_json(*pattern.ring, v)},
                                {"text", to_string(*pattern.ring, v)}};
          doc["verified"] = true;
        } else {
          out << "P = " << to_string(prime) << "\n";
          out << "v = " << to_string(*pattern.ring, v) << "\n";
          out << "VERIFIED\n";
        }
      }
      if (as_json) emit(doc);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InternalInconsistency& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace monid::cli
