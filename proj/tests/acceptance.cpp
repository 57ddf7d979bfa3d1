// Acceptance suite. Prints one PASS/FAIL line per criterion; thresholds and
// seeds are fixed here. `acceptance --criterion N` runs a single criterion.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monid/monid.hpp"
#include "oracle.hpp"

using namespace monid;

namespace {

constexpr double kSessionSeconds = 1.0;
constexpr double kTheoremSuiteSeconds = 60.0;

constexpr std::uint64_t kCorpusSeed = 20240531;
constexpr std::size_t kCorpusSize = 500;
constexpr oracle::IdealShape kCorpusShape{6, 5, 8};

constexpr std::uint64_t kBoxSeed = 4242;
constexpr std::size_t kBoxIdeals = 100;
constexpr oracle::IdealShape kBoxShape{4, 3, 6};

constexpr std::uint64_t kGraphSeed = 77;
constexpr std::size_t kGraphSamples = 50;
constexpr std::size_t kRandomClutters = 20;

constexpr std::uint64_t kBorelSeed = 515;
constexpr std::size_t kBorelIdeals = 100;
constexpr oracle::IdealShape kBorelShape{5, 4, 6};

constexpr std::uint64_t kUniquenessSeed = 909;
constexpr std::size_t kUniquenessIdeals = 100;
constexpr oracle::IdealShape kUniquenessShape{4, 4, 6};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 10) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<MonomialIdeal>& corpus() {
  static const auto c = oracle::corpus(kCorpusSeed, kCorpusSize, kCorpusShape);
  return c;
}

std::string show(const Ring& r, const Monomial& m) { return to_string(r, m); }

// 1 ------------------------------------------------------------------------

Outcome session_reproduction() {
  Outcome o;
  const auto start = Clock::now();
  auto ring = make_ring(8);
  auto ideal = parse_ideal(ring, "x1^4, x2^7, x3^5, x1^3*x4^2, x2^4*x4^2, x3*x4^2, x4^5, x4^2*x8^2, x1*x8^8");
  auto dec = irreducible_decomposition(ideal);
  PrimeSupport p1(ring, {0, 1, 2, 3}), p2(ring, {0, 1, 2, 3, 7});

  o.check(associated_primes(dec) == std::vector<PrimeSupport>{p1, p2}, "Ass(I) differs");
  auto c1 = components_for_prime(dec, p1);
  o.check(c1.size() == 1 && c1[0].to_ideal() == parse_ideal(ring, "x1, x2^7, x3^5, x4^2"),
          "P1-primary component differs");
  auto c2 = components_for_prime(dec, p2);
  IrreducibleComponent q2(ring, {{0, 3}, {1, 4}, {2, 1}, {3, 5}, {7, 2}});
  o.check(c2.size() == 2 && std::find(c2.begin(), c2.end(), q2) != c2.end(), "P2 components differ");
  o.check(colon_by_monomial(ideal, parse_monomial(*ring, "x2^6*x3^4*x4*x5^5*x6^5*x7^2*x8^13")) == p1.to_ideal(),
          "first colon differs");
  o.check(colon_by_monomial(ideal, parse_monomial(*ring, "x1^2*x2^3*x4^4*x5^2*x7^8*x8")) == p2.to_ideal(),
          "second colon differs");

  const double elapsed = seconds_since(start);
  o.check(elapsed < kSessionSeconds, "took " + std::to_string(elapsed) + " s");
  std::ostringstream d;
  d << "exact match, " << elapsed * 1000 << " ms (limit " << kSessionSeconds * 1000 << " ms)";
  o.detail = d.str();
  return o;
}

// 2 ------------------------------------------------------------------------

Outcome six_variable_example() {
  Outcome o;
  auto ring = make_ring(6);
  auto ideal = parse_ideal(ring, "x1*x3^5, x2^4*x5^3, x2^4*x4^4, x1^5*x4^2, x1*x6^8");
  auto dec = irreducible_decomposition(ideal);
  PrimeSupport p(ring, {0, 1});
  o.check(is_associated(dec, p), "P not associated");
  for (const char* text : {"x3^5*x4^4", "x3^5*x5^3", "x6^8*x4^4", "x6^8*x5^3"}) {
    auto v = parse_monomial(*ring, text);
    o.check(verify_witness(ideal, p, v),
            std::string("(I : ") + text + ") = " + to_string(colon_by_monomial(ideal, v)) + ", not P");
  }
  o.check(!verify_witness(ideal, p, parse_monomial(*ring, "x3^5*x5^2")), "x3^5*x5^2 unexpectedly verifies");
  auto verdict = classify_uniqueness(dec, p);
  if (auto* nu = std::get_if<NonUniqueWitnesses>(&verdict)) {
    o.check(nu->first != nu->second, "NonUnique witnesses coincide");
    o.check(verify_witness(ideal, p, nu->first) && verify_witness(ideal, p, nu->second),
            "NonUnique witnesses do not verify");
    o.detail = "NonUnique: " + show(*ring, nu->first) + ", " + show(*ring, nu->second);
  } else {
    o.check(false, "classified Unique");
  }
  return o;
}

// 3 ------------------------------------------------------------------------

Outcome theorem_suite() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(kCorpusSeed + 3);
  std::size_t checked = 0;
  for (const auto& ideal : corpus()) {
    auto dec = irreducible_decomposition(ideal);
    for (const auto& p : associated_primes(dec))
      for (const auto& q : components_for_prime(dec, p)) {
        const auto comp = p.complement();
        std::vector<std::map<std::size_t, Exponent>> specs{{}};
        for (std::size_t s = 0; s < 3 * comp.size(); ++s) {
          std::map<std::size_t, Exponent> offsets;
          for (auto var : comp) offsets[var] = static_cast<Exponent>(rng() % 3);
          specs.push_back(std::move(offsets));
        }
        for (const auto& offsets : specs) {
          auto v = witness_from_component(dec, {p, q, offsets});
          ++checked;
          o.check(verify_witness(ideal, p, v), to_string(ideal) + " P=" + to_string(p) + " v=" +
                                                   show(*ideal.ring(), v));
        }
      }
  }
  const double elapsed = seconds_since(start);
  o.check(elapsed < kTheoremSuiteSeconds, "took " + std::to_string(elapsed) + " s");
  std::ostringstream d;
  d << checked << " witnesses over " << corpus().size() << " ideals, " << elapsed << " s (limit "
    << kTheoremSuiteSeconds << " s)";
  o.detail = d.str();
  return o;
}

// 4 ------------------------------------------------------------------------

Outcome decomposition_suite() {
  Outcome o;
  std::mt19937_64 rng(kCorpusSeed + 4);
  for (const auto& ideal : corpus()) {
    auto dec = irreducible_decomposition(ideal);
    const auto name = to_string(ideal);
    o.check(recombine(ideal.ring(), dec.components) == ideal, name + ": intersection differs");
    if (dec.components.size() > 1)
      for (std::size_t drop = 0; drop < dec.components.size(); ++drop) {
        auto rest = dec.components;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
        o.check(recombine(ideal.ring(), rest) != ideal, name + ": component " + std::to_string(drop) + " redundant");
      }
    auto gens = ideal.generators();
    const auto n = ideal.num_variables();
    for (const auto& g : ideal.generators())
      gens.push_back(multiply(g, Monomial::variable(n, rng() % n, 1 + rng() % 3)));
    std::shuffle(gens.begin(), gens.end(), rng);
    o.check(irreducible_decomposition(MonomialIdeal(ideal.ring(), gens)).components == dec.components,
            name + ": presentation changes the decomposition");
  }
  o.detail = std::to_string(corpus().size()) + " ideals";
  return o;
}

// 5 ------------------------------------------------------------------------

Outcome box_equivalence() {
  Outcome o;
  std::mt19937_64 rng(kBoxSeed);
  std::size_t points = 0;
  for (std::size_t t = 0; t < kBoxIdeals; ++t) {
    auto i = oracle::random_ideal(rng, kBoxShape);
    const auto n = i.num_variables();
    const auto j = oracle::random_ideal_in(rng, i.ring(), kBoxShape);
    std::vector<Exponent> ve(n);
    for (auto& x : ve) x = static_cast<Exponent>(rng() % 4);
    const Monomial v(ve);
    const auto gi = oracle::to_gens(i), gj = oracle::to_gens(j);
    const auto col = colon_by_monomial(i, v);
    const auto both = intersect(i, j);
    // one past the largest exponent in play covers every staircase corner
    oracle::for_each_in_box(oracle::Vec(n, 4 + 3), [&](const oracle::Vec& a) {
      ++points;
      Monomial m(std::vector<Exponent>(a.begin(), a.end()));
      o.check(contains(i, m) == oracle::member(gi, a), "contains: " + to_string(i));
      o.check(contains(col, m) == oracle::colon_member(gi, oracle::to_vec(v), a), "colon: " + to_string(i));
      o.check(contains(both, m) == (oracle::member(gi, a) && oracle::member(gj, a)), "intersect: " + to_string(i));
    });
  }
  o.detail = std::to_string(kBoxIdeals) + " ideals, " + std::to_string(points) + " box points";
  return o;
}

// 6 ------------------------------------------------------------------------

void check_clutter(Outcome& o, const Clutter& c) {
  const auto expected = oracle::minimal_covers(c.vertex_count(), c.edges());
  const auto ideal = edge_ideal(c);
  std::set<VertexSet> ass;
  for (const auto& p : associated_primes(ideal)) ass.insert(p.vars());
  const auto name = to_string(ideal);
  o.check(ass == expected, name + ": Ass differs from minimal covers");
  for (const auto& k : expected) {
    PrimeSupport p(c.ring(), k);
    auto v = witness_base(c, p);
    o.check(v == vertex_monomial(c, p.complement()), name + ": base is not t_{V \\ P}");
    o.check(verify_witness(ideal, p, v), name + ": base does not verify");
    for (auto var : k) o.check(v[var] == 0, name + ": base meets P");
  }
}

Outcome clutter_suite() {
  Outcome o;
  std::mt19937_64 rng(kGraphSeed);
  std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>> graphs;
  for (std::size_t s = 2; s <= 6; ++s)
    for (auto& g : oracle::connected_graphs(s)) graphs.emplace_back(s, std::move(g));
  std::shuffle(graphs.begin(), graphs.end(), rng);
  graphs.resize(std::min(graphs.size(), kGraphSamples));
  for (const auto& [s, edges] : graphs) check_clutter(o, Clutter::graph(s, edges));
  for (std::size_t t = 0; t < kRandomClutters; ++t) check_clutter(o, oracle::random_clutter(rng, 3 + rng() % 6));
  o.detail = std::to_string(graphs.size()) + " connected graphs, " + std::to_string(kRandomClutters) + " clutters";
  return o;
}

// 7 ------------------------------------------------------------------------

Outcome borel_suite() {
  Outcome o;
  std::mt19937_64 rng(kBorelSeed);
  std::size_t borel = 0, witnesses = 0;
  for (std::size_t t = 0; t < kBorelIdeals; ++t) {
    auto ideal = oracle::random_ideal(rng, kBorelShape);
    if (t % 2 == 0) ideal = borel_closure(ideal);
    const auto name = to_string(ideal);
    const auto report = is_borel_type(ideal);
    o.check(report.is_borel_type == is_borel_type_by_saturation(ideal), name + ": detectors disagree");
    if (t % 2 == 0) o.check(report.is_borel_type, name + ": closure is not Borel type");
    if (!report.is_borel_type) continue;
    ++borel;
    auto dec = irreducible_decomposition(ideal);
    for (const auto& p : associated_primes(dec)) {
      o.check(prefix_prime(p), name + ": non-prefix prime " + to_string(p));
      for (const auto& q : components_for_prime(dec, p)) {
        auto v = borel_witness(dec, p, q);
        ++witnesses;
        o.check(verify_witness(ideal, p, v), name + ": Borel witness fails for " + to_string(q));
        for (std::size_t k = p.size() + 1; k < ideal.num_variables(); ++k)
          o.check(v[k] == 0, name + ": witness uses more than one extra variable");
      }
    }
  }
  o.detail = std::to_string(kBorelIdeals) + " ideals, " + std::to_string(borel) + " of Borel type, " +
             std::to_string(witnesses) + " witnesses";
  return o;
}

// 8 ------------------------------------------------------------------------

Outcome roundtrip_suite() {
  Outcome o;
  std::mt19937_64 rng(kCorpusSeed + 8);
  std::size_t roundtrips = 0, searched = 0, found = 0;
  for (const auto& ideal : corpus()) {
    auto dec = irreducible_decomposition(ideal);
    const auto name = to_string(ideal);
    for (const auto& p : associated_primes(dec))
      for (const auto& q : components_for_prime(dec, p)) {
        auto v = witness_from_component(dec, {p, q, seeded_offsets(p, rng(), 2)});
        ++roundtrips;
        try {
          o.check(component_from_witness(dec, p, v) == q, name + ": roundtrip lands elsewhere");
        } catch (const Error& e) {
          o.check(false, name + ": " + e.what());
        }
      }
    if (ideal.num_variables() > 3) continue;
    ++searched;
    const auto n = ideal.num_variables();
    auto hi = oracle::max_exponents(oracle::to_gens(ideal), n);
    for (auto& x : hi) x += 2;
    for (const auto& p : associated_primes(dec))
      for (const auto& w : oracle::witnesses_in_box(oracle::to_gens(ideal), n, p.vars(), hi)) {
        ++found;
        Monomial v(std::vector<Exponent>(w.begin(), w.end()));
        try {
          o.check(dec.has_component(component_from_witness(dec, p, v)), name + ": witness maps outside the IID");
        } catch (const Error& e) {
          o.check(false, name + ": " + e.what());
        }
      }
  }
  o.detail = std::to_string(roundtrips) + " roundtrips, " + std::to_string(found) + " box witnesses over " +
             std::to_string(searched) + " ideals with n <= 3";
  return o;
}

// 9 ------------------------------------------------------------------------

Outcome uniqueness_suite() {
  Outcome o;
  std::mt19937_64 rng(kUniquenessSeed);
  std::size_t unique = 0, non_unique = 0;
  for (std::size_t t = 0; t < kUniquenessIdeals; ++t) {
    auto ideal = oracle::random_ideal(rng, kUniquenessShape);
    auto dec = irreducible_decomposition(ideal);
    const auto name = to_string(ideal);
    for (const auto& p : associated_primes(dec)) {
      const bool expect_unique = p.is_full() && components_for_prime(dec, p).size() == 1;
      auto verdict = classify_uniqueness(dec, p);
      if (auto* nu = std::get_if<NonUniqueWitnesses>(&verdict)) {
        ++non_unique;
        o.check(!expect_unique, name + ": " + to_string(p) + " should be Unique");
        o.check(nu->first != nu->second, name + ": witnesses coincide");
        o.check(verify_witness(ideal, p, nu->first) && verify_witness(ideal, p, nu->second),
                name + ": NonUnique witness fails");
      } else {
        ++unique;
        o.check(expect_unique, name + ": " + to_string(p) + " should be NonUnique");
        o.check(verify_witness(ideal, p, std::get<UniqueWitness>(verdict).witness), name + ": Unique witness fails");
      }
    }
  }
  o.detail = std::to_string(unique) + " Unique, " + std::to_string(non_unique) + " NonUnique";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "session reproduction", session_reproduction},
      {2, "six-variable non-uniqueness example", six_variable_example},
      {3, "witness construction property suite", theorem_suite},
      {4, "decomposition oracle suite", decomposition_suite},
      {5, "membership/colon/intersection box equivalence", box_equivalence},
      {6, "squarefree/clutter suite", clutter_suite},
      {7, "Borel suite", borel_suite},
      {8, "witness/component roundtrip", roundtrip_suite},
      {9, "uniqueness classifier", uniqueness_suite},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    for (const auto& f : o.failures) std::cout << "      " << f << "\n";
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
