#pragma once

// Clutters (antichains of vertex subsets) and their squarefree edge ideals.
// Simple graphs are clutters whose edges all have two vertices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monid/core.hpp"
#include "monid/witness.hpp"

namespace monid {

/// Sorted, duplicate-free vertex indices (0-based).
using VertexSet = std::vector<std::size_t>;

inline VertexSet normalize(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Stable-set enumeration is exponential in the vertex count.
struct EnumerationLimit {
  std::size_t max_vertices = 16;
};

class Clutter {
 public:
  Clutter(std::vector<std::string> vertex_names, std::vector<VertexSet> edges)
      : ring_(make_ring(std::move(vertex_names))) {
    for (auto& e : edges) {
      e = normalize(std::move(e));
      if (e.empty()) throw InvalidArgument("clutter edges must be non-empty");
      if (e.back() >= ring_->size()) throw InvalidArgument("edge mentions an unknown vertex");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (std::size_t a = 0; a < edges.size(); ++a)
      for (std::size_t b = 0; b < edges.size(); ++b)
        if (a != b && is_subset(edges[a], edges[b]))
          throw InvalidArgument("edges do not form an antichain: " + describe(edges[a]) + " is inside " +
                                describe(edges[b]));
    edges_ = std::move(edges);
  }

  /// Vertices t1..ts.
  static Clutter with_default_names(std::size_t s, std::vector<VertexSet> edges) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < s; ++i) names.push_back("t" + std::to_string(i + 1));
    return Clutter(std::move(names), std::move(edges));
  }

  static Clutter graph(std::size_t s, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<VertexSet> sets;
    for (auto [a, b] : edges) {
      if (a == b) throw InvalidArgument("graph edges join two distinct vertices");
      sets.push_back({a, b});
    }
    return with_default_names(s, std::move(sets));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t vertex_count() const noexcept { return ring_->size(); }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }

  VertexSet all_vertices() const {
    VertexSet v(vertex_count());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
  }

 private:
  std::string describe(const VertexSet& e) const {
    std::string out = "{";
    for (std::size_t p = 0; p < e.size(); ++p) out += (p ? "," : "") + ring_->name(e[p]);
    return out + "}";
  }

  RingPtr ring_;
  std::vector<VertexSet> edges_;
};

/// t_A: the squarefree monomial on A.
inline Monomial vertex_monomial(const Clutter& c, const VertexSet& a) {
  std::vector<Exponent> e(c.vertex_count(), 0);
  for (auto v : a) e.at(v) = 1;
  return Monomial(std::move(e));
}

inline MonomialIdeal edge_ideal(const Clutter& c) {
  std::vector<Monomial> gens;
  for (const auto& e : c.edges()) gens.push_back(vertex_monomial(c, e));
  return MonomialIdeal(c.ring(), std::move(gens));
}

namespace detail {

inline void require_vertices(const Clutter& c, const VertexSet& a) {
  for (auto v : a)
    if (v >= c.vertex_count()) throw InvalidArgument("unknown vertex index " + std::to_string(v));
}

inline std::uint64_t to_mask(const VertexSet& a) {
  std::uint64_t m = 0;
  for (auto v : a) m |= std::uint64_t{1} << v;
  return m;
}

inline VertexSet from_mask(std::uint64_t m) {
  VertexSet out;
  for (std::size_t v = 0; m != 0; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

}  // namespace detail

/// A contains no edge.
inline bool is_stable(const Clutter& c, const VertexSet& a) {
  detail::require_vertices(c, a);
  const auto s = normalize(a);
  return std::none_of(c.edges().begin(), c.edges().end(), [&](const VertexSet& e) { return is_subset(e, s); });
}

/// N(A): vertices t with {t} u A containing an edge.
inline VertexSet neighbor_set(const Clutter& c, const VertexSet& a) {
  detail::require_vertices(c, a);
  const auto s = normalize(a);
  VertexSet out;
  for (std::size_t t = 0; t < c.vertex_count(); ++t) {
    auto with_t = s;
    with_t.push_back(t);
    with_t = normalize(std::move(with_t));
    if (std::any_of(c.edges().begin(), c.edges().end(), [&](const VertexSet& e) { return is_subset(e, with_t); }))
      out.push_back(t);
  }
  return out;
}

inline bool is_vertex_cover(const Clutter& c, const VertexSet& k) {
  detail::require_vertices(c, k);
  const auto s = normalize(k);
  return std::all_of(c.edges().begin(), c.edges().end(), [&](const VertexSet& e) {
    return std::any_of(e.begin(), e.end(), [&](std::size_t v) { return std::binary_search(s.begin(), s.end(), v); });
  });
}

/// K meets every edge and dropping any single vertex breaks that. Covers
/// are upward closed, so single-vertex removals decide minimality.
inline bool is_minimal_vertex_cover(const Clutter& c, const VertexSet& k) {
  const auto s = normalize(k);
  if (!is_vertex_cover(c, s)) return false;
  for (std::size_t p = 0; p < s.size(); ++p) {
    auto smaller = s;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(p));
    if (is_vertex_cover(c, smaller)) return false;
  }
  return true;
}

namespace detail {

inline void require_enumerable(const Clutter& c, const EnumerationLimit& limit) {
  if (c.vertex_count() > limit.max_vertices || c.vertex_count() > 63)
    throw LimitExceeded("clutter has " + std::to_string(c.vertex_count()) + " vertices; enumeration limit is " +
                        std::to_string(std::min<std::size_t>(limit.max_vertices, 63)));
}

// Visits every stable set by include/exclude branching, pruning any branch
// whose partial set already contains an edge.
template <typename Visit>
void for_each_stable_set(const Clutter& c, Visit&& visit) {
  std::vector<std::uint64_t> edge_masks;
  for (const auto& e : c.edges()) edge_masks.push_back(to_mask(e));
  const std::size_t s = c.vertex_count();

  auto contains_edge = [&](std::uint64_t set) {
    return std::any_of(edge_masks.begin(), edge_masks.end(), [&](std::uint64_t e) { return (e & set) == e; });
  };

  auto branch = [&](auto&& self, std::size_t v, std::uint64_t current) -> void {
    if (v == s) {
      visit(current);
      return;
    }
    self(self, v + 1, current);
    const std::uint64_t with_v = current | (std::uint64_t{1} << v);
    if (!contains_edge(with_v)) self(self, v + 1, with_v);
  };
  branch(branch, 0, 0);
}

}  // namespace detail

/// F_C: all maximal stable sets, sorted.
inline std::vector<VertexSet> maximal_stable_sets(const Clutter& c, const EnumerationLimit& limit = {}) {
  detail::require_enumerable(c, limit);
  std::vector<VertexSet> out;
  detail::for_each_stable_set(c, [&](std::uint64_t set) {
    auto a = detail::from_mask(set);
    for (std::size_t t = 0; t < c.vertex_count(); ++t) {
      if (set >> t & 1) continue;
      auto bigger = a;
      bigger.push_back(t);
      if (is_stable(c, bigger)) return;
    }
    out.push_back(std::move(a));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// A_C: stable sets whose neighbor set is a (necessarily minimal) vertex cover.
inline std::vector<VertexSet> good_stable_sets(const Clutter& c, const EnumerationLimit& limit = {}) {
  detail::require_enumerable(c, limit);
  std::vector<VertexSet> out;
  detail::for_each_stable_set(c, [&](std::uint64_t set) {
    auto a = detail::from_mask(set);
    if (is_vertex_cover(c, neighbor_set(c, a))) out.push_back(std::move(a));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// All minimal vertex covers, as complements of the maximal stable sets.
inline std::vector<VertexSet> minimal_vertex_covers(const Clutter& c, const EnumerationLimit& limit = {}) {
  std::vector<VertexSet> out;
  const std::uint64_t all = c.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c.vertex_count()) - 1;
  for (const auto& a : maximal_stable_sets(c, limit)) out.push_back(detail::from_mask(all & ~detail::to_mask(a)));
  std::sort(out.begin(), out.end());
  return out;
}

/// t_A for A = V \ P: the squarefree base of every witness of the
/// associated prime P of the edge ideal.
inline Monomial witness_base(const Clutter& c, const PrimeSupport& prime) {
  require_same_ring(c.ring(), prime.ring());
  if (!is_minimal_vertex_cover(c, prime.vars()))
    throw NotAssociated("prime is not a minimal vertex cover, so it is not associated to the edge ideal");

  const VertexSet a = prime.complement();
  if (!is_stable(c, a)) throw InternalInconsistency("complement of a minimal vertex cover is not stable");
  for (auto t : prime.vars()) {
    auto bigger = a;
    bigger.push_back(t);
    if (is_stable(c, bigger)) throw InternalInconsistency("complement of a minimal vertex cover is not maximal");
  }
  if (neighbor_set(c, a) != prime.vars()) throw InternalInconsistency("neighbor set differs from the cover");

  Monomial t_a = vertex_monomial(c, a);
  if (!verify_witness(edge_ideal(c), prime, t_a)) throw InternalInconsistency("t_A does not verify as a witness");
  return t_a;
}

}  // namespace monid
