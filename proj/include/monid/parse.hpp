#pragma once

// Text input. Monomials follow
//
//   monomial := term ('*' term)* | '1'
//   term     := var ('^' posint)?
//
// with whitespace ignored. A problem file is line oriented; '#' starts a
// comment and each non-blank line is one stanza:
//
//   ring n=8                          variables x1..x8
//   ring a, b, c                      named variables
//   ideal I = x1^4, x2^7, x1^3*x4^2
//   clutter C = {t1,t2},{t2,t3}
//   sym S = n:3 exps:1,3,3

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monid/clutter.hpp"
#include "monid/core.hpp"
#include "monid/error.hpp"
#include "monid/witness.hpp"

namespace monid {

namespace detail {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line = 1, std::size_t column_base = 0)
      : text_(text), line_(line), base_(column_base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    if (!peek_identifier()) fail("expected a name");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::uint64_t integer(std::uint64_t max = std::numeric_limits<Exponent>::max()) {
    if (!peek_digit()) fail("expected an integer");
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > max) {
        pos_ = start;
        fail("integer out of range");
      }
      ++pos_;
    }
    return value;
  }

  /// Consumes `word` when it is the next identifier.
  bool keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      return false;
    pos_ = end;
    return true;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, base_ + pos_ + 1);
  }

  std::size_t position() const noexcept { return pos_; }
  void rewind(std::size_t pos) noexcept { pos_ = pos; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t base_;
};

inline Monomial parse_monomial_at(const Ring& ring, Cursor& in) {
  std::vector<Exponent> e(ring.size(), 0);
  if (in.peek_digit()) {
    auto start = in.position();
    if (in.integer() != 1) {
      in.rewind(start);
      in.fail("the only numeric monomial is 1");
    }
    return Monomial(std::move(e));
  }
  do {
    in.skip_ws();
    const auto start = in.position();
    const std::string name = in.identifier();
    auto var = ring.index_of(name);
    if (!var) {
      in.rewind(start);
      in.fail("unknown variable '" + name + "'");
    }
    Exponent power = 1;
    if (in.eat('^')) {
      in.skip_ws();
      auto at = in.position();
      power = static_cast<Exponent>(in.integer());
      if (power == 0) {
        in.rewind(at);
        in.fail("exponents must be positive");
      }
    }
    try {
      e[*var] = add_exponents(e[*var], power);
    } catch (const ExponentOverflow&) {
      in.rewind(start);
      in.fail("exponent overflow");
    }
  } while (in.eat('*'));
  return Monomial(std::move(e));
}

inline std::vector<Monomial> parse_monomial_list_at(const Ring& ring, Cursor& in) {
  std::vector<Monomial> gens;
  do gens.push_back(parse_monomial_at(ring, in));
  while (in.eat(','));
  return gens;
}

}  // namespace detail

inline Monomial parse_monomial(const Ring& ring, std::string_view text) {
  detail::Cursor in(text);
  auto m = detail::parse_monomial_at(ring, in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return m;
}

/// "g1, g2, ...", optionally wrapped in parentheses; "0" or "(0)" is the
/// zero ideal.
inline MonomialIdeal parse_ideal(const RingPtr& ring, std::string_view text) {
  detail::Cursor in(text);
  const bool wrapped = in.eat('(');
  std::vector<Monomial> gens;
  auto start = in.position();
  if (in.peek_digit() && in.integer() == 0) {
    // zero ideal
  } else {
    in.rewind(start);
    gens = detail::parse_monomial_list_at(*ring, in);
  }
  if (wrapped) in.expect(')');
  if (!in.at_end()) in.fail("unexpected trailing input");
  return MonomialIdeal(ring, std::move(gens));
}

struct NamedIdeal {
  std::string name;
  MonomialIdeal ideal;
};

struct NamedClutter {
  std::string name;
  Clutter clutter;
};

struct NamedPattern {
  std::string name;
  SymmetricPatternIdeal pattern;
};

struct ProblemFile {
  RingPtr ring;  // null when the file declares none
  std::vector<NamedIdeal> ideals;
  std::vector<NamedClutter> clutters;
  std::vector<NamedPattern> patterns;

  bool has_name(const std::string& name) const {
    for (const auto& i : ideals)
      if (i.name == name) return true;
    for (const auto& c : clutters)
      if (c.name == name) return true;
    for (const auto& p : patterns)
      if (p.name == name) return true;
    return false;
  }
};

namespace detail {

inline void parse_ring_stanza(Cursor& in, ProblemFile& out) {
  if (out.ring) in.fail("ring declared twice");
  const auto mark = in.position();
  if (in.keyword("n") && in.eat('=')) {
    auto at = in.position();
    auto n = in.integer(4096);
    if (n == 0) {
      in.rewind(at);
      in.fail("ring needs at least one variable");
    }
    out.ring = make_ring(static_cast<std::size_t>(n));
  } else {
    in.rewind(mark);
    std::vector<std::string> names;
    do {
      in.skip_ws();
      auto at = in.position();
      names.push_back(in.identifier());
      for (std::size_t p = 0; p + 1 < names.size(); ++p)
        if (names[p] == names.back()) {
          in.rewind(at);
          in.fail("duplicate variable name '" + names.back() + "'");
        }
    } while (in.eat(','));
    out.ring = make_ring(std::move(names));
  }
}

inline void parse_ideal_stanza(Cursor& in, ProblemFile& out, std::string name) {
  if (!out.ring) in.fail("ideal declared before any ring");
  std::vector<Monomial> gens;
  auto start = in.position();
  if (in.peek_digit() && in.integer() == 0) {
    // zero ideal
  } else {
    in.rewind(start);
    gens = parse_monomial_list_at(*out.ring, in);
  }
  out.ideals.push_back({std::move(name), MonomialIdeal(out.ring, std::move(gens))});
}

inline void parse_clutter_stanza(Cursor& in, ProblemFile& out, std::string name) {
  std::vector<std::string> names = out.ring ? out.ring->names() : std::vector<std::string>{};
  std::vector<VertexSet> edges;
  do {
    in.expect('{');
    VertexSet edge;
    if (in.peek() != '}') {
      do {
        in.skip_ws();
        auto at = in.position();
        auto vertex = in.identifier();
        auto it = std::find(names.begin(), names.end(), vertex);
        if (it == names.end()) {
          if (out.ring) {
            in.rewind(at);
            in.fail("unknown vertex '" + vertex + "'");
          }
          names.push_back(vertex);
          it = names.end() - 1;
        }
        edge.push_back(static_cast<std::size_t>(it - names.begin()));
      } while (in.eat(','));
    }
    auto at = in.position();
    in.expect('}');
    if (edge.empty()) {
      in.rewind(at);
      in.fail("empty edge");
    }
    edges.push_back(std::move(edge));
  } while (in.eat(','));
  try {
    out.clutters.push_back({std::move(name), Clutter(std::move(names), std::move(edges))});
  } catch (const InvalidArgument& e) {
    in.fail(e.what());
  }
}

inline void parse_sym_stanza(Cursor& in, ProblemFile& out, std::string name) {
  if (!in.keyword("n")) in.fail("expected 'n:'");
  in.expect(':');
  auto at = in.position();
  auto n = static_cast<std::size_t>(in.integer(4096));
  if (n == 0) {
    in.rewind(at);
    in.fail("ring needs at least one variable");
  }
  if (!in.keyword("exps")) in.fail("expected 'exps:'");
  in.expect(':');
  std::vector<Exponent> exps;
  do exps.push_back(static_cast<Exponent>(in.integer()));
  while (in.eat(','));

  RingPtr ring = out.ring;
  if (ring && ring->size() != n) {
    in.rewind(at);
    in.fail("n does not match the declared ring");
  }
  if (!ring) ring = make_ring(n);
  SymmetricPatternIdeal pattern{ring, std::move(exps)};
  try {
    pattern.validate();
  } catch (const InvalidArgument& e) {
    in.fail(e.what());
  }
  out.patterns.push_back({std::move(name), std::move(pattern)});
}

}  // namespace detail

inline ProblemFile parse_problem(std::string_view text) {
  ProblemFile out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    detail::Cursor in(line, line_no);
    if (in.at_end()) continue;
    if (in.keyword("ring")) {
      detail::parse_ring_stanza(in, out);
    } else {
      enum class Kind { Ideal, Clutter, Sym } kind;
      if (in.keyword("ideal")) kind = Kind::Ideal;
      else if (in.keyword("clutter")) kind = Kind::Clutter;
      else if (in.keyword("sym")) kind = Kind::Sym;
      else in.fail("expected 'ring', 'ideal', 'clutter' or 'sym'");

      in.skip_ws();
      auto at = in.position();
      std::string name = in.identifier();
      if (out.has_name(name)) {
        in.rewind(at);
        in.fail("name '" + name + "' already used");
      }
      in.expect('=');
      in.skip_ws();
      switch (kind) {
        case Kind::Ideal: detail::parse_ideal_stanza(in, out, std::move(name)); break;
        case Kind::Clutter: detail::parse_clutter_stanza(in, out, std::move(name)); break;
        case Kind::Sym: detail::parse_sym_stanza(in, out, std::move(name)); break;
      }
    }
    if (!in.at_end()) in.fail("unexpected trailing input");
  }
  return out;
}

}  // namespace monid
