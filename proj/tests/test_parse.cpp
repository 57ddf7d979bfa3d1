#include <gtest/gtest.h>

#include "monid/format.hpp"
#include "monid/parse.hpp"

using namespace monid;

namespace {

void expect_error_at(std::string_view text, std::size_t line, std::size_t column) {
  try {
    parse_problem(text);
    FAIL() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(ParseMonomial, Grammar) {
  Ring r(3);
  EXPECT_EQ(parse_monomial(r, "x1^2 * x3"), (Monomial{2, 0, 1}));
  EXPECT_EQ(parse_monomial(r, "x1*x1^2"), (Monomial{3, 0, 0}));
  EXPECT_EQ(parse_monomial(r, "1"), Monomial::unit(3));
  EXPECT_THROW(parse_monomial(r, "x1^0"), ParseError);
  EXPECT_THROW(parse_monomial(r, "x4"), ParseError);
  EXPECT_THROW(parse_monomial(r, "2"), ParseError);
  EXPECT_THROW(parse_monomial(r, "x1 x2"), ParseError);
  EXPECT_THROW(parse_monomial(r, "x1^99999999999"), ParseError);
  EXPECT_THROW(parse_monomial(r, "x1^4294967295*x1"), ParseError);
}

TEST(ParseIdeal, Forms) {
  auto r = make_ring(2);
  EXPECT_EQ(parse_ideal(r, "(x1, x2^2)"), parse_ideal(r, "x2^2,x1"));
  EXPECT_TRUE(parse_ideal(r, "0").is_zero());
  EXPECT_TRUE(parse_ideal(r, "(0)").is_zero());
  EXPECT_TRUE(parse_ideal(r, "1").is_unit());
  EXPECT_THROW(parse_ideal(r, "(x1"), ParseError);
}

TEST(ParseProblem, AllStanzas) {
  auto p = parse_problem(R"(# comment
ring n=4
ideal I = x1^2, x2*x4   # trailing comment

clutter C = {x1,x2},{x2,x3}
sym S = n:4 exps:1,2
)");
  ASSERT_TRUE(p.ring);
  EXPECT_EQ(p.ring->size(), 4u);
  ASSERT_EQ(p.ideals.size(), 1u);
  EXPECT_EQ(to_string(p.ideals[0].ideal), "(x1^2, x2*x4)");
  ASSERT_EQ(p.clutters.size(), 1u);
  EXPECT_EQ(p.clutters[0].clutter.edges().size(), 2u);
  ASSERT_EQ(p.patterns.size(), 1u);
  EXPECT_EQ(p.patterns[0].pattern.k(), 2u);
}

TEST(ParseProblem, NamedRingAndFreeClutter) {
  auto p = parse_problem("ring a, b, n\nideal I = a*n, b\n");
  EXPECT_EQ(p.ring->names(), (std::vector<std::string>{"a", "b", "n"}));
  auto q = parse_problem("clutter G = {u,v},{v,w}\n");
  EXPECT_FALSE(q.ring);
  EXPECT_EQ(q.clutters[0].clutter.ring()->names(), (std::vector<std::string>{"u", "v", "w"}));
}

TEST(ParseProblem, ErrorsCarryPositions) {
  expect_error_at("ideal I = x1\n", 1, 11);
  expect_error_at("ring n=2\nideal I = x1, x3\n", 2, 15);
  expect_error_at("ring n=2\nideal I = x1^0\n", 2, 14);
  expect_error_at("ring n=2\nring n=3\n", 2, 5);
  expect_error_at("ring n=2\nideal I = x1\nideal I = x2\n", 3, 7);
  expect_error_at("ring n=2\nbogus\n", 2, 1);
  expect_error_at("clutter C = {a,b},{a,b,c}\n", 1, 26);
  expect_error_at("ring n=3\nsym S = n:2 exps:1\n", 2, 11);
  expect_error_at("ring a, a\n", 1, 9);
}
