#include "doctest.h"
#include "invdiff/parser.hpp"
#include "support.hpp"

using namespace invdiff;

namespace {
const Notation kCone = Notation::cone();
const Notation kRuled = Notation::ruled();
}  // namespace

TEST_CASE("parse the worked operators") {
  const auto r = parse_operator("u*e(1)*Du + i*e(1)*Dt", kCone);
  CHECK(r.terms().size() == 2);
  CHECK(r.coefficient({{1, 1}, 1, 0}) == GaussRational(1));
  CHECK(r.coefficient({{0, 1}, 0, 1}) == GaussRational::i());

  const auto d = parse_operator("u^-1*(u*Du + i*Dt)*(u*Du - i*Dt)", kCone);
  for (const auto& [v, p] : d.shift_decomposition()) CHECK(v == Lattice{-1, 0});

  CHECK(parse_operator("Du*u", kCone) == parse_operator("u*Du + 1", kCone));
}

TEST_CASE("aliases and literals") {
  CHECK(parse_operator("D1", kCone) == parse_operator("Du", kCone));
  CHECK(parse_operator("D2", kRuled) == parse_operator("Ds", kRuled));
  CHECK(parse_operator("3/6", kCone) == OreOperator::scalar(SecondMode::Angular, GaussRational(Rational(1, 2))));
  CHECK(parse_operator("(-1/2 + 1/2*i)", kCone).str() == "-(1/2 - 1/2*i)");
  CHECK(parse_operator("s^-2", kRuled) == OreOperator::monomial(SecondMode::Multiplicative, {0, -2}));
  CHECK(parse_operator("(2*u)^-1", kCone) ==
        OreOperator::monomial(SecondMode::Angular, {-1, 0}, GaussRational(Rational(1, 2))));
  CHECK(parse_operator("(Du + 1)^0", kCone) == OreOperator::scalar(SecondMode::Angular, 1));
  CHECK(parse_operator("u - -u", kCone) == parse_operator("2*u", kCone));
}

TEST_CASE("symbol table references") {
  SymbolTable table;
  table.emplace("R", parse_operator("u*e(1)*Du + i*e(1)*Dt", kCone));
  table.emplace("S", parse_operator("u*e(-1)*Du - i*e(-1)*Dt", kCone));
  CHECK(parse_operator("R*S - S*R", kCone, table).str() == "-2*i*Dt");
  table.emplace("T", parse_operator("r", kRuled));
  CHECK_THROWS_AS(parse_operator("T", kCone, table), SyntaxError);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(parse_operator("", kCone), SyntaxError);
  CHECK_THROWS_AS(parse_operator("u +", kCone), SyntaxError);
  CHECK_THROWS_AS(parse_operator("(u", kCone), SyntaxError);
  CHECK_THROWS_AS(parse_operator("u )", kCone), SyntaxError);
  CHECK_THROWS_AS(parse_operator("Du^-1", kCone), SyntaxError);
  CHECK_THROWS_AS(parse_operator("(u + 1)^-1", kCone), SyntaxError);
  CHECK_THROWS_AS(parse_operator("1/0", kCone), SyntaxError);
  CHECK_THROWS_AS(parse_operator("x", kCone), UnknownSymbol);
  CHECK_THROWS_AS(parse_operator("r", kCone), UnknownSymbol);
  CHECK_THROWS_AS(parse_operator("e(1)", kRuled), UnknownSymbol);
  try {
    parse_operator("u + 2*q", kCone);
    FAIL("expected UnknownSymbol");
  } catch (const UnknownSymbol& e) {
    CHECK(e.symbol == "q");
    CHECK(e.position == 6);
  }
  try {
    parse_operator("u $ 1", kCone);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("print/parse round trip") {
  std::mt19937 rng(31);
  for (int k = 0; k < 100; ++k) {
    const bool angular = k % 2 == 0;
    const auto& names = angular ? kCone : kRuled;
    const auto p = testing::random_operator(rng, names.mode, 4, 3, 3);
    const auto text = p.str(names);
    const auto back = parse_operator(text, names);
    CHECK(back == p);
    CHECK(back.str(names) == text);
  }
}
