#include "doctest.h"
#include "invdiff/membership.hpp"
#include "invdiff/parser.hpp"
#include "support.hpp"

using namespace invdiff;

namespace {

const AffineSemigroup2D cone({{1, 0}, {1, 1}, {1, -1}});
const AffineSemigroup2D ruled({{1, 0}, {1, -1}, {1, 2}});
const AffineSemigroup2D cylinder({{1, 0}, {0, 1}, {0, -1}});

OreOperator cone_op(const char* t) { return parse_operator(t, Notation::cone()); }
OreOperator ruled_op(const char* t) { return parse_operator(t, Notation::ruled()); }

std::vector<OreOperator> cone_invariants() {
  return {cone_op("u*e(1)*Du + i*e(1)*Dt"), cone_op("u*e(-1)*Du - i*e(-1)*Dt"),
          cone_op("u^-1*(u*Du + i*Dt)*(u*Du - i*Dt)"), cone_op("u*Du"), cone_op("Dt"), cone_op("u"),
          cone_op("u*e(1)")};
}

std::vector<OreOperator> ruled_invariants() {
  return {ruled_op("s^-1*(2*r*Dr - s*Ds)*(r*Dr + s*Ds)"), ruled_op("r^2*s^-2*Dr + r*s^-1*Ds"), ruled_op("r*Dr"),
          ruled_op("s*Ds"), ruled_op("r"), ruled_op("r*s^-1"), ruled_op("r*s^2")};
}

// Brute force: first s in S (norm <= bound) whose image leaves S.
std::optional<Lattice> brute_leak(const OreOperator& p, const AffineSemigroup2D& s, Int bound) {
  const auto dec = p.shift_decomposition();
  for (const auto& pt : enumerate(s, bound)) {
    for (const auto& [v, poly] : dec) {
      if (!eval(poly, pt).is_zero() && !s.contains(pt + v)) return pt;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("membership examples") {
  CHECK(preserves_ring(cone_op("u^-1*(u*Du + i*Dt)*(u*Du - i*Dt)"), cone).preserved);
  const auto du = preserves_ring(cone_op("Du"), cone);
  REQUIRE_FALSE(du.preserved);
  REQUIRE(du.witness);
  CHECK(du.witness->point == Lattice{1, 1});
  CHECK(du.witness->shift == Lattice{-1, 0});
  CHECK(confirms_leak(cone_op("Du"), cone, *du.witness));
  CHECK(preserves_ring(ruled_op("s^-1*(2*r*Dr - s*Ds)*(r*Dr + s*Ds)"), ruled).preserved);
  CHECK(preserves_ring(cone_op("Du"), cylinder).preserved);
  CHECK_FALSE(preserves_ring(ruled_op("Dr"), ruled).preserved);
  CHECK_FALSE(preserves_ring(ruled_op("s^-1"), ruled).preserved);
}

TEST_CASE("unsupported semigroups are refused") {
  const AffineSemigroup2D odd({{2, 0}, {0, 2}, {1, 1}});
  CHECK_THROWS_AS(preserves_ring(cone_op("u*Du"), odd), UnsupportedSemigroup);
  const AffineSemigroup2D line({{1, 0}, {-1, 0}});
  CHECK_THROWS_AS(preserves_ring(cone_op("u*Du"), line), DegenerateCone);
}

TEST_CASE("oracle equivalence on norm <= 25") {
  std::mt19937 rng(41);
  std::vector<std::pair<OreOperator, const AffineSemigroup2D*>> cases;
  for (const auto& p : cone_invariants()) cases.emplace_back(p, &cone);
  for (const auto& p : ruled_invariants()) cases.emplace_back(p, &ruled);
  for (const auto* t : {"Du", "Dt", "e(1)", "u^-1", "e(1)*Dt", "u*Dt"}) cases.emplace_back(cone_op(t), &cone);
  for (const auto* t : {"Dr", "Ds", "r*s*Dr", "r^2*s*Dr", "r*s^2*Ds", "s*Dr"}) cases.emplace_back(ruled_op(t), &ruled);
  for (int k = 0; k < 60; ++k) {
    const AffineSemigroup2D* s = k % 3 == 0 ? &cone : k % 3 == 1 ? &ruled : &cylinder;
    const auto mode = s == &ruled ? SecondMode::Multiplicative : SecondMode::Angular;
    cases.emplace_back(testing::random_operator(rng, mode, 2, 2, 2), s);
  }
  for (const auto& [p, s] : cases) {
    const auto verdict = preserves_ring(p, *s);
    const auto leak = brute_leak(p, *s, 25);
    CHECK(verdict.preserved == !leak.has_value());
    if (!verdict.preserved) {
      REQUIRE(verdict.witness);
      CHECK(confirms_leak(p, *s, *verdict.witness));
    } else {
      CHECK_FALSE(verdict.witness);
    }
  }
}

TEST_CASE("preserved operators are closed under sum and product") {
  for (const auto& [ops, s] : {std::pair{cone_invariants(), &cone}, std::pair{ruled_invariants(), &ruled}}) {
    for (const auto& p : ops) {
      REQUIRE(preserves_ring(p, *s).preserved);
      for (const auto& q : ops) {
        CHECK(preserves_ring(p * q, *s).preserved);
        CHECK(preserves_ring(p + q, *s).preserved);
      }
    }
  }
}

TEST_CASE("generator shortcut agrees with the full test for derivations") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<Int> e(-2, 2);
  for (int k = 0; k < 300; ++k) {
    const AffineSemigroup2D* s = k % 3 == 0 ? &cone : k % 3 == 1 ? &ruled : &cylinder;
    const auto mode = s == &ruled ? SecondMode::Multiplicative : SecondMode::Angular;
    OreOperator d(mode);
    d.add_term({{e(rng), e(rng)}, 1, 0}, testing::random_gauss(rng, 2));
    if (k % 2) d.add_term({{e(rng), e(rng)}, 0, 1}, testing::random_gauss(rng, 2));
    if (d.is_zero()) continue;
    CHECK(derivation_preserves_generators(d, *s) == preserves_ring(d, *s).preserved);
  }
  CHECK(derivation_preserves_generators(cone_op("u*e(1)*Du + i*e(1)*Dt"), cone));
  CHECK(derivation_preserves_generators(ruled_op("r^2*s^-2*Dr + r*s^-1*Ds"), ruled));
  CHECK_THROWS_AS(derivation_preserves_generators(cone_op("u*Du + 1"), cone), std::invalid_argument);
}
