#include "doctest.h"
#include "invdiff/ring.hpp"
#include "support.hpp"

#include <set>

using namespace invdiff;

namespace {

const auto cone = std::make_shared<const AffineSemigroup2D>(std::vector<Lattice>{{1, 0}, {1, 1}, {1, -1}});
const auto ruled = std::make_shared<const AffineSemigroup2D>(std::vector<Lattice>{{1, 0}, {1, -1}, {1, 2}});

RingElement mono(const SemigroupPtr& s, Lattice p, GaussRational c = 1) { return RingElement::monomial(s, p, c); }

}  // namespace

TEST_CASE("mul examples") {
  CHECK(mono(cone, {1, 1}) * mono(cone, {1, -1}) == mono(cone, {2, 0}));
  CHECK(mono(ruled, {1, -1}) * mono(ruled, {1, 2}) == mono(ruled, {2, 1}));
  const auto one = mono(cone, {0, 0});
  const auto u = mono(cone, {1, 0});
  CHECK((one + u) * (one - u) == one - mono(cone, {2, 0}));
  CHECK_FALSE(((one + u) * (one - u)).ambient());
}

TEST_CASE("ambient flag") {
  CHECK(mono(cone, {0, 1}).ambient());
  CHECK_FALSE(mono(cone, {3, 1}).ambient());
  CHECK(mono(ruled, {1, 1}).ambient());
  // OR of the inputs even when the product lands back in S
  const auto prod = mono(cone, {-1, 0}) * mono(cone, {2, 0});
  CHECK(prod.ambient());
  CHECK(prod.support_in_semigroup());
}

TEST_CASE("mixed semigroups are rejected") {
  CHECK_THROWS_AS(mono(cone, {1, 0}) * mono(ruled, {1, 0}), MixedSemigroup);
  CHECK_THROWS_AS(mono(cone, {1, 0}) + mono(ruled, {1, 0}), MixedSemigroup);
  // an equal semigroup built separately is fine
  const auto cone2 = std::make_shared<const AffineSemigroup2D>(cone->generators());
  CHECK(mono(cone, {1, 0}) * mono(cone2, {1, 0}) == mono(cone, {2, 0}));
}

TEST_CASE("mul is associative and commutative") {
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    const auto& s = k % 2 ? cone : ruled;
    const auto f = testing::random_element(rng, s);
    const auto g = testing::random_element(rng, s);
    const auto h = testing::random_element(rng, s);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g).support_in_semigroup());
  }
}

TEST_CASE("weight_component examples") {
  const auto f = mono(cone, {1, 0}) + mono(cone, {1, 1});
  CHECK(weight_component(f, TorusAction::scaling(), {1}) == f);
  CHECK(weight_component(f, TorusAction::rotation(), {0}) == mono(cone, {1, 0}));
  const auto one = mono(cone, {0, 0});
  for (const auto& act : {TorusAction::scaling(), TorusAction::rotation()}) {
    CHECK(weight_component(one, act, {3}).is_zero());
  }
  CHECK(weight_component(one, TorusAction::full(), {0, 1}).is_zero());
}

TEST_CASE("grading completeness, idempotence and orthogonality") {
  std::mt19937 rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto& s = k % 2 ? cone : ruled;
    const auto f = testing::random_element(rng, s, 6, 5);
    for (const auto& act : {TorusAction::scaling(), TorusAction::rotation(), TorusAction::full()}) {
      std::set<Weight> weights;
      for (const auto& [p, c] : f.terms()) weights.insert(act.weight(p));
      RingElement sum(s);
      for (const auto& w : weights) {
        const auto part = weight_component(f, act, w);
        sum += part;
        CHECK(weight_component(part, act, w) == part);
        for (const auto& other : weights) {
          if (other != w) CHECK(weight_component(part, act, other).is_zero());
        }
      }
      CHECK(sum == f);
    }
  }
}

TEST_CASE("grading is multiplicative") {
  std::mt19937 rng(9);
  const auto act = TorusAction::full();
  for (int k = 0; k < 50; ++k) {
    const auto f = testing::random_element(rng, ruled, 4, 5);
    const auto g = testing::random_element(rng, ruled, 4, 5);
    for (const auto& [p, a] : f.terms()) {
      for (const auto& [q, b] : g.terms()) {
        const auto w1 = act.weight(p), w2 = act.weight(q), w = act.weight(p + q);
        CHECK(w[0] == w1[0] + w2[0]);
        CHECK(w[1] == w1[1] + w2[1]);
      }
    }
  }
}

TEST_CASE("torus action construction") {
  CHECK_THROWS_AS(TorusAction("bad", {}), std::invalid_argument);
  CHECK_THROWS_AS(TorusAction("bad", {{1, 0}, {0, 1}, {1, 1}}), std::invalid_argument);
  CHECK(TorusAction::trivial().is_trivial());
  CHECK_FALSE(TorusAction::rotation().is_trivial());
  CHECK(to_string(Weight{2}) == "2");
  CHECK(to_string(Weight{1, -3}) == "(1,-3)");
}
