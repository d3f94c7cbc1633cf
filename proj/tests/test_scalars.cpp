#include "doctest.h"
#include "invdiff/linalg.hpp"
#include "invdiff/scalars.hpp"
#include "support.hpp"

using namespace invdiff;

namespace {

const EigenPoly n = EigenPoly::n_var();
const EigenPoly m = EigenPoly::m_var();

}  // namespace

TEST_CASE("GaussRational normalises and prints canonically") {
  GaussRational a(Rational(2, 4), Rational(-3, 6));
  CHECK(a.re() == Rational(1, 2));
  CHECK(a.str() == "(1/2 - 1/2*i)");
  CHECK(GaussRational::i().str() == "i");
  CHECK((-GaussRational::i()).str() == "-i");
  CHECK(GaussRational(Rational(0), Rational(-2)).str() == "-2*i");
  CHECK(GaussRational(-3).str() == "-3");
  CHECK(GaussRational::i() * GaussRational::i() == GaussRational(-1));
  CHECK_THROWS_AS(GaussRational().inverse(), std::domain_error);
}

TEST_CASE("Q(i) field identities on random values") {
  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    const auto a = testing::random_gauss(rng);
    const auto b = testing::random_gauss(rng);
    const auto c = testing::random_gauss(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inverse() == GaussRational(1));
    CHECK(a - a == GaussRational());
  }
}

TEST_CASE("eval") {
  CHECK(eval(n * n - m * m, {3, 1}) == GaussRational(8));
  for (Int k = -4; k <= 4; ++k) CHECK(eval(n - m, {k, k}).is_zero());
  CHECK(eval(n + m, {1, 1}) == GaussRational(2));
  CHECK(eval(EigenPoly::falling_n(3), {5, 0}) == GaussRational(60));
}

TEST_CASE("vanishes_on_ray") {
  CHECK(vanishes_on_ray(n - m, LatticeRay({1, 1}, {1, 1})));
  CHECK_FALSE(vanishes_on_ray(n + m, LatticeRay({1, 1}, {1, 1})));
  CHECK(restrict_to_ray(n + m, LatticeRay({1, 1}, {1, 1})) ==
        std::vector<GaussRational>{GaussRational(2), GaussRational(2)});
  CHECK(vanishes_on_ray(n * n - m * m, LatticeRay({1, -1}, {1, -1})));
  CHECK_THROWS_AS(LatticeRay({0, 0}, {2, 2}), std::invalid_argument);
}

TEST_CASE("ray vanishing agrees with evaluation at deg+1 ray points") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-4, 4);
  const std::vector<Lattice> dirs{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, -1}};
  for (int k = 0; k < 100; ++k) {
    EigenPoly p = testing::random_poly(rng, 3);
    const LatticeRay ray({coord(rng), coord(rng)}, dirs[static_cast<std::size_t>(k) % dirs.size()]);
    if (k % 3 == 0) {
      // Force a factor vanishing on the ray's line.
      const Lattice d = ray.direction;
      const EigenPoly line = GaussRational(d.m) * n - GaussRational(d.n) * m -
                             EigenPoly(GaussRational(d.m * ray.base.n - d.n * ray.base.m));
      p = p * line;
    }
    bool all_zero = true;
    for (Int t = 0; t <= static_cast<Int>(p.degree()) + 1; ++t) {
      if (!eval(p, ray.at(t)).is_zero()) all_zero = false;
    }
    CHECK(vanishes_on_ray(p, ray) == all_zero);
    if (k % 3 == 0) CHECK(vanishes_on_ray(p, ray));
  }
}

TEST_CASE("nullspace and span") {
  Matrix a(2, 3);
  a(0, 0) = 1;
  a(0, 1) = GaussRational::i();
  a(1, 2) = 2;
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == Vector{-GaussRational::i(), GaussRational(1), GaussRational(0)});
  CHECK(rank(a) == 2);

  SpanBuilder span(3);
  CHECK(span.add({1, 0, 1}));
  CHECK(span.add({0, 1, 1}));
  CHECK_FALSE(span.add({1, 1, 2}));
  CHECK(span.contains({2, -1, 1}));
  CHECK_FALSE(span.contains({0, 0, 1}));
}
