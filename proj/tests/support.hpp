#pragma once

#include "invdiff/operators.hpp"
#include "invdiff/ring.hpp"
#include "invdiff/scalars.hpp"

#include <random>

namespace invdiff::testing {

inline GaussRational random_gauss(std::mt19937& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

inline EigenPoly random_poly(std::mt19937& rng, unsigned max_degree) {
  std::uniform_int_distribution<int> coin(0, 2);
  EigenPoly p;
  for (unsigned a = 0; a <= max_degree; ++a) {
    for (unsigned b = 0; a + b <= max_degree; ++b) {
      if (coin(rng) == 0) p.add_term(a, b, random_gauss(rng));
    }
  }
  return p;
}

inline OreOperator random_operator(std::mt19937& rng, SecondMode mode, int max_terms = 3, int span = 2,
                                   unsigned max_order = 2) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<Int> exp(-span, span);
  std::uniform_int_distribution<unsigned> ord(0, max_order);
  OreOperator p(mode);
  const int k = count(rng);
  for (int t = 0; t < k; ++t) {
    const unsigned d1 = ord(rng);
    std::uniform_int_distribution<unsigned> rest(0, max_order - d1);
    p.add_term({{exp(rng), exp(rng)}, d1, rest(rng)}, random_gauss(rng, 3));
  }
  if (p.is_zero()) p.add_term({{exp(rng), exp(rng)}, 0, 0}, 1);
  return p;
}

/// Random element supported on S with norm <= bound.
inline RingElement random_element(std::mt19937& rng, const SemigroupPtr& s, int max_terms = 3, Int bound = 4) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<Int> coord(-bound, bound);
  RingElement::Terms t;
  const int k = count(rng);
  while (static_cast<int>(t.size()) < k) {
    const Lattice v{coord(rng), coord(rng)};
    if (s->contains(v)) t[v] += random_gauss(rng, 3);
  }
  return RingElement::from_terms(s, std::move(t));
}

}  // namespace invdiff::testing
