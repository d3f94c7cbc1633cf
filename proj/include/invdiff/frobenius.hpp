#pragma once

#include "invdiff/operators.hpp"
#include "invdiff/semigroup.hpp"
#include "invdiff/torus.hpp"

#include <optional>
#include <set>
#include <vector>

namespace invdiff {

/// Truncated monomial basis of the weight-lambda part of C[S].
struct MultiplicitySpace {
  Weight weight;
  std::vector<Lattice> basis;
  /// The whole (finite) weight space fits inside the truncation.
  bool complete = false;

  std::size_t dimension() const { return basis.size(); }
};

/// Bound on the norm of every point of weight lambda in the saturated cone, or nullopt when that
/// set is unbounded. An empty fibre has bound 0.
std::optional<Int> fibre_norm_bound(const AffineSemigroup2D& s, const TorusAction& act, const Weight& lambda);

MultiplicitySpace multiplicity_space(const AffineSemigroup2D& s, const TorusAction& act, const Weight& lambda,
                                     Int truncation);

/// Every weight space is finite-dimensional, i.e. the only invariant monomial is 1.
bool finite_multiplicities(const AffineSemigroup2D& s, const TorusAction& act);

/// Every shift of P has weight zero.
bool is_invariant(const OreOperator& p, const TorusAction& act);

struct SpectrumReport {
  std::set<Weight> weights;
  std::set<Weight> generator_weights;
  std::size_t rank = 0;
};

SpectrumReport spectrum_and_rank(const AffineSemigroup2D& s, const TorusAction& act, Int bound);

}  // namespace invdiff
