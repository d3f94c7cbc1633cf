#pragma once

#include "invdiff/operators.hpp"
#include "invdiff/semigroup.hpp"

#include <optional>

namespace invdiff {

/// A basis monomial s in S whose image has the component p_v(s) != 0 at s + v outside S.
struct LeakWitness {
  Lattice point;
  Lattice shift;
  GaussRational value;

  friend bool operator==(const LeakWitness&, const LeakWitness&) = default;
};

struct MembershipVerdict {
  bool preserved = true;
  std::optional<LeakWitness> witness;
};

/// Exact decision of P(C[S]) ⊆ C[S]: every eigenpolynomial p_v must vanish on escape_set(S, v).
/// Throws DegenerateCone / UnsupportedSemigroup from normal_form.
MembershipVerdict preserves_ring(const OreOperator& p, const AffineSemigroup2D& s);

/// Re-check a witness directly by applying P to the basis monomial.
bool confirms_leak(const OreOperator& p, const AffineSemigroup2D& s, const LeakWitness& w);

/// Derivation shortcut: D preserves C[S] iff the images of the generator monomials lie in C[S].
/// Requires order <= 1 and no order-0 part.
bool derivation_preserves_generators(const OreOperator& d, const AffineSemigroup2D& s);

}  // namespace invdiff
