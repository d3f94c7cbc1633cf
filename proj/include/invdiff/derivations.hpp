#pragma once

#include "invdiff/linalg.hpp"
#include "invdiff/operators.hpp"
#include "invdiff/semigroup.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace invdiff {

/// Box of allowed coefficient exponents.
struct Window {
  Int a_min = 0, a_max = 0, b_min = 0, b_max = 0;

  static Window box(Int a, Int b) { return {-a, a, -b, b}; }
  bool contains(const Lattice& v) const { return a_min <= v.n && v.n <= a_max && b_min <= v.m && v.m <= b_max; }
};

/// (alpha, beta) of alpha*x^{c1} D1 + beta*x^{c2} D2 at a fixed shift.
using Direction = std::array<GaussRational, 2>;

/// Coefficient exponents of the D1 and D2 terms of a derivation with the given shift.
Lattice d1_coefficient(const Lattice& shift);
Lattice d2_coefficient(const Lattice& shift, SecondMode mode);

/// The derivation alpha*x^{c1} D1 + beta*x^{c2} D2 with shift v.
OreOperator derivation_at(const Lattice& shift, const Direction& dir, SecondMode mode);

struct DerivationBasis {
  SecondMode mode = SecondMode::Angular;
  Window window;
  std::vector<OreOperator> elements;
  /// Solution space per shift (only nonzero spaces are listed), normalised echelon directions.
  std::map<Lattice, std::vector<Direction>> by_shift;

  std::size_t dimension() const { return elements.size(); }
  /// Dimension of the solution space at shift v (0 if absent).
  std::size_t dimension_at(const Lattice& v) const;
  /// P is a combination of the basis elements (so in particular a derivation supported in the window).
  bool spans(const OreOperator& p) const;
};

/// All shifts v for which at least one coefficient exponent lands in the window.
std::vector<Lattice> window_shifts(const Window& w, SecondMode mode);

/// Exact windowed solve of the ring-preservation conditions for order-1 operators without order-0 part.
DerivationBasis solve_derivations(const AffineSemigroup2D& s, const Window& w, SecondMode mode);

/// A claimed family: at every shift v with applies(v), the direction is a derivation.
struct DerivationFamily {
  std::string name;
  Direction direction;
  std::function<bool(const Lattice& shift)> applies;
};

struct ClassificationMismatch {
  Lattice shift;
  std::size_t solved_dimension = 0;
  std::size_t claimed_dimension = 0;
  /// A solved derivation outside the claim, or a claimed operator that is not a derivation.
  OreOperator example;
  bool missing_from_claim = false;
};

/// Shift-by-shift comparison of the solved space with the span of the applicable family directions
/// (restricted to directions whose coefficients fit the window).
std::vector<ClassificationMismatch> classification_mismatches(const AffineSemigroup2D& s, const Window& w,
                                                              SecondMode mode,
                                                              const std::vector<DerivationFamily>& families);

inline bool verify_classification(const AffineSemigroup2D& s, const Window& w, SecondMode mode,
                                  const std::vector<DerivationFamily>& families) {
  return classification_mismatches(s, w, mode, families).empty();
}

}  // namespace invdiff

namespace invdiff {

/// Families describing the derivations of the double cone C[u, u e(1), u e(-1)]:
/// q*D1 with q in u*A, q*D2 with q in A, and the A-multiples of the two raising/lowering fields.
std::vector<DerivationFamily> double_cone_families(const AffineSemigroup2D& s);

/// The derivation families of C[r, r/s, r s^2] as usually stated: q*D1 for q off the two boundary
/// lines, q*D2 for such q or q in s*B, and B-multiples of r^2/s^2 D1 + r/s D2.
std::vector<DerivationFamily> ruled_surface_families(const AffineSemigroup2D& s);

/// Corrected version: q*D1 needs q, q/s and q*s^2 in B, and multiples of s*D2 - 2r*D1 by monomials of
/// the saturated cone (gaps included) are added.
std::vector<DerivationFamily> ruled_surface_families_corrected(const AffineSemigroup2D& s);

}  // namespace invdiff
