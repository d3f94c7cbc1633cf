#pragma once

#include "invdiff/scalars.hpp"
#include "invdiff/semigroup.hpp"
#include "invdiff/torus.hpp"

#include <map>
#include <memory>
#include <stdexcept>

namespace invdiff {

struct MixedSemigroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using SemigroupPtr = std::shared_ptr<const AffineSemigroup2D>;

/// Finite Q(i)-combination of lattice monomials. `ambient()` marks elements whose support
/// may leave the semigroup; a non-ambient element lies in C[S].
class RingElement {
 public:
  using Terms = std::map<Lattice, GaussRational>;

  explicit RingElement(SemigroupPtr s) : semigroup_(std::move(s)) {}

  static RingElement monomial(SemigroupPtr s, const Lattice& point,
                              const GaussRational& coef = GaussRational(1));
  /// Ambient flag is derived from the support.
  static RingElement from_terms(SemigroupPtr s, Terms terms);

  const Terms& terms() const { return terms_; }
  const SemigroupPtr& semigroup() const { return semigroup_; }
  bool ambient() const { return ambient_; }
  bool is_zero() const { return terms_.empty(); }
  /// Every support point lies in S (independent of the flag).
  bool support_in_semigroup() const;
  GaussRational coefficient(const Lattice& point) const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
  friend RingElement operator*(const GaussRational& c, const RingElement& f);
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.terms_ == b.terms_ && *a.semigroup_ == *b.semigroup_;
  }

  friend RingElement mul(const RingElement& f, const RingElement& g);

 private:
  void add_term(const Lattice& p, const GaussRational& c);
  void check_same(const RingElement& o, const char* op) const;

  SemigroupPtr semigroup_;
  Terms terms_;
  bool ambient_ = false;
};

/// Isotypic projection: the terms of f whose weight is `lambda`.
RingElement weight_component(const RingElement& f, const TorusAction& act, const Weight& lambda);

}  // namespace invdiff
