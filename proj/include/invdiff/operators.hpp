#pragma once

#include "invdiff/ring.hpp"
#include "invdiff/scalars.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace invdiff {

struct ZeroOperator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MixedConvention : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// How the second derivative acts on the second lattice coordinate.
///   Angular:        D2 e^{ib theta} = i b e^{ib theta}        (shift 0)
///   Multiplicative: D2 s^b = b s^{b-1}                        (shift -1)
enum class SecondMode { Angular, Multiplicative };

/// Names used when printing and parsing operators.
struct Notation {
  SecondMode mode = SecondMode::Angular;
  std::string first = "u";
  std::string second = "e";
  std::string d1 = "Du";
  std::string d2 = "Dt";

  static Notation cone() { return {}; }
  static Notation ruled() { return {SecondMode::Multiplicative, "r", "s", "Dr", "Ds"}; }
};

/// x^{coef.n} chi^{coef.m} D1^{d1} D2^{d2}
struct TermKey {
  Lattice coef;
  unsigned d1 = 0;
  unsigned d2 = 0;

  unsigned order() const { return d1 + d2; }
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Lattice shift -> eigen-coefficient: applying the operator to the monomial at s gives
/// sum_v p_v(s) * (monomial at s + v).
using ShiftDecomposition = std::map<Lattice, EigenPoly>;

/// Top-order part with D1, D2 replaced by commuting symbols xi1, xi2.
struct PrincipalSymbol {
  std::map<TermKey, GaussRational> terms;
  unsigned order = 0;

  friend PrincipalSymbol operator*(const PrincipalSymbol& a, const PrincipalSymbol& b);
  friend bool operator==(const PrincipalSymbol&, const PrincipalSymbol&) = default;
  std::string str(const Notation& names) const;
};

/// Differential operator with Laurent-monomial coefficients in normal form
/// (coefficients to the left of all derivatives).
class OreOperator {
 public:
  using Terms = std::map<TermKey, GaussRational>;

  explicit OreOperator(SecondMode mode = SecondMode::Angular) : mode_(mode) {}

  static OreOperator scalar(SecondMode mode, const GaussRational& c);
  static OreOperator monomial(SecondMode mode, const Lattice& exponent,
                              const GaussRational& c = GaussRational(1));
  static OreOperator d1(SecondMode mode);
  static OreOperator d2(SecondMode mode);
  static OreOperator term(SecondMode mode, const TermKey& key, const GaussRational& c);

  SecondMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned order() const;
  GaussRational coefficient(const TermKey& key) const;

  void add_term(const TermKey& key, const GaussRational& c);

  OreOperator& operator+=(const OreOperator& o);
  OreOperator& operator-=(const OreOperator& o);
  friend OreOperator operator+(OreOperator a, const OreOperator& b) { return a += b; }
  friend OreOperator operator-(OreOperator a, const OreOperator& b) { return a -= b; }
  OreOperator operator-() const;
  friend OreOperator operator*(const GaussRational& c, const OreOperator& p);
  /// Composition (p after q), normal ordered.
  friend OreOperator operator*(const OreOperator& p, const OreOperator& q);
  friend bool operator==(const OreOperator&, const OreOperator&) = default;

  ShiftDecomposition shift_decomposition() const;
  PrincipalSymbol principal_symbol() const;

  std::string str(const Notation& names) const;
  std::string str() const;

 private:
  void check_mode(const OreOperator& o) const;

  SecondMode mode_;
  Terms terms_;
};

OreOperator commutator(const OreOperator& p, const OreOperator& q);

/// Derivative action on a ring element; the result is ambient iff its support leaves S.
RingElement apply(const OreOperator& p, const RingElement& f);

/// a (a-1) ... (a-k+1)
Int falling_factorial(Int a, unsigned k);

}  // namespace invdiff
