#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace invdiff {

using Int = std::int64_t;
using Rational = mpq_class;

/// A point of the exponent lattice Z^2.
struct Lattice {
  Int n = 0;
  Int m = 0;

  friend auto operator<=>(const Lattice&, const Lattice&) = default;
  friend bool operator==(const Lattice&, const Lattice&) = default;

  Lattice operator+(const Lattice& o) const { return {n + o.n, m + o.m}; }
  Lattice operator-(const Lattice& o) const { return {n - o.n, m - o.m}; }
  Lattice operator-() const { return {-n, -m}; }
  Lattice operator*(Int t) const { return {n * t, m * t}; }
};

/// Max-norm used for all truncations.
inline Int norm(const Lattice& v) {
  const Int a = v.n < 0 ? -v.n : v.n;
  const Int b = v.m < 0 ? -v.m : v.m;
  return a > b ? a : b;
}

std::ostream& operator<<(std::ostream& os, const Lattice& v);
std::string to_string(const Lattice& v);

/// Element re + im*i of Q(i). Rationals are kept canonical by GMP.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(Int re) : re_(static_cast<long>(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
  /// Arbitrary total order (lexicographic on re, im) so values can key containers.
  friend bool operator<(const GaussRational& a, const GaussRational& b) {
    const int c = cmp(a.re_, b.re_);
    return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
  }

  /// Canonical text: `3`, `-1/2`, `i`, `-2*i`, `(1 + 3/2*i)`.
  std::string str() const;

 private:
  Rational re_ = 0;
  Rational im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

GaussRational pow(const GaussRational& base, unsigned exponent);

/// Polynomial p(n, m) over Q(i); keys are exponent pairs (deg_n, deg_m).
class EigenPoly {
 public:
  using Terms = std::map<std::pair<unsigned, unsigned>, GaussRational>;

  EigenPoly() = default;
  explicit EigenPoly(const GaussRational& constant);

  static EigenPoly n_var();
  static EigenPoly m_var();
  /// Falling factorial x (x-1) ... (x-k+1) in the chosen variable.
  static EigenPoly falling_n(unsigned k);
  static EigenPoly falling_m(unsigned k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  void add_term(unsigned dn, unsigned dm, const GaussRational& c);

  EigenPoly& operator+=(const EigenPoly& o);
  EigenPoly& operator-=(const EigenPoly& o);
  friend EigenPoly operator+(EigenPoly a, const EigenPoly& b) { return a += b; }
  friend EigenPoly operator-(EigenPoly a, const EigenPoly& b) { return a -= b; }
  friend EigenPoly operator*(const EigenPoly& a, const EigenPoly& b);
  friend EigenPoly operator*(const GaussRational& c, const EigenPoly& p);
  friend bool operator==(const EigenPoly&, const EigenPoly&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

GaussRational eval(const EigenPoly& p, const Lattice& point);

/// {base + t*direction : t in Z>=0}, direction primitive.
struct LatticeRay {
  Lattice base;
  Lattice direction;

  LatticeRay(Lattice base, Lattice direction);
  Lattice at(Int t) const { return base + direction * t; }

  friend auto operator<=>(const LatticeRay&, const LatticeRay&) = default;
  friend bool operator==(const LatticeRay&, const LatticeRay&) = default;
};

std::ostream& operator<<(std::ostream& os, const LatticeRay& r);

/// Coefficients (in t) of p(base + t*direction); index k holds the t^k coefficient.
std::vector<GaussRational> restrict_to_ray(const EigenPoly& p, const LatticeRay& ray);

/// Exact identity test: p vanishes at every point of the ray.
bool vanishes_on_ray(const EigenPoly& p, const LatticeRay& ray);

Int gcd(Int a, Int b);

}  // namespace invdiff
