#pragma once

#include "invdiff/scalars.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invdiff {

struct DegenerateCone : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The semigroup lies outside the class with a ray/point gap certificate.
struct UnsupportedSemigroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integer linear functional v -> a*n + b*m.
struct Functional {
  Int a = 0;
  Int b = 0;

  Int operator()(const Lattice& v) const { return a * v.n + b * v.m; }
  friend auto operator<=>(const Functional&, const Functional&) = default;
  friend bool operator==(const Functional&, const Functional&) = default;
};

std::ostream& operator<<(std::ostream& os, const Functional& f);

enum class ConeKind { Origin, Ray, Line, Pointed, HalfPlane, Plane };

/// A boundary face of the saturation cone: {inequality == 0}, running along `direction`
/// (and also along -direction when `two_sided`).
struct Face {
  Functional inequality;
  Lattice direction;
  bool two_sided = false;
};

/// Rational cone spanned by a generator set.
struct ConeGeometry {
  ConeKind kind = ConeKind::Origin;
  std::vector<Functional> inequalities;
  std::vector<Face> faces;

  bool contains(const Lattice& v) const;
};

ConeGeometry analyze_cone(const std::vector<Lattice>& generators);

class AffineSemigroup2D;

/// Saturation inequalities plus a finite description of the gaps.
struct ConeDescriptor {
  std::vector<Functional> inequalities;
  std::vector<LatticeRay> gap_rays;
  std::vector<Lattice> gap_points;
  Int conductor_bound = 0;
  std::vector<Face> faces;

  bool in_saturation(const Lattice& v) const;
  bool is_gap(const Lattice& v) const;
  /// Membership read off the certified description.
  bool contains(const Lattice& v) const { return in_saturation(v) && !is_gap(v); }
};

/// Finitely generated sub-semigroup of Z^2 (the origin is always an element).
class AffineSemigroup2D {
 public:
  explicit AffineSemigroup2D(std::vector<Lattice> generators);

  const std::vector<Lattice>& generators() const { return generators_; }
  const ConeGeometry& geometry() const { return geometry_; }
  Int max_generator_norm() const;

  /// v is a Z>=0-combination of the generators.
  bool contains(const Lattice& v) const;

  /// Cached; throws DegenerateCone or UnsupportedSemigroup.
  const ConeDescriptor& normal_form() const;

  friend bool operator==(const AffineSemigroup2D& a, const AffineSemigroup2D& b) {
    return a.generators_ == b.generators_;
  }

 private:
  struct Cache;

  std::vector<Lattice> generators_;
  ConeGeometry geometry_;
  std::shared_ptr<Cache> cache_;
};

ConeDescriptor compute_normal_form(const AffineSemigroup2D& s);

/// {s in S : s + shift not in S} as rays and finitely many points.
struct EscapeSet {
  std::vector<LatticeRay> rays;
  std::vector<Lattice> points;

  bool contains(const Lattice& v) const;
};

EscapeSet escape_set(const AffineSemigroup2D& s, const Lattice& shift);

/// All elements of S with norm <= bound, sorted.
std::vector<Lattice> enumerate(const AffineSemigroup2D& s, Int bound);

}  // namespace invdiff
