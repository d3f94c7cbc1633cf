#include "invdiff/membership.hpp"

#include <map>
#include <stdexcept>

namespace invdiff {

MembershipVerdict preserves_ring(const OreOperator& p, const AffineSemigroup2D& s) {
  s.normal_form();
  for (const auto& [v, poly] : p.shift_decomposition()) {
    const EscapeSet esc = escape_set(s, v);
    for (const auto& ray : esc.rays) {
      if (vanishes_on_ray(poly, ray)) continue;
      // A nonzero polynomial of degree d has a nonzero value among any d+1 ray points.
      for (Int t = 0; t <= static_cast<Int>(poly.degree()); ++t) {
        const GaussRational val = eval(poly, ray.at(t));
        if (!val.is_zero()) return {false, LeakWitness{ray.at(t), v, val}};
      }
      throw std::logic_error("preserves_ring: nonvanishing polynomial with no nonzero sample");
    }
    for (const auto& pt : esc.points) {
      const GaussRational val = eval(poly, pt);
      if (!val.is_zero()) return {false, LeakWitness{pt, v, val}};
    }
  }
  return {};
}

bool confirms_leak(const OreOperator& p, const AffineSemigroup2D& s, const LeakWitness& w) {
  if (!s.contains(w.point) || s.contains(w.point + w.shift)) return false;
  // Only the shift-v part can reach s + v, so the coefficient there is p_v(s).
  GaussRational got;
  const bool angular = p.mode() == SecondMode::Angular;
  for (const auto& [k, c] : p.terms()) {
    const Lattice shift{k.coef.n - static_cast<Int>(k.d1), k.coef.m - (angular ? 0 : static_cast<Int>(k.d2))};
    if (shift != w.shift) continue;
    GaussRational v = c * GaussRational(falling_factorial(w.point.n, k.d1));
    v *= angular ? pow(GaussRational(Rational(0), Rational(static_cast<long>(w.point.m))), k.d2)
                 : GaussRational(falling_factorial(w.point.m, k.d2));
    got += v;
  }
  return !got.is_zero() && got == w.value;
}

bool derivation_preserves_generators(const OreOperator& d, const AffineSemigroup2D& s) {
  for (const auto& [k, c] : d.terms()) {
    if (k.order() != 1) throw std::invalid_argument("derivation_preserves_generators: not a derivation");
  }
  const bool angular = d.mode() == SecondMode::Angular;
  for (const auto& g : s.generators()) {
    // Collect the image with cancellation, then test its support.
    std::map<Lattice, GaussRational> image;
    for (const auto& [k, c] : d.terms()) {
      GaussRational v = c;
      if (k.d1 == 1) {
        v *= GaussRational(g.n);
      } else {
        v *= angular ? GaussRational(Rational(0), Rational(static_cast<long>(g.m))) : GaussRational(g.m);
      }
      if (v.is_zero()) continue;
      const Lattice target{g.n + k.coef.n - static_cast<Int>(k.d1),
                           g.m + k.coef.m - (angular ? 0 : static_cast<Int>(k.d2))};
      image[target] += v;
    }
    for (const auto& [pt, c] : image) {
      if (!c.is_zero() && !s.contains(pt)) return false;
    }
  }
  return true;
}

}  // namespace invdiff
