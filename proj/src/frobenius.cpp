#include "invdiff/frobenius.hpp"

#include "invdiff/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace invdiff {
namespace {

// Directions whose non-negative span is the saturated cone.
std::vector<Lattice> cone_directions(const AffineSemigroup2D& s) {
  const auto& geo = s.geometry();
  const auto& gens = s.generators();
  switch (geo.kind) {
    case ConeKind::Origin:
      return {};
    case ConeKind::Ray:
      return {gens.front()};
    case ConeKind::Line:
      return {gens.front(), -gens.front()};
    case ConeKind::Pointed:
      return {geo.faces[0].direction, geo.faces[1].direction};
    case ConeKind::HalfPlane: {
      const auto& f = geo.faces.front();
      return {f.direction, -f.direction, Lattice{f.inequality.a, f.inequality.b}};
    }
    case ConeKind::Plane:
      return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  }
  return {};
}

Int abs_int(Int x) { return x < 0 ? -x : x; }

Int ceil_div(Int num, Int den) { return num / den + (num % den != 0 ? 1 : 0); }

}  // namespace

std::optional<Int> fibre_norm_bound(const AffineSemigroup2D& s, const TorusAction& act, const Weight& lambda) {
  if (lambda.size() != act.arity()) throw std::invalid_argument("fibre_norm_bound: weight arity mismatch");
  const auto dirs = cone_directions(s);
  if (dirs.empty()) return 0;

  // Reduce to a single functional when the action has rank <= 1.
  Functional ell = act.functionals[0];
  Int lam = lambda[0];
  if (act.arity() == 2) {
    const auto& f = act.functionals[0];
    const auto& g = act.functionals[1];
    const Int det = f.a * g.b - f.b * g.a;
    if (det != 0) {
      // Unique real solution; integral or empty.
      const Int xn = lambda[0] * g.b - f.b * lambda[1];
      const Int xm = f.a * lambda[1] - g.a * lambda[0];
      if (xn % det != 0 || xm % det != 0) return 0;
      return norm({xn / det, xm / det});
    }
    if (f.a == 0 && f.b == 0) {
      ell = g;
      lam = lambda[1];
      if (lambda[0] != 0) return 0;
    } else if (lambda[1] * f.a != lambda[0] * g.a || lambda[1] * f.b != lambda[0] * g.b) {
      return 0;  // inconsistent proportional equations
    }
  }
  if (ell.a == 0 && ell.b == 0) {
    if (lam != 0) return 0;
    return std::nullopt;
  }
  if (lam % gcd(ell.a, ell.b) != 0) return 0;

  bool pos = false, neg = false, zero = false;
  for (const auto& d : dirs) {
    const Int v = ell(d);
    (v > 0 ? pos : v < 0 ? neg : zero) = true;
  }
  if ((lam > 0 && !pos) || (lam < 0 && !neg)) return 0;
  if (zero || (pos && neg)) return std::nullopt;
  // s = sum x_d d with x_d >= 0, so norm(s) <= |lam| * max norm(d) / |ell(d)|.
  Int bound = 0;
  for (const auto& d : dirs) bound = std::max(bound, ceil_div(abs_int(lam) * norm(d), abs_int(ell(d))));
  return bound;
}

MultiplicitySpace multiplicity_space(const AffineSemigroup2D& s, const TorusAction& act, const Weight& lambda,
                                     Int truncation) {
  MultiplicitySpace out;
  out.weight = lambda;
  for (const auto& v : enumerate(s, truncation)) {
    if (act.weight(v) == lambda) out.basis.push_back(v);
  }
  const auto bound = fibre_norm_bound(s, act, lambda);
  out.complete = bound && *bound <= truncation;
  return out;
}

bool finite_multiplicities(const AffineSemigroup2D& s, const TorusAction& act) {
  return fibre_norm_bound(s, act, Weight(act.arity(), 0)).has_value();
}

bool is_invariant(const OreOperator& p, const TorusAction& act) {
  const Weight zero(act.arity(), 0);
  for (const auto& [v, poly] : p.shift_decomposition()) {
    if (act.weight(v) != zero) return false;
  }
  return true;
}

SpectrumReport spectrum_and_rank(const AffineSemigroup2D& s, const TorusAction& act, Int bound) {
  SpectrumReport out;
  for (const auto& v : enumerate(s, bound)) out.weights.insert(act.weight(v));
  for (const auto& g : s.generators()) out.generator_weights.insert(act.weight(g));
  Matrix m;
  for (const auto& w : out.weights) {
    Vector row;
    for (Int x : w) row.emplace_back(x);
    m.append_row(row);
  }
  out.rank = rank(m);
  return out;
}

}  // namespace invdiff
