#include "invdiff/derivations.hpp"

#include <set>
#include <stdexcept>

namespace invdiff {
namespace {

EigenPoly d2_eigen(SecondMode mode) {
  return mode == SecondMode::Angular ? GaussRational::i() * EigenPoly::m_var() : EigenPoly::m_var();
}

void normalise(Direction& d) {
  for (const auto& x : d) {
    if (x.is_zero()) continue;
    const GaussRational inv = x.inverse();
    for (auto& y : d) y *= inv;
    return;
  }
}

Vector as_vector(const Direction& d) { return {d[0], d[1]}; }

// Directions spanning {(alpha, beta) : alpha*n + beta*e2 vanishes on the escape set}, with
// inactive unknowns forced to zero.
std::vector<Direction> solve_shift(const AffineSemigroup2D& s, const Lattice& v, bool alpha_on, bool beta_on,
                                   SecondMode mode) {
  std::vector<std::size_t> cols;
  if (alpha_on) cols.push_back(0);
  if (beta_on) cols.push_back(1);
  if (cols.empty()) return {};
  const EigenPoly polys[2] = {EigenPoly::n_var(), d2_eigen(mode)};

  Matrix m;
  const EscapeSet esc = escape_set(s, v);
  for (const auto& ray : esc.rays) {
    std::vector<std::vector<GaussRational>> coeffs;
    std::size_t len = 0;
    for (auto c : cols) {
      coeffs.push_back(restrict_to_ray(polys[c], ray));
      len = std::max(len, coeffs.back().size());
    }
    for (std::size_t k = 0; k < len; ++k) {
      Vector row;
      for (const auto& c : coeffs) row.push_back(k < c.size() ? c[k] : GaussRational());
      m.append_row(row);
    }
  }
  for (const auto& pt : esc.points) {
    Vector row;
    for (auto c : cols) row.push_back(eval(polys[c], pt));
    m.append_row(row);
  }
  if (m.rows() == 0) m = Matrix(0, cols.size());

  std::vector<Direction> out;
  for (const auto& x : nullspace(m)) {
    Direction d{};
    for (std::size_t k = 0; k < cols.size(); ++k) d[cols[k]] = x[k];
    normalise(d);
    out.push_back(d);
  }
  return out;
}

bool feasible(const Lattice& v, const Direction& d, const Window& w, SecondMode mode) {
  if (!d[0].is_zero() && !w.contains(d1_coefficient(v))) return false;
  if (!d[1].is_zero() && !w.contains(d2_coefficient(v, mode))) return false;
  return true;
}

}  // namespace

Lattice d1_coefficient(const Lattice& shift) { return shift + Lattice{1, 0}; }

Lattice d2_coefficient(const Lattice& shift, SecondMode mode) {
  return mode == SecondMode::Angular ? shift : shift + Lattice{0, 1};
}

OreOperator derivation_at(const Lattice& shift, const Direction& dir, SecondMode mode) {
  OreOperator p(mode);
  p.add_term({d1_coefficient(shift), 1, 0}, dir[0]);
  p.add_term({d2_coefficient(shift, mode), 0, 1}, dir[1]);
  return p;
}

std::size_t DerivationBasis::dimension_at(const Lattice& v) const {
  const auto it = by_shift.find(v);
  return it == by_shift.end() ? 0 : it->second.size();
}

bool DerivationBasis::spans(const OreOperator& p) const {
  if (p.mode() != mode) return false;
  std::map<Lattice, Direction> parts;
  for (const auto& [k, c] : p.terms()) {
    if (k.order() != 1) return false;
    if (!window.contains(k.coef)) return false;
    if (k.d1 == 1) {
      parts[k.coef - Lattice{1, 0}][0] = c;
    } else {
      parts[mode == SecondMode::Angular ? k.coef : k.coef - Lattice{0, 1}][1] = c;
    }
  }
  for (const auto& [v, d] : parts) {
    const auto it = by_shift.find(v);
    if (it == by_shift.end()) return false;
    SpanBuilder span(2);
    for (const auto& x : it->second) span.add(as_vector(x));
    if (!span.contains(as_vector(d))) return false;
  }
  return true;
}

std::vector<Lattice> window_shifts(const Window& w, SecondMode mode) {
  std::set<Lattice> out;
  for (Int a = w.a_min; a <= w.a_max; ++a) {
    for (Int b = w.b_min; b <= w.b_max; ++b) {
      const Lattice c{a, b};
      out.insert(c - Lattice{1, 0});
      out.insert(mode == SecondMode::Angular ? c : c - Lattice{0, 1});
    }
  }
  return {out.begin(), out.end()};
}

DerivationBasis solve_derivations(const AffineSemigroup2D& s, const Window& w, SecondMode mode) {
  if (w.a_min > w.a_max || w.b_min > w.b_max) throw std::invalid_argument("solve_derivations: empty window");
  s.normal_form();
  DerivationBasis out;
  out.mode = mode;
  out.window = w;
  for (const auto& v : window_shifts(w, mode)) {
    auto dirs = solve_shift(s, v, w.contains(d1_coefficient(v)), w.contains(d2_coefficient(v, mode)), mode);
    if (dirs.empty()) continue;
    for (const auto& d : dirs) out.elements.push_back(derivation_at(v, d, mode));
    out.by_shift.emplace(v, std::move(dirs));
  }
  return out;
}

std::vector<ClassificationMismatch> classification_mismatches(const AffineSemigroup2D& s, const Window& w,
                                                              SecondMode mode,
                                                              const std::vector<DerivationFamily>& families) {
  const DerivationBasis basis = solve_derivations(s, w, mode);
  std::vector<ClassificationMismatch> out;
  for (const auto& v : window_shifts(w, mode)) {
    SpanBuilder claimed(2), solved(2);
    std::vector<Direction> claimed_dirs;
    for (const auto& f : families) {
      if (f.applies(v) && feasible(v, f.direction, w, mode)) {
        claimed.add(as_vector(f.direction));
        claimed_dirs.push_back(f.direction);
      }
    }
    const auto it = basis.by_shift.find(v);
    if (it != basis.by_shift.end()) {
      for (const auto& d : it->second) solved.add(as_vector(d));
    }
    ClassificationMismatch mm{v, solved.dimension(), claimed.dimension(), OreOperator(mode), false};
    bool bad = false;
    if (it != basis.by_shift.end()) {
      for (const auto& d : it->second) {
        if (!claimed.contains(as_vector(d))) {
          mm.example = derivation_at(v, d, mode);
          mm.missing_from_claim = true;
          bad = true;
          break;
        }
      }
    }
    if (!bad) {
      for (const auto& d : claimed_dirs) {
        if (!solved.contains(as_vector(d))) {
          mm.example = derivation_at(v, d, mode);
          bad = true;
          break;
        }
      }
    }
    if (bad) out.push_back(std::move(mm));
  }
  return out;
}

}  // namespace invdiff

namespace invdiff {

std::vector<DerivationFamily> double_cone_families(const AffineSemigroup2D& s) {
  const GaussRational one(1), zero, i = GaussRational::i();
  return {
      {"q*Du, q in u*A", {one, zero}, [s](const Lattice& v) { return s.contains(v); }},
      {"q*Dt, q in A", {zero, one}, [s](const Lattice& v) { return s.contains(v); }},
      {"q*R, q in A", {one, i}, [s](const Lattice& v) { return s.contains(v - Lattice{0, 1}); }},
      {"q*S, q in A", {one, -i}, [s](const Lattice& v) { return s.contains(v + Lattice{0, 1}); }},
  };
}

namespace {

// Interior monomials: in S and on neither boundary line 2n = m, n = -m.
bool off_boundary(const AffineSemigroup2D& s, const Lattice& c) {
  return s.contains(c) && 2 * c.n != c.m && c.n != -c.m;
}

}  // namespace

std::vector<DerivationFamily> ruled_surface_families(const AffineSemigroup2D& s) {
  const GaussRational one(1), zero;
  return {
      {"q*Dr, q in C", {one, zero}, [s](const Lattice& v) { return off_boundary(s, v + Lattice{1, 0}); }},
      {"q*Ds, q in C or s*B", {zero, one},
       [s](const Lattice& v) {
         const Lattice c = v + Lattice{0, 1};
         return off_boundary(s, c) || s.contains(c - Lattice{0, 1});
       }},
      {"q*D, q in B", {one, one}, [s](const Lattice& v) { return s.contains(v - Lattice{1, -2}); }},
  };
}

std::vector<DerivationFamily> ruled_surface_families_corrected(const AffineSemigroup2D& s) {
  auto out = ruled_surface_families(s);
  out[0] = {"q*Dr, q, q/s, q*s^2 in B", {GaussRational(1), GaussRational()}, [s](const Lattice& v) {
              const Lattice c = v + Lattice{1, 0};
              return s.contains(c) && s.contains(c + Lattice{0, -1}) && s.contains(c + Lattice{0, 2});
            }};
  // The multipliers here range over the normalisation: r*s and the other gap monomials qualify.
  out.push_back({"q*(s*Ds - 2*r*Dr), q in the saturation of B", {GaussRational(-2), GaussRational(1)},
                 [s](const Lattice& v) { return s.normal_form().in_saturation(v); }});
  return out;
}

}  // namespace invdiff
