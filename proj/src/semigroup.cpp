#include "invdiff/semigroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_set>

namespace invdiff {

namespace {

Int det(const Lattice& a, const Lattice& b) { return a.n * b.m - a.m * b.n; }
Int dot(const Lattice& a, const Lattice& b) { return a.n * b.n + a.m * b.m; }
Int iabs(Int x) { return x < 0 ? -x : x; }

Lattice primitive(const Lattice& v) {
  const Int g = gcd(v.n, v.m);
  return {v.n / g, v.m / g};
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

struct LatticeHash {
  std::size_t operator()(const Lattice& v) const noexcept {
    return std::hash<Int>{}(v.n) * 1000003U ^ std::hash<Int>{}(v.m);
  }
};

using LatticeSet = std::unordered_set<Lattice, LatticeHash>;

// Solves a*n + b*m = c for a primitive functional.
Lattice point_on_level(const Functional& f, Int c) {
  // Extended Euclid on (a, b).
  Int old_r = f.a, r = f.b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  if (old_r != 1) throw std::logic_error("point_on_level: functional is not primitive");
  return {old_s * c, old_t * c};
}

bool on_ray(const LatticeRay& ray, const Lattice& v) {
  const Lattice d = v - ray.base;
  if (det(d, ray.direction) != 0) return false;
  return dot(d, ray.direction) >= 0;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Functional& f) {
  return os << f.a << "*n" << (f.b < 0 ? " - " : " + ") << iabs(f.b) << "*m";
}

// ---------------------------------------------------------------------------
// Cone geometry

bool ConeGeometry::contains(const Lattice& v) const {
  switch (kind) {
    case ConeKind::Pointed:
    case ConeKind::HalfPlane:
      return std::all_of(inequalities.begin(), inequalities.end(),
                         [&](const Functional& f) { return f(v) >= 0; });
    case ConeKind::Plane:
      return true;
    default:
      throw DegenerateCone("ConeGeometry::contains: cone is not two-dimensional");
  }
}

ConeGeometry analyze_cone(const std::vector<Lattice>& generators) {
  std::vector<Lattice> gens;
  for (const auto& g : generators) {
    if (g != Lattice{0, 0}) gens.push_back(g);
  }
  ConeGeometry geo;
  if (gens.empty()) {
    geo.kind = ConeKind::Origin;
    return geo;
  }
  const bool collinear = std::all_of(gens.begin(), gens.end(),
                                     [&](const Lattice& g) { return det(gens.front(), g) == 0; });
  if (collinear) {
    const bool one_way = std::all_of(gens.begin(), gens.end(),
                                     [&](const Lattice& g) { return dot(gens.front(), g) > 0; });
    geo.kind = one_way ? ConeKind::Ray : ConeKind::Line;
    return geo;
  }

  // Extreme generators: everything else is clockwise of `hi` and counter-clockwise of `lo`.
  auto extreme = [&](int sign) -> std::optional<Lattice> {
    for (const auto& g : gens) {
      const bool ok = std::all_of(gens.begin(), gens.end(), [&](const Lattice& x) {
        const Int d = det(g, x) * sign;
        return d < 0 || (d == 0 && dot(g, x) > 0);
      });
      if (ok) return g;
    }
    return std::nullopt;
  };
  const auto hi = extreme(+1);
  const auto lo = extreme(-1);
  if (hi && lo) {
    const Lattice eh = primitive(*hi);
    const Lattice el = primitive(*lo);
    geo.kind = ConeKind::Pointed;
    const Functional fh{eh.m, -eh.n};
    const Functional fl{-el.m, el.n};
    geo.inequalities = {fh, fl};
    geo.faces = {Face{fh, eh, false}, Face{fl, el, false}};
    return geo;
  }
  for (const auto& g : gens) {
    bool one_side = true;
    bool opposite = false;
    for (const auto& x : gens) {
      const Int d = det(g, x);
      if (d < 0) one_side = false;
      if (d == 0 && dot(g, x) < 0) opposite = true;
    }
    if (one_side && opposite) {
      const Lattice d = primitive(g);
      const Functional f{-d.m, d.n};
      geo.kind = ConeKind::HalfPlane;
      geo.inequalities = {f};
      geo.faces = {Face{f, d, true}};
      return geo;
    }
  }
  geo.kind = ConeKind::Plane;
  return geo;
}

// ---------------------------------------------------------------------------
// Membership by bounded search

struct AffineSemigroup2D::Cache {
  std::mutex mutex;
  Int radius = -1;
  LatticeSet reachable;
  std::once_flag nf_once;
  std::optional<ConeDescriptor> nf;
  std::exception_ptr nf_error;
};

AffineSemigroup2D::AffineSemigroup2D(std::vector<Lattice> generators)
    : generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (generators_.empty()) throw std::invalid_argument("AffineSemigroup2D: no generators");
  std::set<Lattice> seen;
  for (const auto& g : generators_) {
    if (!seen.insert(g).second) {
      throw std::invalid_argument("AffineSemigroup2D: duplicate generator " + to_string(g));
    }
  }
  geometry_ = analyze_cone(generators_);
}

Int AffineSemigroup2D::max_generator_norm() const {
  Int out = 0;
  for (const auto& g : generators_) out = std::max(out, norm(g));
  return out;
}

namespace {

// Reachable set restricted to a region {0 <= h <= H, |t| <= T}. Any representation of a
// target inside the query box can be reordered so all partial sums stay in the region:
// h is monotone because h >= 0 on generators, and a greedy order keeps t within one
// generator of the segment [0, t(target)].
LatticeSet reachable_in_region(const std::vector<Lattice>& gens, const ConeGeometry& geo,
                               Int radius) {
  Functional h;
  switch (geo.kind) {
    case ConeKind::Pointed:
      h = {geo.inequalities[0].a + geo.inequalities[1].a,
           geo.inequalities[0].b + geo.inequalities[1].b};
      break;
    case ConeKind::HalfPlane:
      h = geo.inequalities[0];
      break;
    case ConeKind::Ray: {
      const auto g = *std::find_if(gens.begin(), gens.end(),
                                   [](const Lattice& x) { return x != Lattice{0, 0}; });
      h = {g.n, g.m};
      break;
    }
    case ConeKind::Line: {
      const auto g = *std::find_if(gens.begin(), gens.end(),
                                   [](const Lattice& x) { return x != Lattice{0, 0}; });
      h = {-g.m, g.n};
      break;
    }
    case ConeKind::Origin:
      h = {1, 0};
      break;
    case ConeKind::Plane:
      throw UnsupportedSemigroup("membership: generators positively span the plane");
  }
  const Functional t = h.a != 0 ? Functional{0, 1} : Functional{1, 0};
  Int spread = 0;
  for (const auto& g : gens) spread = std::max(spread, iabs(t(g)));
  const Int h_max = radius * (iabs(h.a) + iabs(h.b));
  const Int t_max = radius * (iabs(t.a) + iabs(t.b)) + spread;

  LatticeSet seen{Lattice{0, 0}};
  std::vector<Lattice> frontier{Lattice{0, 0}};
  while (!frontier.empty()) {
    std::vector<Lattice> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        const Lattice y = x + g;
        const Int hy = h(y);
        const Int ty = t(y);
        if (hy < 0 || hy > h_max || ty < -t_max || ty > t_max) continue;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

bool AffineSemigroup2D::contains(const Lattice& v) const {
  if (v == Lattice{0, 0}) return true;
  if ((geometry_.kind == ConeKind::Pointed || geometry_.kind == ConeKind::HalfPlane) &&
      !geometry_.contains(v)) {
    return false;
  }
  std::lock_guard lock(cache_->mutex);
  if (norm(v) > cache_->radius) {
    const Int r = std::max<Int>({norm(v), 2 * cache_->radius, 16});
    cache_->reachable = reachable_in_region(generators_, geometry_, r);
    cache_->radius = r;
  }
  return cache_->reachable.count(v) != 0;
}

const ConeDescriptor& AffineSemigroup2D::normal_form() const {
  std::call_once(cache_->nf_once, [this] {
    try {
      cache_->nf = compute_normal_form(*this);
    } catch (...) {
      cache_->nf_error = std::current_exception();
    }
  });
  if (cache_->nf_error) std::rethrow_exception(cache_->nf_error);
  return *cache_->nf;
}

std::vector<Lattice> enumerate(const AffineSemigroup2D& s, Int bound) {
  std::vector<Lattice> out;
  for (Int n = -bound; n <= bound; ++n) {
    for (Int m = -bound; m <= bound; ++m) {
      if (s.contains({n, m})) out.push_back({n, m});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normal form

bool ConeDescriptor::in_saturation(const Lattice& v) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const Functional& f) { return f(v) >= 0; });
}

bool ConeDescriptor::is_gap(const Lattice& v) const {
  if (std::find(gap_points.begin(), gap_points.end(), v) != gap_points.end()) return true;
  return std::any_of(gap_rays.begin(), gap_rays.end(),
                     [&](const LatticeRay& r) { return on_ray(r, v); });
}

namespace {

// Face-line argument: on the level {f = c} every element of S is p + (face element) with p a
// sum of off-face generators of total level c. With gcd-1 face generators each such p fills
// its whole line eventually, so the ray stays a gap iff no p lies on the ray's line.
bool certify_gap_ray(const std::vector<Lattice>& gens, const Face& face, const LatticeRay& ray) {
  const Int c = face.inequality(ray.base);
  if (c <= 0) return false;
  std::vector<std::vector<Lattice>> level(static_cast<std::size_t>(c) + 1);
  level[0] = {Lattice{0, 0}};
  for (Int k = 1; k <= c; ++k) {
    std::set<Lattice> acc;
    for (const auto& g : gens) {
      const Int lg = face.inequality(g);
      if (lg <= 0 || lg > k) continue;
      for (const auto& p : level[static_cast<std::size_t>(k - lg)]) acc.insert(p + g);
    }
    level[static_cast<std::size_t>(k)].assign(acc.begin(), acc.end());
  }
  for (const auto& p : level[static_cast<std::size_t>(c)]) {
    if (det(ray.base - p, face.direction) == 0) return false;
  }
  return true;
}

}  // namespace

ConeDescriptor compute_normal_form(const AffineSemigroup2D& s) {
  const auto& geo = s.geometry();
  const auto& gens = s.generators();
  switch (geo.kind) {
    case ConeKind::Origin:
    case ConeKind::Ray:
    case ConeKind::Line:
      throw DegenerateCone("normal_form: generators span at most a line");
    case ConeKind::Plane:
      throw UnsupportedSemigroup("normal_form: generators positively span the plane");
    default:
      break;
  }

  Int index = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) index = gcd(index, det(gens[i], gens[j]));
  }
  if (index != 1) {
    throw UnsupportedSemigroup("normal_form: generators span a sublattice of index " +
                               std::to_string(index));
  }
  for (const auto& face : geo.faces) {
    Int g = 0;
    for (const auto& x : gens) {
      if (x != Lattice{0, 0} && face.inequality(x) == 0) {
        g = gcd(g, face.direction.n != 0 ? x.n / face.direction.n : x.m / face.direction.m);
      }
    }
    if (g != 1) {
      throw UnsupportedSemigroup("normal_form: face semigroup along " + to_string(face.direction) +
                                 " has periodic gaps");
    }
  }

  const Int maxgen = s.max_generator_norm();
  for (Int half = 2 * maxgen + 4; half <= 512; half *= 2) {
    const Int radius = 2 * half;
    std::vector<Lattice> gaps;
    LatticeSet gapset;
    for (Int n = -radius; n <= radius; ++n) {
      for (Int m = -radius; m <= radius; ++m) {
        const Lattice x{n, m};
        if (geo.contains(x) && !s.contains(x)) {
          gaps.push_back(x);
          gapset.insert(x);
        }
      }
    }

    ConeDescriptor nf;
    nf.inequalities = geo.inequalities;
    nf.faces = geo.faces;
    LatticeSet explained;
    bool retry = false;
    for (const auto& face : geo.faces) {
      std::vector<Lattice> dirs{face.direction};
      if (face.two_sided) dirs.push_back(-face.direction);
      for (const auto& d : dirs) {
        for (const auto& x : gaps) {
          if (gapset.count(x - d) != 0 || norm(x) > half) continue;
          bool all_gaps = true;
          Int length = 0;
          for (Lattice y = x; norm(y) <= radius; y = y + d, ++length) {
            if (gapset.count(y) == 0) {
              all_gaps = false;
              break;
            }
          }
          if (!all_gaps || length < 2) continue;
          LatticeRay ray(x, d);
          if (!certify_gap_ray(gens, face, ray)) {
            retry = true;
            continue;
          }
          nf.gap_rays.push_back(ray);
          for (Lattice y = x; norm(y) <= radius; y = y + d) explained.insert(y);
        }
      }
    }
    for (const auto& x : gaps) {
      if (explained.count(x) != 0) continue;
      if (norm(x) > half) retry = true;
      nf.gap_points.push_back(x);
    }
    if (retry) continue;

    std::sort(nf.gap_rays.begin(), nf.gap_rays.end());
    std::sort(nf.gap_points.begin(), nf.gap_points.end());
    Int extent = -1;
    for (const auto& p : nf.gap_points) extent = std::max(extent, norm(p));
    for (const auto& r : nf.gap_rays) extent = std::max(extent, norm(r.base));
    nf.conductor_bound = extent + 1;
    if (2 * (nf.conductor_bound + maxgen) > radius) continue;

    // Exhaustive cross-check of the description against the search.
    bool consistent = true;
    for (Int n = -radius; n <= radius && consistent; ++n) {
      for (Int m = -radius; m <= radius; ++m) {
        const Lattice x{n, m};
        if (nf.contains(x) != s.contains(x)) {
          consistent = false;
          break;
        }
      }
    }
    if (!consistent) {
      throw UnsupportedSemigroup("normal_form: gap pattern is not a union of face-parallel rays "
                                 "and points");
    }
    return nf;
  }
  throw UnsupportedSemigroup("normal_form: gap structure did not stabilise");
}

// ---------------------------------------------------------------------------
// Escape sets

bool EscapeSet::contains(const Lattice& v) const {
  if (std::find(points.begin(), points.end(), v) != points.end()) return true;
  return std::any_of(rays.begin(), rays.end(), [&](const LatticeRay& r) { return on_ray(r, v); });
}

EscapeSet escape_set(const AffineSemigroup2D& s, const Lattice& shift) {
  const ConeDescriptor& nf = s.normal_form();
  auto escapes = [&](const Lattice& x) { return nf.contains(x) && !nf.contains(x + shift); };
  const Int scan = 2 * (nf.conductor_bound + norm(shift) + s.max_generator_norm()) + 8;

  EscapeSet out;
  std::set<Lattice> loose;

  // Lines parallel to a face on which the escape predicate can hold infinitely often.
  for (std::size_t fi = 0; fi < nf.faces.size(); ++fi) {
    const Face& face = nf.faces[fi];
    std::set<Int> levels;
    for (Int c = 0; c < -face.inequality(shift); ++c) levels.insert(c);
    for (const auto& r : nf.gap_rays) {
      if (det(r.direction, face.direction) != 0) continue;
      const Int c = face.inequality(r.base) - face.inequality(shift);
      if (c >= 0) levels.insert(c);
    }
    for (const Int c : levels) {
      const Lattice origin = point_on_level(face.inequality, c);
      const Lattice& e = face.direction;
      Int t_lo = -4 * scan;
      if (!face.two_sided) {
        const Functional& other = nf.faces[1 - fi].inequality;
        t_lo = ceil_div(-other(origin), other(e));
      }
      if (face.two_sided) {
        while (norm(origin + e * t_lo) > scan) ++t_lo;
      }
      const Int line_scan = std::max(scan, norm(origin + e * t_lo) + scan);
      Int t_hi = t_lo;
      while (norm(origin + e * (t_hi + 1)) <= line_scan) ++t_hi;
      std::vector<bool> pattern;
      for (Int t = t_lo; t <= t_hi; ++t) pattern.push_back(escapes(origin + e * t));
      if (pattern.empty()) continue;

      std::size_t first = 0;
      std::size_t last = pattern.size();  // exclusive
      if (face.two_sided && std::all_of(pattern.begin(), pattern.end(), [](bool b) { return b; })) {
        out.rays.emplace_back(origin, e);
        out.rays.emplace_back(origin - e, -e);
        continue;
      }
      if (pattern.back()) {
        std::size_t k = pattern.size();
        while (k > 0 && pattern[k - 1]) --k;
        out.rays.emplace_back(origin + e * (t_lo + static_cast<Int>(k)), e);
        last = k;
      }
      if (face.two_sided && pattern.front()) {
        std::size_t k = 0;
        while (k < last && pattern[k]) ++k;
        if (k > 0) {
          out.rays.emplace_back(origin + e * (t_lo + static_cast<Int>(k) - 1), -e);
          first = k;
        }
      }
      for (std::size_t k = first; k < last; ++k) {
        if (pattern[k]) loose.insert(origin + e * (t_lo + static_cast<Int>(k)));
      }
    }
  }
  for (const auto& p : nf.gap_points) {
    if (escapes(p - shift)) loose.insert(p - shift);
  }

  // Canonical form: rays never start at the origin, and overlaps go to the earlier ray.
  for (auto& ray : out.rays) {
    if (ray.base == Lattice{0, 0}) {
      loose.insert(ray.base);
      ray.base = ray.base + ray.direction;
    }
  }
  for (std::size_t i = 0; i < out.rays.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      while (on_ray(out.rays[j], out.rays[i].base)) {
        out.rays[i].base = out.rays[i].base + out.rays[i].direction;
      }
    }
  }
  for (const auto& p : loose) {
    const bool covered =
        std::any_of(out.rays.begin(), out.rays.end(), [&](const LatticeRay& r) { return on_ray(r, p); });
    if (!covered) out.points.push_back(p);
  }

  // The description must reproduce the predicate on the whole scan box.
  for (Int n = -scan; n <= scan; ++n) {
    for (Int m = -scan; m <= scan; ++m) {
      const Lattice x{n, m};
      if (escapes(x) != out.contains(x)) {
        std::ostringstream msg;
        msg << "escape_set: description disagrees with the predicate at " << x << " for shift "
            << shift;
        throw UnsupportedSemigroup(msg.str());
      }
    }
  }
  return out;
}

}  // namespace invdiff
