#include "invdiff/scalars.hpp"

#include <sstream>

namespace invdiff {

std::ostream& operator<<(std::ostream& os, const Lattice& v) {
  return os << '(' << v.n << ',' << v.m << ')';
}

std::string to_string(const Lattice& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// ---------------------------------------------------------------------------
// GaussRational

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussRational: division by zero");
  const Rational den = re_ * re_ + im_ * im_;
  return {Rational(re_ / den), Rational(-im_ / den)};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

// Imaginary part as a factor of i: `i`, `-i`, `2*i`, `-3/4*i`.
std::string imag_str(const Rational& q) {
  if (q == 1) return "i";
  if (q == -1) return "-i";
  return rational_str(q) + "*i";
}

}  // namespace

std::string GaussRational::str() const {
  if (sgn(im_) == 0) return rational_str(re_);
  if (sgn(re_) == 0) return imag_str(im_);
  std::string out = "(" + rational_str(re_);
  if (sgn(im_) > 0) {
    out += " + " + imag_str(im_);
  } else {
    out += " - " + imag_str(Rational(-im_));
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

GaussRational pow(const GaussRational& base, unsigned exponent) {
  GaussRational acc(1);
  GaussRational b = base;
  while (exponent > 0) {
    if (exponent & 1U) acc *= b;
    b *= b;
    exponent >>= 1U;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// EigenPoly

EigenPoly::EigenPoly(const GaussRational& constant) { add_term(0, 0, constant); }

EigenPoly EigenPoly::n_var() {
  EigenPoly p;
  p.add_term(1, 0, 1);
  return p;
}

EigenPoly EigenPoly::m_var() {
  EigenPoly p;
  p.add_term(0, 1, 1);
  return p;
}

EigenPoly EigenPoly::falling_n(unsigned k) {
  EigenPoly p(GaussRational(1));
  for (unsigned j = 0; j < k; ++j) {
    p = p * (n_var() - EigenPoly(GaussRational(static_cast<Int>(j))));
  }
  return p;
}

EigenPoly EigenPoly::falling_m(unsigned k) {
  EigenPoly p(GaussRational(1));
  for (unsigned j = 0; j < k; ++j) {
    p = p * (m_var() - EigenPoly(GaussRational(static_cast<Int>(j))));
  }
  return p;
}

unsigned EigenPoly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

void EigenPoly::add_term(unsigned dn, unsigned dm, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({dn, dm}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EigenPoly& EigenPoly::operator+=(const EigenPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

EigenPoly& EigenPoly::operator-=(const EigenPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

EigenPoly operator*(const EigenPoly& a, const EigenPoly& b) {
  EigenPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

EigenPoly operator*(const GaussRational& c, const EigenPoly& p) {
  EigenPoly out;
  for (const auto& [e, v] : p.terms_) out.add_term(e.first, e.second, c * v);
  return out;
}

std::string EigenPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out += " + ";
    first = false;
    std::string mono;
    if (e.first > 0) mono += e.first == 1 ? "n" : "n^" + std::to_string(e.first);
    if (e.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += e.second == 1 ? "m" : "m^" + std::to_string(e.second);
    }
    if (mono.empty()) {
      out += c.str();
    } else if (c == GaussRational(1)) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
  }
  return out;
}

GaussRational eval(const EigenPoly& p, const Lattice& point) {
  GaussRational acc;
  const GaussRational n(point.n);
  const GaussRational m(point.m);
  for (const auto& [e, c] : p.terms()) acc += c * pow(n, e.first) * pow(m, e.second);
  return acc;
}

// ---------------------------------------------------------------------------
// LatticeRay

LatticeRay::LatticeRay(Lattice b, Lattice d) : base(b), direction(d) {
  if (gcd(d.n, d.m) != 1) {
    throw std::invalid_argument("LatticeRay: direction " + to_string(d) + " is not primitive");
  }
}

std::ostream& operator<<(std::ostream& os, const LatticeRay& r) {
  return os << r.base << "+t" << r.direction;
}

namespace {

// Coefficients of (a + b t)^k.
std::vector<GaussRational> linear_power(const GaussRational& a, const GaussRational& b, unsigned k) {
  std::vector<GaussRational> out{GaussRational(1)};
  for (unsigned j = 0; j < k; ++j) {
    std::vector<GaussRational> next(out.size() + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i] += out[i] * a;
      next[i + 1] += out[i] * b;
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<GaussRational> restrict_to_ray(const EigenPoly& p, const LatticeRay& ray) {
  std::vector<GaussRational> out(p.degree() + 1);
  const GaussRational n0(ray.base.n), dn(ray.direction.n);
  const GaussRational m0(ray.base.m), dm(ray.direction.m);
  for (const auto& [e, c] : p.terms()) {
    const auto pn = linear_power(n0, dn, e.first);
    const auto pm = linear_power(m0, dm, e.second);
    for (std::size_t i = 0; i < pn.size(); ++i) {
      if (pn[i].is_zero()) continue;
      for (std::size_t j = 0; j < pm.size(); ++j) out[i + j] += c * pn[i] * pm[j];
    }
  }
  return out;
}

bool vanishes_on_ray(const EigenPoly& p, const LatticeRay& ray) {
  for (const auto& c : restrict_to_ray(p, ray)) {
    if (!c.is_zero()) return false;
  }
  return true;
}

}  // namespace invdiff
