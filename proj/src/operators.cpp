#include "invdiff/operators.hpp"

#include <algorithm>
#include <vector>

namespace invdiff {

Int falling_factorial(Int a, unsigned k) {
  Int out = 1;
  for (unsigned j = 0; j < k; ++j) out *= a - static_cast<Int>(j);
  return out;
}

namespace {

Int binomial(unsigned n, unsigned k) {
  Int out = 1;
  for (unsigned j = 1; j <= k; ++j) out = out * static_cast<Int>(n - k + j) / static_cast<Int>(j);
  return out;
}

bool is_negative(const GaussRational& c) { return sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0); }

std::string power(const std::string& base, Int e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

// Factors of one term without the coefficient, e.g. {"u^2", "e(1)", "Du"}.
std::vector<std::string> factors(const TermKey& key, const Notation& names, const char* xi1 = nullptr,
                                 const char* xi2 = nullptr) {
  std::vector<std::string> out;
  if (key.coef.n != 0) out.push_back(power(names.first, key.coef.n));
  if (key.coef.m != 0) {
    if (names.mode == SecondMode::Angular) {
      out.push_back(names.second + "(" + std::to_string(key.coef.m) + ")");
    } else {
      out.push_back(power(names.second, key.coef.m));
    }
  }
  if (key.d1 > 0) out.push_back(power(xi1 ? xi1 : names.d1, key.d1));
  if (key.d2 > 0) out.push_back(power(xi2 ? xi2 : names.d2, key.d2));
  return out;
}

// Display order: by D1 power, then D2 power (both descending), then coefficient exponent.
std::vector<std::pair<TermKey, GaussRational>> display_order(const std::map<TermKey, GaussRational>& t) {
  std::vector<std::pair<TermKey, GaussRational>> v(t.begin(), t.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    const auto& a = x.first;
    const auto& b = y.first;
    if (a.d1 != b.d1) return a.d1 > b.d1;
    if (a.d2 != b.d2) return a.d2 > b.d2;
    if (a.coef.n != b.coef.n) return a.coef.n > b.coef.n;
    return a.coef.m > b.coef.m;
  });
  return v;
}

std::string render(const std::map<TermKey, GaussRational>& terms, const Notation& names,
                   const char* xi1 = nullptr, const char* xi2 = nullptr) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : display_order(terms)) {
    const bool neg = is_negative(c);
    const GaussRational mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    auto f = factors(key, names, xi1, xi2);
    if (mag != GaussRational(1) || f.empty()) f.insert(f.begin(), mag.str());
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k > 0) out += "*";
      out += f[k];
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PrincipalSymbol

PrincipalSymbol operator*(const PrincipalSymbol& a, const PrincipalSymbol& b) {
  PrincipalSymbol out;
  out.order = a.order + b.order;
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      const TermKey k{ka.coef + kb.coef, ka.d1 + kb.d1, ka.d2 + kb.d2};
      auto [it, inserted] = out.terms.try_emplace(k, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  }
  return out;
}

std::string PrincipalSymbol::str(const Notation& names) const {
  return render(terms, names, "xi1", "xi2");
}

// ---------------------------------------------------------------------------
// OreOperator

OreOperator OreOperator::scalar(SecondMode mode, const GaussRational& c) {
  return term(mode, TermKey{}, c);
}

OreOperator OreOperator::monomial(SecondMode mode, const Lattice& exponent, const GaussRational& c) {
  return term(mode, TermKey{exponent, 0, 0}, c);
}

OreOperator OreOperator::d1(SecondMode mode) { return term(mode, TermKey{{0, 0}, 1, 0}, 1); }
OreOperator OreOperator::d2(SecondMode mode) { return term(mode, TermKey{{0, 0}, 0, 1}, 1); }

OreOperator OreOperator::term(SecondMode mode, const TermKey& key, const GaussRational& c) {
  OreOperator p(mode);
  p.add_term(key, c);
  return p;
}

unsigned OreOperator::order() const {
  unsigned out = 0;
  for (const auto& [k, c] : terms_) out = std::max(out, k.order());
  return out;
}

GaussRational OreOperator::coefficient(const TermKey& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? GaussRational() : it->second;
}

void OreOperator::add_term(const TermKey& key, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void OreOperator::check_mode(const OreOperator& o) const {
  if (mode_ != o.mode_) throw MixedConvention("OreOperator: operands use different D2 conventions");
}

OreOperator& OreOperator::operator+=(const OreOperator& o) {
  check_mode(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

OreOperator& OreOperator::operator-=(const OreOperator& o) {
  check_mode(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

OreOperator OreOperator::operator-() const { return GaussRational(-1) * *this; }

OreOperator operator*(const GaussRational& c, const OreOperator& p) {
  OreOperator out(p.mode_);
  for (const auto& [k, v] : p.terms_) out.add_term(k, c * v);
  return out;
}

OreOperator operator*(const OreOperator& p, const OreOperator& q) {
  p.check_mode(q);
  const bool angular = p.mode_ == SecondMode::Angular;
  OreOperator out(p.mode_);
  for (const auto& [kp, cp] : p.terms_) {
    for (const auto& [kq, cq] : q.terms_) {
      // D1^d x^a = sum_j C(d,j) ff(a,j) x^{a-j} D1^{d-j}
      for (unsigned j = 0; j <= kp.d1; ++j) {
        const Int f1 = binomial(kp.d1, j) * falling_factorial(kq.coef.n, j);
        if (f1 == 0) continue;
        for (unsigned l = 0; l <= kp.d2; ++l) {
          // Angular:        D2^e chi^b = sum_l C(e,l) (ib)^l chi^b D2^{e-l}
          // Multiplicative: D2^e s^b   = sum_l C(e,l) ff(b,l) s^{b-l} D2^{e-l}
          GaussRational f2;
          Int drop = 0;
          if (angular) {
            f2 = GaussRational(binomial(kp.d2, l)) *
                 pow(GaussRational(Rational(0), Rational(static_cast<long>(kq.coef.m))), l);
          } else {
            f2 = GaussRational(binomial(kp.d2, l) * falling_factorial(kq.coef.m, l));
            drop = l;
          }
          if (f2.is_zero()) continue;
          const TermKey k{{kp.coef.n + kq.coef.n - static_cast<Int>(j), kp.coef.m + kq.coef.m - drop},
                          kp.d1 - j + kq.d1,
                          kp.d2 - l + kq.d2};
          out.add_term(k, cp * cq * GaussRational(f1) * f2);
        }
      }
    }
  }
  return out;
}

ShiftDecomposition OreOperator::shift_decomposition() const {
  ShiftDecomposition out;
  const bool angular = mode_ == SecondMode::Angular;
  for (const auto& [k, c] : terms_) {
    const Lattice shift{k.coef.n - static_cast<Int>(k.d1),
                        k.coef.m - (angular ? 0 : static_cast<Int>(k.d2))};
    EigenPoly p = c * EigenPoly::falling_n(k.d1);
    if (angular) {
      EigenPoly im;
      im.add_term(0, k.d2, pow(GaussRational::i(), k.d2));
      p = p * im;
    } else {
      p = p * EigenPoly::falling_m(k.d2);
    }
    out[shift] += p;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

PrincipalSymbol OreOperator::principal_symbol() const {
  if (is_zero()) throw ZeroOperator("principal_symbol: zero operator has no symbol");
  PrincipalSymbol s;
  s.order = order();
  for (const auto& [k, c] : terms_) {
    if (k.order() == s.order) s.terms.emplace(k, c);
  }
  return s;
}

std::string OreOperator::str(const Notation& names) const { return render(terms_, names); }

std::string OreOperator::str() const {
  return str(mode_ == SecondMode::Angular ? Notation::cone() : Notation::ruled());
}

OreOperator commutator(const OreOperator& p, const OreOperator& q) { return p * q - q * p; }

RingElement apply(const OreOperator& p, const RingElement& f) {
  const bool angular = p.mode() == SecondMode::Angular;
  RingElement::Terms acc;
  for (const auto& [s, a] : f.terms()) {
    for (const auto& [k, c] : p.terms()) {
      GaussRational v = a * c * GaussRational(falling_factorial(s.n, k.d1));
      Int m_out = s.m + k.coef.m;
      if (angular) {
        v *= pow(GaussRational(Rational(0), Rational(static_cast<long>(s.m))), k.d2);
      } else {
        v *= GaussRational(falling_factorial(s.m, k.d2));
        m_out -= static_cast<Int>(k.d2);
      }
      if (v.is_zero()) continue;
      acc[{s.n - static_cast<Int>(k.d1) + k.coef.n, m_out}] += v;
    }
  }
  return RingElement::from_terms(f.semigroup(), std::move(acc));
}

}  // namespace invdiff
