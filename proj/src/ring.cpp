#include "invdiff/ring.hpp"

#include <string>

namespace invdiff {

RingElement RingElement::monomial(SemigroupPtr s, const Lattice& point, const GaussRational& coef) {
  Terms t;
  if (!coef.is_zero()) t.emplace(point, coef);
  return from_terms(std::move(s), std::move(t));
}

RingElement RingElement::from_terms(SemigroupPtr s, Terms terms) {
  RingElement out(std::move(s));
  for (auto& [p, c] : terms) {
    if (!c.is_zero()) out.terms_.emplace(p, std::move(c));
  }
  out.ambient_ = !out.support_in_semigroup();
  return out;
}

bool RingElement::support_in_semigroup() const {
  for (const auto& [p, c] : terms_) {
    if (!semigroup_->contains(p)) return false;
  }
  return true;
}

GaussRational RingElement::coefficient(const Lattice& point) const {
  const auto it = terms_.find(point);
  return it == terms_.end() ? GaussRational() : it->second;
}

void RingElement::add_term(const Lattice& p, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void RingElement::check_same(const RingElement& o, const char* op) const {
  if (!(*semigroup_ == *o.semigroup_)) {
    throw MixedSemigroup(std::string("RingElement::") + op + ": operands live on different semigroups");
  }
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_same(o, "add");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  ambient_ = ambient_ || o.ambient_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check_same(o, "sub");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  ambient_ = ambient_ || o.ambient_;
  return *this;
}

RingElement operator*(const GaussRational& c, const RingElement& f) {
  RingElement out(f.semigroup_);
  for (const auto& [p, v] : f.terms_) out.add_term(p, c * v);
  out.ambient_ = f.ambient_;
  return out;
}

RingElement mul(const RingElement& f, const RingElement& g) {
  f.check_same(g, "mul");
  RingElement out(f.semigroup_);
  for (const auto& [p, a] : f.terms_) {
    for (const auto& [q, b] : g.terms_) out.add_term(p + q, a * b);
  }
  out.ambient_ = f.ambient_ || g.ambient_;
  return out;
}

RingElement weight_component(const RingElement& f, const TorusAction& act, const Weight& lambda) {
  RingElement::Terms t;
  for (const auto& [p, c] : f.terms()) {
    if (act.weight(p) == lambda) t.emplace(p, c);
  }
  auto out = RingElement::from_terms(f.semigroup(), std::move(t));
  return out;
}

}  // namespace invdiff
