#include "fatres/module.hpp"

#include <algorithm>

namespace fatres {

FreeModule FreeModule::make(RingPtr ring, std::vector<int> shifts) {
  FreeModule m;
  m.ring = std::move(ring);
  m.shifts = std::move(shifts);
  return m;
}

int FreeModule::max_shift() const {
  int mx = 0;
  for (int s : shifts) mx = std::max(mx, s);
  return mx;
}

ModuleVector ModuleVector::zero(const FreeModule& mod) {
  ModuleVector v;
  v.coords.assign(mod.rank(), Poly::zero(mod.ring));
  return v;
}

ModuleVector ModuleVector::unit(const FreeModule& mod, int comp) {
  ModuleVector v = zero(mod);
  v.coords.at(comp) = Poly::constant(mod.ring, FieldElement::one(mod.ring->field));
  return v;
}

bool ModuleVector::is_zero() const {
  for (const Poly& p : coords)
    if (!p.is_zero()) return false;
  return true;
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  ModuleVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = r.coords[i] + o.coords[i];
  return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const { return *this + (-o); }

ModuleVector ModuleVector::operator-() const {
  ModuleVector r = *this;
  for (Poly& p : r.coords) p = -p;
  return r;
}

ModuleVector ModuleVector::times_term(const Monomial& m, const FieldElement& c) const {
  ModuleVector r = *this;
  for (Poly& p : r.coords) p = p.times_term(m, c);
  return r;
}

ModuleVector ModuleVector::times_poly(const Poly& p) const {
  ModuleVector r = *this;
  for (Poly& q : r.coords) q = q * p;
  return r;
}

ModuleVector ModuleVector::scaled(const FieldElement& c) const {
  ModuleVector r = *this;
  for (Poly& p : r.coords) p = p.scaled(c);
  return r;
}

int mv_degree(const FreeModule& mod, const ModuleVector& v) {
  int d = -1;
  for (int k = 0; k < mod.rank(); ++k)
    if (!v.coords[k].is_zero()) d = std::max(d, v.coords[k].degree() + mod.shifts[k]);
  return d;
}

bool mv_is_homogeneous(const FreeModule& mod, const ModuleVector& v) {
  int d = -1;
  for (int k = 0; k < mod.rank(); ++k) {
    const Poly& p = v.coords[k];
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return false;
    int dk = p.degree() + mod.shifts[k];
    if (d == -1) d = dk;
    else if (d != dk) return false;
  }
  return true;
}

ModuleOrderPtr ModuleOrder::top(MonomialOrder base) {
  auto o = std::make_shared<ModuleOrder>();
  o->kind_ = Kind::TermOverPosition;
  o->base_ = base;
  return o;
}

ModuleOrderPtr ModuleOrder::pot(MonomialOrder base) {
  auto o = std::make_shared<ModuleOrder>();
  o->kind_ = Kind::PositionOverTerm;
  o->base_ = base;
  return o;
}

ModuleOrderPtr ModuleOrder::schreyer(ModuleOrderPtr parent, std::vector<ModuleMonomial> labels) {
  auto o = std::make_shared<ModuleOrder>();
  o->kind_ = Kind::Schreyer;
  o->parent_ = std::move(parent);
  o->labels_ = std::move(labels);
  return o;
}

int ModuleOrder::compare(const ModuleMonomial& a, const ModuleMonomial& b) const {
  switch (kind_) {
    case Kind::TermOverPosition: {
      int c = base_.compare(a.mon, b.mon);
      if (c) return c;
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return 0;
    }
    case Kind::PositionOverTerm: {
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return base_.compare(a.mon, b.mon);
    }
    case Kind::Schreyer: {
      const ModuleMonomial& la = labels_.at(a.comp);
      const ModuleMonomial& lb = labels_.at(b.comp);
      int c = parent_->compare({la.comp, a.mon * la.mon}, {lb.comp, b.mon * lb.mon});
      if (c) return c;
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

ModuleTerm mv_lt(const ModuleVector& v, const ModuleOrder& order) {
  bool found = false;
  ModuleTerm best;
  for (std::size_t k = 0; k < v.coords.size(); ++k) {
    const Poly& p = v.coords[k];
    if (p.is_zero()) continue;
    ModuleMonomial cand{static_cast<int>(k), p.lm()};
    if (!found || order.compare(cand, best.mm) > 0) {
      best = {cand, p.lc()};
      found = true;
    }
  }
  if (!found) throw std::logic_error("leading term of zero module vector");
  return best;
}

}  // namespace fatres
