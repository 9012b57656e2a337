#include "fatres/monomial.hpp"

#include <stdexcept>

namespace fatres {

Monomial Monomial::var(int nvars, int idx, int power) {
  Monomial m = one(nvars);
  m.exps.at(idx) = power;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (int e : exps)
    if (e) return false;
  return true;
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > m.exps[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += m.exps[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    r.exps[i] -= m.exps[i];
    if (r.exps[i] < 0) throw std::logic_error("monomial division not exact");
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (b.exps[i] > r.exps[i]) r.exps[i] = b.exps[i];
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > 0 && b.exps[i] > 0) return false;
  return true;
}

namespace {

// grevlex on a contiguous variable range [lo, hi)
int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) { da += a.exps[i]; db += b.exps[i]; }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
  }
  return 0;
}

int cmp_lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const int n = a.nvars();
  switch (kind) {
    case OrderKind::GradedReverseLex:
      return cmp_grevlex_range(a, b, 0, n);
    case OrderKind::Lex:
      return cmp_lex_range(a, b, 0, n);
    case OrderKind::BlockElimination: {
      int c = cmp_grevlex_range(a, b, 0, block);
      if (c) return c;
      return cmp_grevlex_range(a, b, block, n);
    }
  }
  return 0;
}

}  // namespace fatres
