#include "fatres/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fatres {

int RingSpec::var_index(const std::string& name) const {
  for (int i = 0; i < nvars; ++i)
    if (var_names[i] == name) return i;
  return -1;
}

RingPtr make_ring(int nvars, const FieldSpec& field, int base_index, MonomialOrder order) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(base_index + i));
  return make_ring(std::move(names), field, base_index == 0, order);
}

RingPtr make_ring(std::vector<std::string> names, const FieldSpec& field, bool first_var_is_x0,
                  MonomialOrder order) {
  if (names.empty()) throw std::logic_error("ring needs at least one variable");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw std::logic_error("duplicate variable name " + names[i]);
  auto r = std::make_shared<RingSpec>();
  r->nvars = static_cast<int>(names.size());
  r->var_names = std::move(names);
  r->field = field;
  r->first_var_is_x0 = first_var_is_x0;
  r->order = order;
  return r;
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  auto r = std::make_shared<RingSpec>(*ring);
  r->order = order;
  return r;
}

Poly Poly::constant(const RingPtr& ring, const FieldElement& c) {
  return term(ring, Monomial::one(ring->nvars), c);
}

Poly Poly::term(const RingPtr& ring, const Monomial& m, const FieldElement& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::variable(const RingPtr& ring, int idx) {
  return term(ring, Monomial::var(ring->nvars, idx), FieldElement::one(ring->field));
}

const Term& Poly::lt() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

int Poly::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().mon.degree();
  for (const Term& t : terms_)
    if (t.mon.degree() != d) return false;
  return true;
}

void Poly::check_ring(const Poly& o) const {
  if (!ring_ || !o.ring_ || *ring_ != *o.ring_) throw std::logic_error("ring mismatch");
}

Poly Poly::from_terms(const RingPtr& ring, std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return ring->order.compare(a.mon, b.mon) > 0;
  });
  Poly p(ring);
  for (auto& t : ts) {
    if (t.coeff.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  check_ring(o);
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->order.compare(terms_[i].mon, o.terms_[j].mon);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mon, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_term(const Monomial& m, const FieldElement& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mon * m, t.coeff * c});
  return r;  // multiplying by a fixed monomial preserves the term order
}

Poly Poly::operator*(const Poly& o) const {
  check_ring(o);
  Poly r(ring_);
  for (const Term& t : o.terms_) r = r + times_term(t.mon, t.coeff);
  return r;
}

Poly Poly::scaled(const FieldElement& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inv());
}

bool Poly::operator==(const Poly& o) const {
  if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
  if (*ring_ != *o.ring_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

FieldElement Poly::coeff_of(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.mon == m) return t.coeff;
  return FieldElement::zero(ring_->field);
}

Poly Poly::derivative(int var_index) const {
  if (var_index < 0 || var_index >= ring_->nvars) throw std::logic_error("bad variable index");
  std::vector<Term> ts;
  for (const Term& t : terms_) {
    int e = t.mon.exps[var_index];
    if (e == 0) continue;
    FieldElement c = t.coeff * FieldElement::from_int(ring_->field, e);
    if (c.is_zero()) continue;
    Monomial m = t.mon;
    m.exps[var_index] -= 1;
    ts.push_back({m, c});
  }
  return from_terms(ring_, std::move(ts));
}

Poly Poly::transported(const RingPtr& other) const {
  if (other->nvars != ring_->nvars || other->field != ring_->field)
    throw std::logic_error("transport between incompatible rings");
  return from_terms(other, terms_);
}

Poly embed_into(const Poly& f, const RingPtr& bigger) {
  const RingPtr& small = f.ring();
  if (bigger->nvars != small->nvars + 1 || bigger->field != small->field)
    throw std::logic_error("ring shape mismatch in embedding");
  for (int i = 0; i < small->nvars; ++i)
    if (bigger->var_names[i + 1] != small->var_names[i])
      throw std::logic_error("ring shape mismatch in embedding");
  std::vector<Term> ts;
  for (const Term& t : f.terms()) {
    Monomial m = Monomial::one(bigger->nvars);
    std::copy(t.mon.exps.begin(), t.mon.exps.end(), m.exps.begin() + 1);
    ts.push_back({m, t.coeff});
  }
  return Poly::from_terms(bigger, std::move(ts));
}

Poly restrict_to_hyperplane(const Poly& f, const RingPtr& smaller) {
  const RingPtr& big = f.ring();
  if (big->nvars != smaller->nvars + 1 || big->field != smaller->field)
    throw std::logic_error("ring shape mismatch in restriction");
  std::vector<Term> ts;
  for (const Term& t : f.terms()) {
    if (t.mon.exps[0] != 0) continue;
    Monomial m = Monomial::one(smaller->nvars);
    std::copy(t.mon.exps.begin() + 1, t.mon.exps.end(), m.exps.begin());
    ts.push_back({m, t.coeff});
  }
  return Poly::from_terms(smaller, std::move(ts));
}

// ---------------------------------------------------------------- printing

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    std::string c = t.coeff.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) c = c.substr(1);
    std::vector<std::string> factors;
    if (c != "1" || t.mon.is_one()) factors.push_back(c);
    for (int i = 0; i < ring_->nvars; ++i) {
      int e = t.mon.exps[i];
      if (e == 0) continue;
      std::string v = ring_->var_names[i];
      if (e > 1) v += "^" + std::to_string(e);
      factors.push_back(v);
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
    first = false;
  }
  return out.str();
}

// ----------------------------------------------------------------- parsing

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    return s.substr(start, pos - start);
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

}  // namespace

Poly Poly::parse(const RingPtr& ring, const std::string& text) {
  Lexer lx{text};
  std::vector<Term> ts;
  bool first = true;
  while (true) {
    lx.skip_ws();
    if (lx.pos >= text.size()) break;
    bool neg = false;
    if (lx.eat('+')) {
    } else if (lx.eat('-')) {
      neg = true;
    } else if (!first) {
      throw input_error("expected '+' or '-' at position " + std::to_string(lx.pos) +
                        " in '" + text + "'");
    }
    first = false;

    FieldElement coeff = FieldElement::one(ring->field);
    Monomial mon = Monomial::one(ring->nvars);
    bool saw_factor = false;
    while (true) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= FieldElement::parse(ring->field, lx.number());
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = lx.ident();
        int idx = ring->var_index(name);
        if (idx < 0) throw input_error("unknown variable '" + name + "' in '" + text + "'");
        int e = 1;
        if (lx.eat('^')) {
          std::string num = lx.number();
          if (num.empty()) throw input_error("missing exponent in '" + text + "'");
          e = std::stoi(num);
        }
        mon.exps[idx] += e;
        saw_factor = true;
      } else {
        throw input_error("expected a factor in '" + text + "'");
      }
      if (!lx.eat('*')) break;
    }
    if (!saw_factor) throw input_error("empty term in '" + text + "'");
    if (neg) coeff = -coeff;
    ts.push_back({mon, coeff});
  }
  if (ts.empty()) throw input_error("empty polynomial text");
  return from_terms(ring, std::move(ts));
}

// -------------------------------------------------------------- enumeration

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void enum_rec(std::vector<Monomial>& out, Monomial& cur, int var, int remaining) {
  const int n = cur.nvars();
  if (var == n - 1) {
    cur.exps[var] = remaining;
    out.push_back(cur);
    cur.exps[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.exps[var] = e;
    enum_rec(out, cur, var + 1, remaining - e);
  }
  cur.exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur = Monomial::one(ring->nvars);
  enum_rec(out, cur, 0, degree);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return ring->order.compare(a, b) > 0;
  });
  return out;
}

}  // namespace fatres
