#include "fatres/field.hpp"

namespace fatres {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit with the standard base set.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) throw input_error("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1ull << 62)) throw input_error("field characteristic too large");  // keeps sums overflow-free
  return {FieldKind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("gf:", 0) == 0) {
    const std::string tail = s.substr(3);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("bad field string '" + s + "'");
    try {
      return prime_field(std::stoull(tail));
    } catch (const std::out_of_range&) {
      throw input_error("field characteristic '" + tail + "' does not fit in a machine word");
    }
  }
  throw input_error("bad field string '" + s + "' (expected 'q' or 'gf:<p>')");
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::Rationals ? "q" : "gf:" + std::to_string(p);
}

FieldElement FieldElement::zero(const FieldSpec& spec) {
  FieldElement e;
  e.spec_ = spec;
  return e;
}

FieldElement FieldElement::one(const FieldSpec& spec) { return from_int(spec, 1); }

FieldElement FieldElement::from_int(const FieldSpec& spec, long v) {
  FieldElement e;
  e.spec_ = spec;
  if (spec.kind == FieldKind::Rationals) {
    e.rat_ = v;
  } else {
    long long r = static_cast<long long>(v) % static_cast<long long>(spec.p);
    if (r < 0) r += static_cast<long long>(spec.p);
    e.res_ = static_cast<std::uint64_t>(r);
  }
  return e;
}

FieldElement FieldElement::rational(const mpq_class& q) {
  FieldElement e;
  e.rat_ = q;
  e.rat_.canonicalize();
  return e;
}

FieldElement FieldElement::rational(long num, long den) {
  if (den == 0) throw input_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return rational(q);
}

FieldElement FieldElement::residue(const FieldSpec& spec, std::uint64_t v) {
  if (spec.kind != FieldKind::PrimeField) throw std::logic_error("residue() needs a prime field");
  FieldElement e;
  e.spec_ = spec;
  e.res_ = v % spec.p;
  return e;
}

FieldElement FieldElement::parse(const FieldSpec& spec, const std::string& s) {
  if (s.empty()) throw input_error("empty field element");
  if (spec.kind == FieldKind::Rationals) {
    try {
      mpq_class q(s);
      if (q.get_den() == 0) throw input_error("zero denominator in '" + s + "'");
      q.canonicalize();
      FieldElement e = rational(q);
      return e;
    } catch (const std::invalid_argument&) {
      throw input_error("bad rational '" + s + "'");
    }
  }
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') { neg = s[0] == '-'; i = 1; }
  if (i >= s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
    throw input_error("bad GF(" + std::to_string(spec.p) + ") element '" + s + "'");
  mpz_class z(s.substr(i));
  mpz_class r = z % spec.p;
  std::uint64_t v = r.get_ui();
  if (neg && v != 0) v = spec.p - v;
  return residue(spec, v);
}

bool FieldElement::is_zero() const {
  return spec_.kind == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
  return spec_.kind == FieldKind::Rationals ? rat_ == 1 : res_ == 1;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (spec_ != o.spec_) throw std::logic_error("mixed-field operands");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement e;
  e.spec_ = spec_;
  if (spec_.kind == FieldKind::Rationals) {
    e.rat_ = rat_ + o.rat_;
  } else {
    std::uint64_t s = res_ + o.res_;  // p < 2^63, no overflow
    e.res_ = s >= spec_.p ? s - spec_.p : s;
  }
  return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  FieldElement e;
  e.spec_ = spec_;
  if (spec_.kind == FieldKind::Rationals)
    e.rat_ = rat_ * o.rat_;
  else
    e.res_ = mulmod_u64(res_, o.res_, spec_.p);
  return e;
}

FieldElement FieldElement::operator-() const {
  FieldElement e;
  e.spec_ = spec_;
  if (spec_.kind == FieldKind::Rationals)
    e.rat_ = -rat_;
  else
    e.res_ = res_ == 0 ? 0 : spec_.p - res_;
  return e;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw std::domain_error("inversion of zero");
  FieldElement e;
  e.spec_ = spec_;
  if (spec_.kind == FieldKind::Rationals)
    e.rat_ = 1 / rat_;
  else
    e.res_ = powmod_u64(res_, spec_.p - 2, spec_.p);
  return e;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (spec_ != o.spec_) return false;
  return spec_.kind == FieldKind::Rationals ? rat_ == o.rat_ : res_ == o.res_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  check_same(o);
  return spec_.kind == FieldKind::Rationals ? rat_ < o.rat_ : res_ < o.res_;
}

std::string FieldElement::to_string() const {
  if (spec_.kind == FieldKind::Rationals) return rat_.get_str();
  return std::to_string(res_);
}

}  // namespace fatres
