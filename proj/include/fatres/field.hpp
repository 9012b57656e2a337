#ifndef FATRES_FIELD_HPP
#define FATRES_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fatres {

// Thrown on malformed user input (scheme files, field strings, CLI args).
// Everything else that goes wrong is a logic_error: a broken invariant.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class FieldKind { Rationals, PrimeField };

/// Coefficient field: Q or GF(p) with p a machine-word prime.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;  // 0 for Q

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime_field(std::uint64_t p);

  // Selection syntax: "q" or "gf:<p>".
  static FieldSpec parse(const std::string& s);
  std::string to_string() const;

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

bool is_prime_u64(std::uint64_t n);

/// Immutable field element in canonical form: a reduced fraction with
/// positive denominator over Q, or a residue in [0, p) over GF(p).
class FieldElement {
 public:
  FieldElement() = default;  // zero of Q

  static FieldElement zero(const FieldSpec& spec);
  static FieldElement one(const FieldSpec& spec);
  static FieldElement from_int(const FieldSpec& spec, long v);
  static FieldElement rational(const mpq_class& q);
  static FieldElement rational(long num, long den);
  static FieldElement residue(const FieldSpec& spec, std::uint64_t v);

  // Element syntax: "-3", "1/2" (Q); integers reduced mod p (GF(p)).
  static FieldElement parse(const FieldSpec& spec, const std::string& s);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;  // throws on zero
  FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Total order on canonical forms, used only for deterministic tie-breaks.
  bool operator<(const FieldElement& o) const;

  const mpq_class& rat() const { return rat_; }
  std::uint64_t res() const { return res_; }

  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;

  FieldSpec spec_ = FieldSpec::rationals();
  mpq_class rat_ = 0;       // valid when kind == Rationals
  std::uint64_t res_ = 0;   // valid when kind == PrimeField
};

}  // namespace fatres

#endif
