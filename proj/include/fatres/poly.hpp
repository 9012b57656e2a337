#ifndef FATRES_POLY_HPP
#define FATRES_POLY_HPP

#include <memory>
#include <string>
#include <vector>

#include "fatres/field.hpp"
#include "fatres/monomial.hpp"

namespace fatres {

/// Polynomial ring K[vars] with an active monomial order. Terms of every
/// Poly over the ring stay sorted descending under that order.
struct RingSpec {
  int nvars = 0;
  std::vector<std::string> var_names;
  FieldSpec field;
  bool first_var_is_x0 = false;  // index 0 is the distinguished hyperplane variable
  MonomialOrder order = MonomialOrder::grevlex();

  bool operator==(const RingSpec& o) const {
    return nvars == o.nvars && var_names == o.var_names && field == o.field &&
           first_var_is_x0 == o.first_var_is_x0 && order == o.order;
  }
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

  int var_index(const std::string& name) const;  // -1 if absent
};

using RingPtr = std::shared_ptr<const RingSpec>;

// Ring of P^n coordinates: nvars = n+1, names x{base}..x{base+n}.
// base 0 marks the first variable as the hyperplane variable x0.
RingPtr make_ring(int nvars, const FieldSpec& field, int base_index = 0,
                  MonomialOrder order = MonomialOrder::grevlex());
RingPtr make_ring(std::vector<std::string> names, const FieldSpec& field,
                  bool first_var_is_x0, MonomialOrder order = MonomialOrder::grevlex());
// Same variables under a different active order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

struct Term {
  Monomial mon;
  FieldElement coeff;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(const RingPtr& ring) { return Poly(ring); }
  static Poly constant(const RingPtr& ring, const FieldElement& c);
  static Poly term(const RingPtr& ring, const Monomial& m, const FieldElement& c);
  static Poly variable(const RingPtr& ring, int idx);

  // Syntax: "3*x0^2*x1 - 1/2*x2^3".
  static Poly parse(const RingPtr& ring, const std::string& text);
  std::string to_string() const;

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }

  // leading term under the ring's active order
  const Term& lt() const;
  const Monomial& lm() const { return lt().mon; }
  const FieldElement& lc() const { return lt().coeff; }

  int degree() const;  // max term degree; -1 for zero
  bool is_homogeneous() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const FieldElement& c) const;
  Poly times_term(const Monomial& m, const FieldElement& c) const;
  Poly monic() const;  // leading coefficient normalized to 1

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  FieldElement coeff_of(const Monomial& m) const;

  Poly derivative(int var_index) const;

  // Re-sort terms for a structurally identical ring with another order.
  Poly transported(const RingPtr& other) const;

  // Build from an unsorted term list; merges duplicates, drops zeros.
  static Poly from_terms(const RingPtr& ring, std::vector<Term> ts);

 private:
  void check_ring(const Poly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;  // descending under ring_->order, no zero coeffs
};

// canonical inclusion R c R': same trailing variables, one extra leading x0
Poly embed_into(const Poly& f, const RingPtr& bigger);
// substitute x0 = 0 and drop the variable
Poly restrict_to_hyperplane(const Poly& f, const RingPtr& smaller);

// all monomials of the given degree, in descending ring order
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree);
long long binom(long long n, long long k);

}  // namespace fatres

#endif
