#ifndef FATRES_MONOMIAL_HPP
#define FATRES_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace fatres {

/// Exponent vector of fixed length nvars. Degree is the exponent sum.
struct Monomial {
  std::vector<int> exps;

  static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
  static Monomial var(int nvars, int idx, int power = 1);

  int nvars() const { return static_cast<int>(exps.size()); }
  int degree() const;
  bool is_one() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  Monomial operator/(const Monomial& m) const;  // caller guarantees divisibility
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& m) const { return exps == m.exps; }
  bool operator!=(const Monomial& m) const { return exps != m.exps; }
};

enum class OrderKind { GradedReverseLex, Lex, BlockElimination };

/// Total multiplicative monomial order with 1 minimal.
/// BlockElimination(k) compares the first k variables grevlex-style first,
/// then the remaining ones; any monomial involving a block-1 variable beats
/// every monomial free of them.
struct MonomialOrder {
  OrderKind kind = OrderKind::GradedReverseLex;
  int block = 0;  // first k variables for BlockElimination

  static MonomialOrder grevlex() { return {OrderKind::GradedReverseLex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block_elim(int k) { return {OrderKind::BlockElimination, k}; }

  // -1, 0, +1 for a < b, a = b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
};

}  // namespace fatres

#endif
