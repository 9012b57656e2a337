#ifndef FATRES_MODULE_HPP
#define FATRES_MODULE_HPP

#include <memory>
#include <vector>

#include "fatres/poly.hpp"

namespace fatres {

/// Provenance tag (k, i, j): generator k of the j-th module in the
/// resolution attached to ladder level i. Unset fields are -1.
struct GenLabel {
  int k = -1;
  int i = -1;
  int j = -1;
  bool operator==(const GenLabel& o) const { return k == o.k && i == o.i && j == o.j; }
};

/// Graded free module: generator k has degree shifts[k], so R(-a) has shift a.
struct FreeModule {
  RingPtr ring;
  std::vector<int> shifts;
  std::vector<GenLabel> labels;  // empty or one per generator

  static FreeModule make(RingPtr ring, std::vector<int> shifts);
  int rank() const { return static_cast<int>(shifts.size()); }
  int max_shift() const;

  bool same_shape(const FreeModule& o) const {
    return ring && o.ring && *ring == *o.ring && shifts == o.shifts;
  }
};

/// Element of a free module as one polynomial per generator.
struct ModuleVector {
  std::vector<Poly> coords;

  static ModuleVector zero(const FreeModule& mod);
  static ModuleVector unit(const FreeModule& mod, int comp);

  bool is_zero() const;
  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector operator-() const;
  ModuleVector times_term(const Monomial& m, const FieldElement& c) const;
  ModuleVector times_poly(const Poly& p) const;
  ModuleVector scaled(const FieldElement& c) const;
  bool operator==(const ModuleVector& o) const { return coords == o.coords; }
};

// degree of a homogeneous vector: deg coords[k] + shifts[k]; -1 for zero
int mv_degree(const FreeModule& mod, const ModuleVector& v);
bool mv_is_homogeneous(const FreeModule& mod, const ModuleVector& v);

struct ModuleMonomial {
  int comp = 0;
  Monomial mon;
  bool operator==(const ModuleMonomial& o) const { return comp == o.comp && mon == o.mon; }
};

class ModuleOrder;
using ModuleOrderPtr = std::shared_ptr<const ModuleOrder>;

/// Order on module monomials. Schreyer orders compare images under the
/// recorded leading terms in the parent module, breaking ties by position;
/// lower position always wins ties.
class ModuleOrder {
 public:
  enum class Kind { TermOverPosition, PositionOverTerm, Schreyer };

  static ModuleOrderPtr top(MonomialOrder base);
  static ModuleOrderPtr pot(MonomialOrder base);
  static ModuleOrderPtr schreyer(ModuleOrderPtr parent, std::vector<ModuleMonomial> labels);

  int compare(const ModuleMonomial& a, const ModuleMonomial& b) const;
  Kind kind() const { return kind_; }

 private:
  Kind kind_ = Kind::TermOverPosition;
  MonomialOrder base_;
  ModuleOrderPtr parent_;
  std::vector<ModuleMonomial> labels_;
};

// leading module term under the given order; throws on zero
struct ModuleTerm {
  ModuleMonomial mm;
  FieldElement coeff;
};
ModuleTerm mv_lt(const ModuleVector& v, const ModuleOrder& order);

}  // namespace fatres

#endif
