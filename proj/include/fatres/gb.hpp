#ifndef FATRES_GB_HPP
#define FATRES_GB_HPP

#include <optional>
#include <vector>

#include "fatres/module.hpp"

namespace fatres {

/// Generating set of an ideal; is_groebner marks a reduced Groebner basis
/// with respect to `order` (always the ring's active order here).
struct IdealBasis {
  RingPtr ring;
  std::vector<Poly> gens;
  bool is_groebner = false;
  MonomialOrder order;
};

IdealBasis make_ideal(const RingPtr& ring, std::vector<Poly> gens);
IdealBasis unit_ideal(const RingPtr& ring);

/// Generating set of a submodule of a graded free module.
struct ModuleBasis {
  FreeModule ambient;
  std::vector<ModuleVector> gens;
  bool is_groebner = false;
  ModuleOrderPtr order;
};

ModuleBasis make_module_basis(FreeModule ambient, std::vector<ModuleVector> gens,
                              ModuleOrderPtr order);

// Buchberger; output is the reduced Groebner basis (monic leading
// coefficients, fully reduced tails, sorted descending by leading term),
// so it is unique for a fixed order.
IdealBasis groebner(const IdealBasis& basis);
ModuleBasis groebner(const ModuleBasis& basis);
IdealBasis ensure_groebner(const IdealBasis& basis);

struct PolyDivision {
  Poly remainder;
  std::vector<Poly> quotients;  // f = sum quotients[k]*gens[k] + remainder
};
PolyDivision normal_form(const Poly& f, const IdealBasis& gb, bool record = false);

struct MvDivision {
  ModuleVector remainder;
  std::vector<Poly> quotients;
};
MvDivision normal_form(const ModuleVector& v, const ModuleBasis& gb, bool record = false);

bool ideal_membership(const Poly& f, const IdealBasis& I);

IdealBasis ideal_power(const IdealBasis& I, int n);

// elimination method: GB of t*I + (1-t)*J under a block order with t first,
// keeping the t-free elements
IdealBasis ideal_intersection(const IdealBasis& I, const IdealBasis& J);

// {g : g*f in I}, via intersection with (f) and exact division by f
IdealBasis colon_ideal(const IdealBasis& I, const Poly& f);

long long hilbert_function(const IdealBasis& I, int t);  // dim_K (R/I)_t
long long ideal_dim_at(const IdealBasis& I, int t);      // dim_K I_t

/// Kernel of the map from the free module on gens (shifted by generator
/// degrees) onto their span. Schreyer's construction: S-pair reductions of
/// a Groebner input directly yield a Groebner basis of the kernel under the
/// induced order; arbitrary input is handled by rewriting through a tracked
/// basis. Output is the reduced GB of the kernel under the Schreyer order.
ModuleBasis syzygies(const IdealBasis& I);
ModuleBasis syzygies(const ModuleBasis& M);

struct IdealGBWithReps {
  IdealBasis gb;
  std::vector<std::vector<Poly>> reps;  // gb.gens[k] = sum reps[k][g]*original[g]
};
IdealGBWithReps groebner_with_reps(const IdealBasis& I);

struct ModuleGBWithReps {
  ModuleBasis gb;
  std::vector<std::vector<Poly>> reps;
};
ModuleGBWithReps groebner_with_reps(const ModuleBasis& M);

// coordinates of f over the ORIGINAL generators behind g; nullopt if not a member
std::optional<std::vector<Poly>> express_in_terms(const Poly& f, const IdealGBWithReps& g);
std::optional<std::vector<Poly>> express_in_terms(const ModuleVector& v,
                                                  const ModuleGBWithReps& g);

// subset of the reduced GB that minimally generates (elements outside m*I)
std::vector<Poly> minimal_generators(const IdealBasis& I);

Poly poly_exact_divide(const Poly& f, const Poly& divisor);

}  // namespace fatres

#endif
