#ifndef FATRES_LIFT_HPP
#define FATRES_LIFT_HPP

#include "fatres/resolve.hpp"

namespace fatres {

/// Chain maps f_j : F^M_j -> F^N_j covering an ideal inclusion, commuting
/// with the differentials. constrained marks that every nonzero entry of
/// every f_j has degree >= 1.
struct ComparisonMaps {
  std::vector<ChainMap> maps;  // index j = 0..length(resM)
  bool constrained = false;
};

/// Raised when the linear-entry lift has no solution at some level even
/// though the generator-level containment held; callers may fall back to
/// the unconstrained lift.
class constrained_lift_error : public std::runtime_error {
 public:
  explicit constrained_lift_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lift of the inclusion ideal(resM) subset ideal(resN): f_0 expresses the
// generators through a tracked GB of the target generators, higher maps
// express f_j of the differential through the image of the next target
// differential by module normal form with recorded quotients.
ComparisonMaps lift_chain_map(const Resolution& resM, const Resolution& resN);

// Same contract, with every entry chosen of degree >= 1: each column is
// solved in its graded piece with the degree-0 coordinate slots forced to
// zero. Requires check_R1_containment of the resolved ideals.
ComparisonMaps lift_chain_map_R1(const Resolution& resM, const Resolution& resN);

// every minimal generator of I lies in the span of (linear form) * J,
// decided by exact linear algebra degree by degree
bool check_R1_containment(const IdealBasis& I, const IdealBasis& J);

struct EulerWitness {
  enum class Status { Success, PartialNotInIdeal, CharDividesDegree };
  Status status = Status::Success;
  std::vector<Poly> factors;  // inv(deg f) * df/dx_i, one per variable
  std::vector<std::vector<Poly>> certificates;  // normal-form quotients vs GB(J)
  int failed_var = -1;
  bool ok() const { return status == Status::Success; }
};

// decomposition f = sum_i x_i * (inv(deg f) df/dx_i) with membership
// certificates of every factor in J; unusable when char K divides deg f
EulerWitness euler_witness(const Poly& f, const IdealBasis& J);

// min generator degree of I exceeds max generator degree of J, a
// sufficient condition for the containment
bool degree_shift_check(const IdealBasis& I, const IdealBasis& J);

enum class ContainmentWitness { Euler, MonomialDirect, DegreeShift, LinearAlgebra };

struct ContainmentVerdict {
  bool holds = false;
  ContainmentWitness witness = ContainmentWitness::LinearAlgebra;
};

// cheapest-witness cascade used for reporting: euler, then direct
// divisibility for monomial ideals, then the degree-shift condition,
// then the authoritative linear algebra
ContainmentVerdict classify_containment(const IdealBasis& I, const IdealBasis& J);

std::string witness_name(ContainmentWitness w);

}  // namespace fatres

#endif
