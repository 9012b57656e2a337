#ifndef FATRES_HYPERCONE_HPP
#define FATRES_HYPERCONE_HPP

#include <functional>
#include <optional>

#include "fatres/fatpoints.hpp"
#include "fatres/lift.hpp"
#include "fatres/resolve.hpp"

namespace fatres {

/// Everything the cone assembly consumes for a scheme Z' with support in
/// x0 = 0: the truncation ideals I(Z_1)..I(Z_m) over R, their minimal
/// resolutions, and the comparison maps covering each inclusion
/// I(Z_i) c I(Z_{i-1}). Index 0 carries the unit ideal with its rank-1
/// resolution.
struct LadderData {
  FatPointScheme scheme_zprime;  // in P^d
  FatPointScheme scheme_z;       // projected to P^{d-1}
  int max_mult = 0;
  RingPtr R;       // K[x1..xd]
  RingPtr Rprime;  // K[x0..xd]
  std::vector<IdealBasis> ideals;            // i = 0..m
  std::vector<Resolution> resolutions;       // i = 0..m, minimal over R
  std::vector<ComparisonMaps> comparisons;   // [i-1]: resolution i -> i-1
  std::vector<bool> criterion_flags;         // [i-1]: I(Z_i) c R_1 I(Z_{i-1})
  std::vector<bool> constrained_used;        // [i-1]: the lift kept entries linear

  bool all_flags() const;
  bool all_constrained() const;
};

// resolver(Z_i, R) must return a minimal resolution of fat_point_ideal(Z_i, R)
using SchemeResolver = std::function<Resolution(const FatPointScheme&, const RingPtr&)>;

// base_index shifts the variable names: the ambient ring of Z' becomes
// K[x{base}..x{base+d}] (used by the tower recursion)
LadderData build_ladder(const FatPointScheme& Zprime);
LadderData build_ladder(const FatPointScheme& Zprime, const SchemeResolver& resolver,
                        int base_index = 0);

// The amalgamated mapping cones over the multiplication-by-x0 and descent
// maps: F'_0 = sum_i F_{i,0}(-(m-i)) (X) R', and for j >= 1 each level i
// contributes F'_{i,j} and the shifted cone block F'_{i,j-1}(-1). Signs on
// the shifted rows and descents are negative; generator labels carry
// (k, i, j) provenance.
Resolution cone_resolution(const LadderData& ladder);

// P(Z') = (1 + XT) * (sum_{0<i<=m} T^{m-i} P(Z_i)) + T^m
BiPoly theorem_poincare(const std::vector<BiPoly>& ladder_polys, int m);

// Support in {x0 = ... = x_{codim-1} = 0}: the cone construction applied
// codim times from the smallest subspace outward, re-verifying the
// containment flags at every stage and minimizing between stages if needed.
Resolution tower_resolution(const FatPointScheme& Z, int codim);

struct ReportOptions {
  bool run_exactness = false;
  std::optional<int> bound;
  bool run_oracle = false;
  bool run_minimize = false;
};

struct Report {
  std::vector<bool> criterion_flags;
  bool minimal = false;
  BettiTable betti_table;
  BiPoly poincare_constructed;
  BiPoly poincare_formula;
  bool complex_ok = false;
  std::optional<int> exactness_bound;
  std::optional<bool> exactness_ok;
  std::optional<BettiTable> oracle_betti;
  std::optional<BettiTable> betti_minimized;
  std::optional<std::string> note;

  std::string to_json_text() const;
  std::string to_text() const;
};

Report construction_report(const FatPointScheme& Zprime, const ReportOptions& opts = {});

// assemble the report from an already-built ladder
Report report_from(const LadderData& ladder, const ReportOptions& opts = {});

// report for the trivial empty scheme: P = 1
Report empty_scheme_report();

}  // namespace fatres

#endif
