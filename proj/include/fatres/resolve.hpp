#ifndef FATRES_RESOLVE_HPP
#define FATRES_RESOLVE_HPP

#include <map>
#include <string>
#include <vector>

#include "fatres/gb.hpp"
#include "fatres/linalg.hpp"
#include "fatres/module.hpp"

namespace fatres {

/// Graded degree-0 map between free modules as a polynomial matrix;
/// nonzero entries satisfy deg mat[r][c] = source.shifts[c] - target.shifts[r].
struct ChainMap {
  FreeModule source;
  FreeModule target;
  std::vector<std::vector<Poly>> mat;  // target.rank() rows, source.rank() cols

  static ChainMap zero(FreeModule src, FreeModule tgt);
  void validate_graded() const;

  ModuleVector apply(const ModuleVector& v) const;
  ModuleVector column(int c) const;
  ChainMap compose(const ChainMap& inner) const;  // this(inner(x))
  bool is_zero_map() const;
};

/// Chain of free modules with differentials ending in an ideal:
/// F_len -> ... -> F_1 -> F_0 -> I -> 0. differentials[j] maps F_{j+1} -> F_j;
/// the augmentation row sends the generators of F_0 to the ideal generators.
struct Resolution {
  RingPtr ring;
  std::vector<FreeModule> modules;
  std::vector<ChainMap> differentials;
  std::vector<Poly> augmentation;
  IdealBasis resolved_ideal;  // kept as a reduced GB

  int length() const { return static_cast<int>(modules.size()) - 1; }
  const ChainMap& diff(int j) const { return differentials.at(j - 1); }  // F_j -> F_{j-1}
  ChainMap augmentation_map() const;  // into the rank-1 free module R
  int max_shift() const;
};

/// Integer polynomial in T (degree) and X (homological index).
struct BiPoly {
  std::map<std::pair<int, int>, long long> coeffs;  // (T-exp, X-exp) -> coeff

  static BiPoly zero() { return {}; }
  static BiPoly one() { return term(0, 0, 1); }
  static BiPoly term(int t_exp, int x_exp, long long c);

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const { return coeffs == o.coeffs; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  // "3*T^2 + 2*X*T^3": terms sorted by T-degree then X-degree
  std::string to_string() const;
  static BiPoly parse(const std::string& s);
};

/// Betti numbers a_{ij}: generators of F_j with shift i.
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;  // (shift i, hom. index j) -> a_ij

  BiPoly to_poincare() const;
  std::string to_text() const;
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }
};

// Iterated Schreyer syzygies down to a vanishing kernel; not minimized.
Resolution schreyer_resolution(const IdealBasis& I);

// The independent direct path: Schreyer resolution passed through minimize().
Resolution direct_resolution(const IdealBasis& I);

// Split off rank-1 trivial complexes at nonzero constant entries until none
// remain. Scans homological degrees top-down, columns in order.
Resolution minimize(const Resolution& res);

// no differential matrix has a nonzero constant entry
bool is_minimal(const Resolution& res);

// all consecutive composites vanish and the augmentation kills im d_1
bool verify_complex(const Resolution& res);

// exactness of 0 -> F_len -> ... -> F_0 -> I -> 0 in all degrees <= bound,
// via per-degree ranks of the coefficient matrices; also checks that the
// augmentation image has the Hilbert function of the resolved ideal.
// bound < 0 selects the default (max shift + 2).
bool verify_exactness(const Resolution& res, int bound = -1);
int default_exactness_bound(const Resolution& res);

BettiTable betti(const Resolution& res);
BiPoly poincare(const Resolution& res);

long long module_dim_at(const FreeModule& mod, int t);
int graded_rank_at(const ChainMap& map, int t);  // rank of the degree-t piece

/// Coordinates of the degree-t piece of a free module: rows are indexed by
/// (generator, monomial of the complementary degree).
struct GradedPieceIndex {
  std::vector<int> offset;
  std::vector<std::map<std::vector<int>, int>> index;  // per component
  int dim = 0;

  GradedPieceIndex(const FreeModule& mod, int t);
  SparseVec to_vec(const ModuleVector& v) const;
};

}  // namespace fatres

#endif
