#ifndef FATRES_LINALG_HPP
#define FATRES_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "fatres/field.hpp"

namespace fatres {

using SparseVec = std::map<int, FieldElement>;  // row index -> nonzero entry

/// Incremental exact column echelon form. Columns are reduced against the
/// pivots found so far; each pivot is keyed by its topmost nonzero row.
class Echelon {
 public:
  explicit Echelon(FieldSpec field, bool track_combos = false)
      : field_(field), track_(track_combos) {}

  // Insert a column; returns true if it enlarged the span.
  bool insert(SparseVec col);

  int rank() const { return static_cast<int>(pivots_.size()); }

  bool in_span(const SparseVec& v) const;

  // Coefficients x with sum x_j col_j = v, over the inserted columns
  // (requires track_combos). nullopt if v is outside the span.
  std::optional<std::vector<FieldElement>> solve(const SparseVec& v) const;

 private:
  struct Pivot {
    SparseVec vec;
    std::vector<FieldElement> combo;  // expression in original columns
  };

  // reduces v in place; returns combo accumulated over pivots when tracking
  std::vector<FieldElement> reduce(SparseVec& v) const;

  FieldSpec field_;
  bool track_ = false;
  int ncols_ = 0;
  std::map<int, Pivot> pivots_;  // keyed by pivot row
};

void sparse_axpy(SparseVec& dst, const FieldElement& c, const SparseVec& src);

}  // namespace fatres

#endif
