#include "fatres/linalg.hpp"

namespace fatres {

void sparse_axpy(SparseVec& dst, const FieldElement& c, const SparseVec& src) {
  if (c.is_zero()) return;
  for (const auto& [row, val] : src) {
    auto it = dst.find(row);
    if (it == dst.end()) {
      dst.emplace(row, c * val);
    } else {
      it->second += c * val;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

std::vector<FieldElement> Echelon::reduce(SparseVec& v) const {
  std::vector<FieldElement> combo;
  if (track_) combo.assign(ncols_, FieldElement::zero(field_));
  while (!v.empty()) {
    const int row = v.begin()->first;
    auto it = pivots_.find(row);
    if (it == pivots_.end()) break;
    FieldElement c = v.begin()->second / it->second.vec.begin()->second;
    sparse_axpy(v, -c, it->second.vec);
    if (track_)
      for (std::size_t j = 0; j < it->second.combo.size(); ++j)
        combo[j] += c * it->second.combo[j];
  }
  return combo;
}

bool Echelon::insert(SparseVec col) {
  std::vector<FieldElement> combo = reduce(col);
  if (track_) {
    combo.resize(ncols_ + 1, FieldElement::zero(field_));
    for (auto& c : combo) c = -c;
    combo[ncols_] = FieldElement::one(field_);
  }
  ++ncols_;
  if (track_)
    for (auto& [row, piv] : pivots_) piv.combo.resize(ncols_, FieldElement::zero(field_));
  if (col.empty()) return false;
  const int row = col.begin()->first;
  pivots_.emplace(row, Pivot{std::move(col), std::move(combo)});
  return true;
}

bool Echelon::in_span(const SparseVec& v) const {
  SparseVec w = v;
  reduce(w);
  return w.empty();
}

std::optional<std::vector<FieldElement>> Echelon::solve(const SparseVec& v) const {
  if (!track_) throw std::logic_error("solve() needs combo tracking");
  SparseVec w = v;
  std::vector<FieldElement> combo = reduce(w);
  if (!w.empty()) return std::nullopt;
  combo.resize(ncols_, FieldElement::zero(field_));
  return combo;
}

}  // namespace fatres
