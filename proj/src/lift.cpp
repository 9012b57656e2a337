#include "fatres/lift.hpp"

#include <map>

#include "fatres/linalg.hpp"

namespace fatres {

namespace {

void check_commutation(const Resolution& resM, const Resolution& resN,
                       const std::vector<ChainMap>& maps) {
  // aug_N . f_0 = aug_M
  ChainMap top = resN.augmentation_map().compose(maps[0]);
  for (int c = 0; c < resM.modules[0].rank(); ++c)
    if (top.mat[0][c] != resM.augmentation[c])
      throw std::logic_error("comparison maps do not cover the augmentations");
  for (int j = 0; j + 1 < static_cast<int>(maps.size()); ++j) {
    if (j + 1 > resM.length()) break;
    ChainMap lhs = maps[j].compose(resM.diff(j + 1));
    if (j + 1 <= resN.length()) {
      ChainMap rhs = resN.diff(j + 1).compose(maps[j + 1]);
      for (int r = 0; r < lhs.target.rank(); ++r)
        for (int c = 0; c < lhs.source.rank(); ++c)
          if (lhs.mat[r][c] != rhs.mat[r][c])
            throw std::logic_error("comparison map square does not commute");
    } else if (!lhs.is_zero_map()) {
      throw std::logic_error("comparison map square does not commute");
    }
  }
}

FreeModule zero_module(const RingPtr& ring) { return FreeModule::make(ring, {}); }

void check_membership(const Resolution& resM, const Resolution& resN) {
  for (const Poly& g : resM.augmentation)
    if (!ideal_membership(g, resN.resolved_ideal))
      throw input_error("membership failure: source ideal is not contained in the target");
}

}  // namespace

ComparisonMaps lift_chain_map(const Resolution& resM, const Resolution& resN) {
  const RingPtr& ring = resM.ring;
  check_membership(resM, resN);

  ComparisonMaps out;
  out.constrained = false;

  // f_0 through a rep-tracked GB of the target generators
  IdealGBWithReps targetG = groebner_with_reps(make_ideal(ring, resN.augmentation));
  ChainMap f0 = ChainMap::zero(resM.modules[0], resN.modules[0]);
  for (int c = 0; c < resM.modules[0].rank(); ++c) {
    auto coords = express_in_terms(resM.augmentation[c], targetG);
    if (!coords) throw input_error("membership failure: source ideal is not contained in the target");
    for (int r = 0; r < resN.modules[0].rank(); ++r) f0.mat[r][c] = (*coords)[r];
  }
  f0.validate_graded();
  out.maps.push_back(std::move(f0));

  for (int j = 0; j < resM.length(); ++j) {
    ChainMap psi = out.maps[j].compose(resM.diff(j + 1));
    if (j + 1 > resN.length()) {
      if (!psi.is_zero_map())
        throw std::logic_error("lifting failure: cycle misses the zero module");
      out.maps.push_back(ChainMap::zero(resM.modules[j + 1], zero_module(ring)));
      continue;
    }
    const ChainMap& dN = resN.diff(j + 1);
    std::vector<ModuleVector> cols;
    for (int c = 0; c < dN.source.rank(); ++c) cols.push_back(dN.column(c));
    ModuleGBWithReps img = groebner_with_reps(
        make_module_basis(dN.target, std::move(cols), ModuleOrder::top(ring->order)));
    ChainMap f = ChainMap::zero(resM.modules[j + 1], resN.modules[j + 1]);
    for (int c = 0; c < resM.modules[j + 1].rank(); ++c) {
      auto coords = express_in_terms(psi.column(c), img);
      if (!coords) throw std::logic_error("lifting failure: cycle is not a boundary");
      for (int r = 0; r < resN.modules[j + 1].rank(); ++r) f.mat[r][c] = (*coords)[r];
    }
    f.validate_graded();
    out.maps.push_back(std::move(f));
  }
  check_commutation(resM, resN, out.maps);
  return out;
}

// ------------------------------------------------------- constrained lift

// Each column is solved in its graded piece against the products
// (monomial of degree >= 1) * (previous target map column); a solution in
// that span is exactly a preimage with no constant coordinates.
ComparisonMaps lift_chain_map_R1(const Resolution& resM, const Resolution& resN) {
  const RingPtr& ring = resM.ring;
  if (!check_R1_containment(resM.resolved_ideal, resN.resolved_ideal))
    throw input_error("containment precondition fails: I is not inside R_1 * J");

  ComparisonMaps out;
  out.constrained = true;
  // level -1: augmentation row of resN as a map into the rank-1 module
  ChainMap target_prev = resN.augmentation_map();
  ChainMap source_prev = resM.augmentation_map();

  for (int j = 0; j <= resM.length(); ++j) {
    const FreeModule& srcF = resM.modules[j];
    // psi columns: what f_j must hit in the target of level j-1
    ChainMap psi = j == 0 ? source_prev : out.maps[j - 1].compose(resM.diff(j));
    if (j > resN.length()) {
      if (!psi.is_zero_map())
        throw std::logic_error("lifting failure: cycle misses the zero module");
      out.maps.push_back(ChainMap::zero(srcF, zero_module(ring)));
      continue;
    }
    const FreeModule& tgtF = resN.modules[j];
    const ChainMap dN = j == 0 ? target_prev : resN.diff(j);

    ChainMap f = ChainMap::zero(srcF, tgtF);
    // cache one solver per graded degree
    std::map<int, std::pair<Echelon, std::vector<std::pair<int, Monomial>>>> solvers;
    for (int c = 0; c < srcF.rank(); ++c) {
      const int t = srcF.shifts[c];
      auto it = solvers.find(t);
      if (it == solvers.end()) {
        Echelon ech(ring->field, /*track_combos=*/true);
        std::vector<std::pair<int, Monomial>> keys;
        GradedPieceIndex piece(dN.target, t);
        for (int r = 0; r < tgtF.rank(); ++r) {
          const int d = t - tgtF.shifts[r];
          if (d < 1) continue;  // only slots of entry degree >= 1
          for (const Monomial& mu : monomials_of_degree(ring, d)) {
            ModuleVector img = dN.column(r).times_term(mu, FieldElement::one(ring->field));
            ech.insert(piece.to_vec(img));
            keys.push_back({r, mu});
          }
        }
        it = solvers.emplace(t, std::make_pair(std::move(ech), std::move(keys))).first;
      }
      GradedPieceIndex piece(dN.target, t);
      auto sol = it->second.first.solve(piece.to_vec(psi.column(c)));
      if (!sol)
        throw constrained_lift_error("no linear-entry lift at homological level " +
                                     std::to_string(j));
      const auto& keys = it->second.second;
      for (std::size_t k = 0; k < keys.size(); ++k) {
        if ((*sol)[k].is_zero()) continue;
        auto [r, mu] = keys[k];
        f.mat[r][c] = f.mat[r][c] + Poly::term(ring, mu, (*sol)[k]);
      }
    }
    f.validate_graded();
    for (const auto& row : f.mat)
      for (const Poly& p : row)
        if (!p.is_zero() && p.degree() == 0)
          throw std::logic_error("constrained lift produced a constant entry");
    out.maps.push_back(std::move(f));
  }
  check_commutation(resM, resN, out.maps);
  return out;
}

// ----------------------------------------------------------- containment

bool check_R1_containment(const IdealBasis& I, const IdealBasis& J) {
  if (!I.ring || !J.ring || *I.ring != *J.ring) throw std::logic_error("ring mismatch");
  const RingPtr& ring = I.ring;
  IdealBasis gbJ = ensure_groebner(J);
  std::vector<Poly> mins = minimal_generators(I);

  std::map<int, Echelon> spans;  // degree -> span of (R_{>=1} * J)_degree
  std::map<int, std::map<std::vector<int>, int>> rows;
  for (const Poly& g : mins) {
    const int t = g.degree();
    auto it = spans.find(t);
    if (it == spans.end()) {
      it = spans.emplace(t, Echelon(ring->field)).first;
      auto& row = rows[t];
      auto mons = monomials_of_degree(ring, t);
      for (std::size_t k = 0; k < mons.size(); ++k) row[mons[k].exps] = static_cast<int>(k);
      for (const Poly& h : gbJ.gens) {
        const int d = t - h.degree();
        if (d < 1) continue;
        for (const Monomial& mu : monomials_of_degree(ring, d)) {
          SparseVec col;
          for (const Term& tm : h.terms()) col[row.at((tm.mon * mu).exps)] = tm.coeff;
          it->second.insert(std::move(col));
        }
      }
    }
    SparseVec v;
    const auto& row = rows[t];
    for (const Term& tm : g.terms()) v[row.at(tm.mon.exps)] = tm.coeff;
    if (!it->second.in_span(v)) return false;
  }
  return true;
}

EulerWitness euler_witness(const Poly& f, const IdealBasis& J) {
  if (f.is_zero() || !f.is_homogeneous())
    throw std::logic_error("euler witness needs a nonzero homogeneous form");
  const RingPtr& ring = f.ring();
  const int delta = f.degree();
  EulerWitness out;
  const std::uint64_t p = ring->field.p;
  if (delta == 0 || (p > 0 && delta % static_cast<int>(p) == 0)) {
    out.status = EulerWitness::Status::CharDividesDegree;
    return out;
  }
  IdealBasis gbJ = ensure_groebner(J);
  const FieldElement dinv = FieldElement::from_int(ring->field, delta).inv();
  Poly recombined = Poly::zero(ring);
  for (int i = 0; i < ring->nvars; ++i) {
    Poly u = f.derivative(i).scaled(dinv);
    out.factors.push_back(u);
    PolyDivision d = normal_form(u, gbJ, true);
    if (!d.remainder.is_zero()) {
      out.status = EulerWitness::Status::PartialNotInIdeal;
      out.failed_var = i;
      return out;
    }
    out.certificates.push_back(std::move(d.quotients));
    recombined = recombined + Poly::variable(ring, i) * u;
  }
  if (recombined != f) throw std::logic_error("Euler identity failed");  // char guard above
  out.status = EulerWitness::Status::Success;
  return out;
}

bool degree_shift_check(const IdealBasis& I, const IdealBasis& J) {
  std::vector<Poly> mi = minimal_generators(I);
  std::vector<Poly> mj = minimal_generators(J);
  if (mi.empty() || mj.empty()) return false;
  int min_i = mi.front().degree();
  for (const Poly& g : mi) min_i = std::min(min_i, g.degree());
  int max_j = mj.front().degree();
  for (const Poly& g : mj) max_j = std::max(max_j, g.degree());
  return min_i > max_j;
}

ContainmentVerdict classify_containment(const IdealBasis& I, const IdealBasis& J) {
  IdealBasis gbJ = ensure_groebner(J);
  std::vector<Poly> mins = minimal_generators(I);

  bool euler_usable = true, euler_ok = true;
  for (const Poly& g : mins) {
    EulerWitness w = euler_witness(g, gbJ);
    if (w.status == EulerWitness::Status::CharDividesDegree) { euler_usable = false; break; }
    if (w.status != EulerWitness::Status::Success) { euler_ok = false; break; }
  }
  if (euler_usable && euler_ok && !mins.empty())
    return {true, ContainmentWitness::Euler};

  bool monomial = true;
  for (const Poly& g : mins)
    if (g.nterms() != 1) { monomial = false; break; }
  for (const Poly& g : gbJ.gens)
    if (g.nterms() != 1) { monomial = false; break; }
  if (monomial && !mins.empty()) {
    bool all = true;
    for (const Poly& g : mins) {
      bool found = false;
      for (int k = 0; k < I.ring->nvars && !found; ++k) {
        if (g.lm().exps[k] == 0) continue;
        Monomial q = g.lm() / Monomial::var(I.ring->nvars, k);
        for (const Poly& h : gbJ.gens)
          if (h.lm().divides(q)) { found = true; break; }
      }
      if (!found) { all = false; break; }
    }
    return {all, ContainmentWitness::MonomialDirect};
  }

  if (degree_shift_check(I, gbJ)) return {true, ContainmentWitness::DegreeShift};
  return {check_R1_containment(I, gbJ), ContainmentWitness::LinearAlgebra};
}

std::string witness_name(ContainmentWitness w) {
  switch (w) {
    case ContainmentWitness::Euler: return "euler";
    case ContainmentWitness::MonomialDirect: return "monomial-direct";
    case ContainmentWitness::DegreeShift: return "degree-shift";
    case ContainmentWitness::LinearAlgebra: return "linear-algebra";
  }
  return "?";
}

}  // namespace fatres
