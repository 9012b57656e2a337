#include "fatres/gb.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fatres/linalg.hpp"

namespace fatres {

namespace {

FreeModule rank1(const RingPtr& ring) { return FreeModule::make(ring, {0}); }

ModuleVector wrap(const RingPtr& ring, const Poly& f) {
  ModuleVector v;
  v.coords.push_back(f.ring() ? f : Poly::zero(ring));
  return v;
}

ModuleBasis as_module(const IdealBasis& I) {
  ModuleBasis M;
  M.ambient = rank1(I.ring);
  for (const Poly& g : I.gens) M.gens.push_back(wrap(I.ring, g));
  M.is_groebner = I.is_groebner;
  M.order = ModuleOrder::top(I.order);
  return M;
}

IdealBasis as_ideal(const RingPtr& ring, const ModuleBasis& M) {
  IdealBasis I;
  I.ring = ring;
  I.order = ring->order;
  I.is_groebner = M.is_groebner;
  for (const ModuleVector& v : M.gens) I.gens.push_back(v.coords.at(0));
  return I;
}

// ------------------------------------------------------------ division

struct Reduction {
  ModuleVector remainder;
  std::vector<Poly> quotients;
};

Reduction reduce_full(const ModuleVector& v, const std::vector<ModuleVector>& basis,
                      const std::vector<ModuleTerm>& lts, const FreeModule& amb,
                      const ModuleOrder& ord, bool record, int skip = -1) {
  const RingPtr& ring = amb.ring;
  Reduction out;
  out.remainder = ModuleVector::zero(amb);
  if (record) out.quotients.assign(basis.size(), Poly::zero(ring));
  ModuleVector w = v;
  while (!w.is_zero()) {
    ModuleTerm t = mv_lt(w, ord);
    int reducer = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (static_cast<int>(k) == skip || basis[k].is_zero()) continue;
      if (lts[k].mm.comp == t.mm.comp && lts[k].mm.mon.divides(t.mm.mon)) {
        reducer = static_cast<int>(k);
        break;
      }
    }
    if (reducer >= 0) {
      const ModuleTerm& lk = lts[reducer];
      FieldElement c = t.coeff / lk.coeff;
      Monomial mu = t.mm.mon / lk.mm.mon;
      w = w - basis[reducer].times_term(mu, c);
      if (record)
        out.quotients[reducer] = out.quotients[reducer] + Poly::term(ring, mu, c);
    } else {
      Poly term = Poly::term(ring, t.mm.mon, t.coeff);
      out.remainder.coords[t.mm.comp] = out.remainder.coords[t.mm.comp] + term;
      w.coords[t.mm.comp] = w.coords[t.mm.comp] - term;
    }
  }
  return out;
}

// ------------------------------------------------------- Buchberger engine

struct EngineOptions {
  bool track_reps = false;
  bool harvest_syzygies = false;  // collect kernel elements over the originals
  bool use_criteria = true;       // pair discards; disabled while harvesting
};

struct EngineResult {
  std::vector<ModuleVector> basis;
  std::vector<ModuleTerm> lts;
  std::vector<std::vector<Poly>> reps;      // per element, over original gens
  std::vector<std::vector<Poly>> syzygies;  // coefficient vectors over original gens
};

std::vector<Poly> combine_reps(const RingPtr& ring, int norig,
                               const std::vector<std::vector<Poly>>& reps,
                               const std::vector<std::pair<int, Poly>>& parts) {
  std::vector<Poly> out(norig, Poly::zero(ring));
  for (const auto& [k, q] : parts) {
    if (q.is_zero()) continue;
    for (int g = 0; g < norig; ++g)
      if (!reps[k][g].is_zero()) out[g] = out[g] + q * reps[k][g];
  }
  return out;
}

EngineResult buchberger_engine(const FreeModule& amb, const ModuleOrderPtr& ord,
                               const std::vector<ModuleVector>& input,
                               const EngineOptions& opt) {
  const RingPtr& ring = amb.ring;
  const FieldSpec field = ring->field;
  const int norig = static_cast<int>(input.size());
  const bool rank1 = amb.rank() == 1;
  const bool criteria = opt.use_criteria && !opt.harvest_syzygies && rank1;
  const bool track = opt.track_reps || opt.harvest_syzygies;

  EngineResult res;
  auto unit_rep = [&](int g) {
    std::vector<Poly> r(norig, Poly::zero(ring));
    r[g] = Poly::constant(ring, FieldElement::one(field));
    return r;
  };

  for (int g = 0; g < norig; ++g) {
    if (input[g].is_zero()) {
      if (opt.harvest_syzygies) res.syzygies.push_back(unit_rep(g));
      continue;
    }
    res.basis.push_back(input[g]);
    res.lts.push_back(mv_lt(input[g], *ord));
    if (track) res.reps.push_back(unit_rep(g));
  }

  // pair queue keyed by (degree of the S-pair, i, j); normal strategy
  using PairKey = std::tuple<int, int, int>;
  std::set<PairKey> queue;
  std::set<std::pair<int, int>> done;
  auto pair_deg = [&](int i, int j) {
    Monomial l = Monomial::lcm(res.lts[i].mm.mon, res.lts[j].mm.mon);
    return l.degree() + amb.shifts[res.lts[i].mm.comp];
  };
  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i)
      if (res.lts[i].mm.comp == res.lts[j].mm.comp) queue.insert({pair_deg(i, j), i, j});
  };
  for (int j = 0; j < static_cast<int>(res.basis.size()); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    done.insert({i, j});

    const Monomial lcm = Monomial::lcm(res.lts[i].mm.mon, res.lts[j].mm.mon);
    if (criteria) {
      if (Monomial::coprime(res.lts[i].mm.mon, res.lts[j].mm.mon)) continue;
      bool chained = false;
      for (int k = 0; k < static_cast<int>(res.basis.size()) && !chained; ++k) {
        if (k == i || k == j) continue;
        if (res.lts[k].mm.comp != res.lts[i].mm.comp) continue;
        if (!res.lts[k].mm.mon.divides(lcm)) continue;
        auto tr = [&](int a, int b) { return done.count({std::min(a, b), std::max(a, b)}) > 0; };
        if (tr(i, k) && tr(j, k)) chained = true;
      }
      if (chained) continue;
    }

    const Monomial ui = lcm / res.lts[i].mm.mon;
    const Monomial uj = lcm / res.lts[j].mm.mon;
    const FieldElement ci = res.lts[i].coeff.inv();
    const FieldElement cj = res.lts[j].coeff.inv();
    ModuleVector S = res.basis[i].times_term(ui, ci) - res.basis[j].times_term(uj, cj);
    Reduction red = reduce_full(S, res.basis, res.lts, amb, *ord, track);

    if (red.remainder.is_zero()) {
      if (opt.harvest_syzygies) {
        std::vector<std::pair<int, Poly>> parts;
        parts.push_back({i, Poly::term(ring, ui, ci)});
        parts.push_back({j, Poly::term(ring, uj, -cj)});
        for (std::size_t k = 0; k < red.quotients.size(); ++k)
          if (!red.quotients[k].is_zero()) parts.push_back({static_cast<int>(k), -red.quotients[k]});
        std::vector<Poly> sig = combine_reps(ring, norig, res.reps, parts);
        bool zero = true;
        for (const Poly& p : sig)
          if (!p.is_zero()) { zero = false; break; }
        if (!zero) res.syzygies.push_back(std::move(sig));
      }
      continue;
    }

    // new basis element, made monic
    ModuleTerm lt = mv_lt(red.remainder, *ord);
    FieldElement scale = lt.coeff.inv();
    ModuleVector nb = red.remainder.scaled(scale);
    if (track) {
      std::vector<std::pair<int, Poly>> parts;
      parts.push_back({i, Poly::term(ring, ui, ci * scale)});
      parts.push_back({j, Poly::term(ring, uj, -(cj * scale))});
      for (std::size_t k = 0; k < red.quotients.size(); ++k)
        if (!red.quotients[k].is_zero())
          parts.push_back({static_cast<int>(k), -red.quotients[k].scaled(scale)});
      res.reps.push_back(combine_reps(ring, norig, res.reps, parts));
    }
    res.basis.push_back(std::move(nb));
    res.lts.push_back(mv_lt(res.basis.back(), *ord));
    add_pairs_for(static_cast<int>(res.basis.size()) - 1);
  }
  return res;
}

// interreduce a GB in place: minimal, monic, tails fully reduced, sorted
// descending by leading term; reps (if present) are kept consistent
void reduce_basis(std::vector<ModuleVector>& basis, std::vector<std::vector<Poly>>* reps,
                  const FreeModule& amb, const ModuleOrderPtr& ord) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ModuleTerm> lts;
    lts.reserve(basis.size());
    for (const ModuleVector& b : basis)
      lts.push_back(b.is_zero() ? ModuleTerm{} : mv_lt(b, *ord));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      Reduction red = reduce_full(basis[i], basis, lts, amb, *ord, reps != nullptr,
                                  static_cast<int>(i));
      if (red.remainder == basis[i]) continue;
      changed = true;
      if (reps) {
        std::vector<Poly> nr = (*reps)[i];
        for (std::size_t k = 0; k < basis.size(); ++k) {
          if (k == i || red.quotients[k].is_zero()) continue;
          for (std::size_t g = 0; g < nr.size(); ++g)
            if (!(*reps)[k][g].is_zero())
              nr[g] = nr[g] - red.quotients[k] * (*reps)[k][g];
        }
        (*reps)[i] = std::move(nr);
      }
      basis[i] = red.remainder;
      if (basis[i].is_zero()) lts[i] = ModuleTerm{};
      else lts[i] = mv_lt(basis[i], *ord);
    }
  }
  // drop zeros, normalize monic, sort descending by leading term
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero()) keep.push_back(i);
  std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    return ord->compare(mv_lt(basis[a], *ord).mm, mv_lt(basis[b], *ord).mm) > 0;
  });
  std::vector<ModuleVector> nb;
  std::vector<std::vector<Poly>> nreps;
  for (std::size_t i : keep) {
    FieldElement c = mv_lt(basis[i], *ord).coeff.inv();
    nb.push_back(basis[i].scaled(c));
    if (reps) {
      std::vector<Poly> r = (*reps)[i];
      for (Poly& p : r) p = p.scaled(c);
      nreps.push_back(std::move(r));
    }
  }
  basis = std::move(nb);
  if (reps) *reps = std::move(nreps);
}

}  // namespace

// --------------------------------------------------------------- public API

IdealBasis make_ideal(const RingPtr& ring, std::vector<Poly> gens) {
  IdealBasis I;
  I.ring = ring;
  I.order = ring->order;
  for (Poly& g : gens) {
    if (g.is_zero()) continue;
    if (*g.ring() != *ring) throw std::logic_error("generator from a different ring");
    I.gens.push_back(std::move(g));
  }
  return I;
}

IdealBasis unit_ideal(const RingPtr& ring) {
  return make_ideal(ring, {Poly::constant(ring, FieldElement::one(ring->field))});
}

ModuleBasis make_module_basis(FreeModule ambient, std::vector<ModuleVector> gens,
                              ModuleOrderPtr order) {
  ModuleBasis M;
  M.ambient = std::move(ambient);
  M.order = order ? std::move(order) : ModuleOrder::top(M.ambient.ring->order);
  for (ModuleVector& v : gens) {
    if (v.is_zero()) continue;
    if (static_cast<int>(v.coords.size()) != M.ambient.rank())
      throw std::logic_error("module vector rank mismatch");
    M.gens.push_back(std::move(v));
  }
  return M;
}

ModuleBasis groebner(const ModuleBasis& basis) {
  EngineOptions opt;
  opt.track_reps = false;
  EngineResult r = buchberger_engine(basis.ambient, basis.order, basis.gens, opt);
  reduce_basis(r.basis, nullptr, basis.ambient, basis.order);
  ModuleBasis out;
  out.ambient = basis.ambient;
  out.order = basis.order;
  out.gens = std::move(r.basis);
  out.is_groebner = true;
  return out;
}

IdealBasis groebner(const IdealBasis& basis) {
  ModuleBasis M = groebner(as_module(basis));
  IdealBasis out = as_ideal(basis.ring, M);
  return out;
}

IdealBasis ensure_groebner(const IdealBasis& basis) {
  return basis.is_groebner ? basis : groebner(basis);
}

PolyDivision normal_form(const Poly& f, const IdealBasis& gb, bool record) {
  if (!gb.is_groebner) throw std::logic_error("normal_form needs a Groebner basis");
  ModuleBasis M = as_module(gb);
  std::vector<ModuleTerm> lts;
  for (const ModuleVector& g : M.gens) lts.push_back(mv_lt(g, *M.order));
  Reduction red = reduce_full(wrap(gb.ring, f), M.gens, lts, M.ambient, *M.order, record);
  PolyDivision out;
  out.remainder = red.remainder.coords[0];
  out.quotients = std::move(red.quotients);
  return out;
}

MvDivision normal_form(const ModuleVector& v, const ModuleBasis& gb, bool record) {
  if (!gb.is_groebner) throw std::logic_error("normal_form needs a Groebner basis");
  std::vector<ModuleTerm> lts;
  for (const ModuleVector& g : gb.gens) lts.push_back(mv_lt(g, *gb.order));
  Reduction red = reduce_full(v, gb.gens, lts, gb.ambient, *gb.order, record);
  return {std::move(red.remainder), std::move(red.quotients)};
}

bool ideal_membership(const Poly& f, const IdealBasis& I) {
  if (f.is_zero()) return true;
  IdealBasis gb = ensure_groebner(I);
  return normal_form(f, gb).remainder.is_zero();
}

IdealBasis ideal_power(const IdealBasis& I, int n) {
  if (n < 0) throw std::logic_error("negative ideal power");
  if (n == 0) return unit_ideal(I.ring);
  std::vector<Poly> out;
  std::vector<int> idx(n, 0);
  const int g = static_cast<int>(I.gens.size());
  if (g == 0) return make_ideal(I.ring, {});
  // multisets of size n over the generators
  while (true) {
    Poly p = I.gens[idx[0]];
    for (int k = 1; k < n; ++k) p = p * I.gens[idx[k]];
    out.push_back(p);
    int k = n - 1;
    while (k >= 0 && idx[k] == g - 1) --k;
    if (k < 0) break;
    int v = idx[k] + 1;
    for (int l = k; l < n; ++l) idx[l] = v;
  }
  return make_ideal(I.ring, std::move(out));
}

namespace {

Poly prepend_var(const Poly& f, const RingPtr& big) {
  std::vector<Term> ts;
  for (const Term& t : f.terms()) {
    Monomial m = Monomial::one(big->nvars);
    std::copy(t.mon.exps.begin(), t.mon.exps.end(), m.exps.begin() + 1);
    ts.push_back({m, t.coeff});
  }
  return Poly::from_terms(big, std::move(ts));
}

Poly drop_first_var(const Poly& f, const RingPtr& small) {
  std::vector<Term> ts;
  for (const Term& t : f.terms()) {
    if (t.mon.exps[0] != 0) throw std::logic_error("polynomial not free of the eliminated variable");
    Monomial m = Monomial::one(small->nvars);
    std::copy(t.mon.exps.begin() + 1, t.mon.exps.end(), m.exps.begin());
    ts.push_back({m, t.coeff});
  }
  return Poly::from_terms(small, std::move(ts));
}

}  // namespace

IdealBasis ideal_intersection(const IdealBasis& I, const IdealBasis& J) {
  if (!I.ring || !J.ring || *I.ring != *J.ring) throw std::logic_error("ring mismatch");
  const RingPtr& R = I.ring;
  if (I.gens.empty() || J.gens.empty()) return make_ideal(R, {});

  std::string tname = "t";
  while (R->var_index(tname) >= 0) tname += "_";
  std::vector<std::string> names;
  names.push_back(tname);
  names.insert(names.end(), R->var_names.begin(), R->var_names.end());
  RingPtr E = make_ring(std::move(names), R->field, false, MonomialOrder::block_elim(1));

  const Poly t = Poly::variable(E, 0);
  const Poly one = Poly::constant(E, FieldElement::one(E->field));
  std::vector<Poly> gens;
  for (const Poly& f : I.gens) gens.push_back(t * prepend_var(f, E));
  for (const Poly& g : J.gens) gens.push_back((one - t) * prepend_var(g, E));

  IdealBasis gb = groebner(make_ideal(E, std::move(gens)));
  std::vector<Poly> kept;
  for (const Poly& g : gb.gens)
    if (g.lm().exps[0] == 0) kept.push_back(drop_first_var(g, R));
  return groebner(make_ideal(R, std::move(kept)));
}

Poly poly_exact_divide(const Poly& f, const Poly& divisor) {
  if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
  IdealBasis D = make_ideal(f.ring(), {divisor});
  D.is_groebner = true;  // a single nonzero polynomial is its own GB
  PolyDivision d = normal_form(f, D, true);
  if (!d.remainder.is_zero()) throw std::logic_error("polynomial division not exact");
  return d.quotients[0];
}

IdealBasis colon_ideal(const IdealBasis& I, const Poly& f) {
  if (f.is_zero()) throw std::logic_error("colon by zero");
  IdealBasis meet = ideal_intersection(I, make_ideal(I.ring, {f}));
  std::vector<Poly> gens;
  for (const Poly& h : meet.gens) gens.push_back(poly_exact_divide(h, f));
  return groebner(make_ideal(I.ring, std::move(gens)));
}

long long hilbert_function(const IdealBasis& I, int t) {
  if (t < 0) throw std::logic_error("negative degree");
  IdealBasis gb = ensure_groebner(I);
  std::vector<Monomial> mons = monomials_of_degree(gb.ring, t);
  long long count = 0;
  for (const Monomial& m : mons) {
    bool standard = true;
    for (const Poly& g : gb.gens)
      if (g.lm().divides(m)) { standard = false; break; }
    if (standard) ++count;
  }
  return count;
}

long long ideal_dim_at(const IdealBasis& I, int t) {
  const int n = I.ring->nvars;
  return binom(t + n - 1, n - 1) - hilbert_function(I, t);
}

// ----------------------------------------------------------------- syzygies

namespace {

ModuleBasis syzygies_core(const ModuleBasis& M) {
  for (const ModuleVector& v : M.gens) {
    if (v.is_zero()) throw std::logic_error("zero generator in syzygy computation");
    if (!mv_is_homogeneous(M.ambient, v))
      throw std::logic_error("syzygies need homogeneous generators");
  }
  EngineOptions opt;
  opt.harvest_syzygies = true;
  opt.use_criteria = false;
  EngineResult r = buchberger_engine(M.ambient, M.order, M.gens, opt);

  FreeModule target;
  target.ring = M.ambient.ring;
  std::vector<ModuleMonomial> labels;
  for (const ModuleVector& g : M.gens) {
    target.shifts.push_back(mv_degree(M.ambient, g));
    labels.push_back(mv_lt(g, *M.order).mm);
  }
  ModuleOrderPtr ord = ModuleOrder::schreyer(M.order, std::move(labels));

  std::vector<ModuleVector> gens;
  for (auto& sig : r.syzygies) gens.push_back(ModuleVector{std::move(sig)});

  ModuleBasis S = make_module_basis(target, std::move(gens), ord);
  if (M.is_groebner) {
    // Schreyer: the harvested relations are already a GB under ord
    reduce_basis(S.gens, nullptr, S.ambient, S.order);
    S.is_groebner = true;
    return S;
  }
  return groebner(S);
}

}  // namespace

ModuleBasis syzygies(const ModuleBasis& M) { return syzygies_core(M); }

ModuleBasis syzygies(const IdealBasis& I) {
  for (const Poly& g : I.gens)
    if (!g.is_homogeneous()) throw std::logic_error("syzygies need homogeneous generators");
  return syzygies_core(as_module(I));
}

// ------------------------------------------------------------ reps / lifts

IdealGBWithReps groebner_with_reps(const IdealBasis& I) {
  ModuleGBWithReps m = groebner_with_reps(as_module(I));
  IdealGBWithReps out;
  out.gb = as_ideal(I.ring, m.gb);
  out.reps = std::move(m.reps);
  return out;
}

ModuleGBWithReps groebner_with_reps(const ModuleBasis& M) {
  EngineOptions opt;
  opt.track_reps = true;
  EngineResult r = buchberger_engine(M.ambient, M.order, M.gens, opt);
  reduce_basis(r.basis, &r.reps, M.ambient, M.order);
  ModuleGBWithReps out;
  out.gb.ambient = M.ambient;
  out.gb.order = M.order;
  out.gb.gens = std::move(r.basis);
  out.gb.is_groebner = true;
  out.reps = std::move(r.reps);
  return out;
}

std::optional<std::vector<Poly>> express_in_terms(const Poly& f, const IdealGBWithReps& g) {
  const RingPtr& ring = g.gb.ring;
  const int norig = g.reps.empty() ? 0 : static_cast<int>(g.reps[0].size());
  if (f.is_zero()) return std::vector<Poly>(norig, Poly::zero(ring));
  PolyDivision d = normal_form(f, g.gb, true);
  if (!d.remainder.is_zero()) return std::nullopt;
  std::vector<Poly> out(norig, Poly::zero(ring));
  for (std::size_t k = 0; k < d.quotients.size(); ++k) {
    if (d.quotients[k].is_zero()) continue;
    for (int o = 0; o < norig; ++o)
      if (!g.reps[k][o].is_zero()) out[o] = out[o] + d.quotients[k] * g.reps[k][o];
  }
  return out;
}

std::optional<std::vector<Poly>> express_in_terms(const ModuleVector& v,
                                                  const ModuleGBWithReps& g) {
  const RingPtr& ring = g.gb.ambient.ring;
  const int norig = g.reps.empty() ? 0 : static_cast<int>(g.reps[0].size());
  if (v.is_zero()) return std::vector<Poly>(norig, Poly::zero(ring));
  MvDivision d = normal_form(v, g.gb, true);
  if (!d.remainder.is_zero()) return std::nullopt;
  std::vector<Poly> out(norig, Poly::zero(ring));
  for (std::size_t k = 0; k < d.quotients.size(); ++k) {
    if (d.quotients[k].is_zero()) continue;
    for (int o = 0; o < norig; ++o)
      if (!g.reps[k][o].is_zero()) out[o] = out[o] + d.quotients[k] * g.reps[k][o];
  }
  return out;
}

std::vector<Poly> minimal_generators(const IdealBasis& I) {
  IdealBasis gb = ensure_groebner(I);
  if (gb.gens.empty()) return {};
  std::map<int, std::vector<const Poly*>> by_degree;
  for (const Poly& g : gb.gens) by_degree[g.degree()].push_back(&g);

  std::vector<Poly> out;
  for (const auto& [t, gens_t] : by_degree) {
    // span of degree-t multiples of lower-degree GB elements
    std::vector<Monomial> mons = monomials_of_degree(gb.ring, t);
    std::map<std::vector<int>, int> row;
    for (std::size_t k = 0; k < mons.size(); ++k) row[mons[k].exps] = static_cast<int>(k);
    Echelon ech(gb.ring->field);
    for (const Poly& g : gb.gens) {
      if (g.degree() >= t) continue;
      for (const Monomial& mu : monomials_of_degree(gb.ring, t - g.degree())) {
        Poly p = g.times_term(mu, FieldElement::one(gb.ring->field));
        SparseVec col;
        for (const Term& tm : p.terms()) col[row.at(tm.mon.exps)] = tm.coeff;
        ech.insert(std::move(col));
      }
    }
    for (const Poly* g : gens_t) {
      SparseVec col;
      for (const Term& tm : g->terms()) col[row.at(tm.mon.exps)] = tm.coeff;
      if (ech.insert(std::move(col))) out.push_back(*g);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return gb.ring->order.compare(a.lm(), b.lm()) > 0;
  });
  return out;
}

}  // namespace fatres
