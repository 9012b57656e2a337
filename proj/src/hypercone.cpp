#include "fatres/hypercone.hpp"

#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

namespace fatres {

bool LadderData::all_flags() const {
  for (bool f : criterion_flags)
    if (!f) return false;
  return true;
}

bool LadderData::all_constrained() const {
  for (bool f : constrained_used)
    if (!f) return false;
  return true;
}

namespace {

void stamp_labels(Resolution& res, int level) {
  for (std::size_t j = 0; j < res.modules.size(); ++j) {
    FreeModule& mod = res.modules[j];
    mod.labels.resize(mod.rank());
    for (int k = 0; k < mod.rank(); ++k)
      mod.labels[k] = GenLabel{k, level, static_cast<int>(j)};
  }
}

}  // namespace

LadderData build_ladder(const FatPointScheme& Zprime) {
  return build_ladder(Zprime, SchemeResolver{});
}

LadderData build_ladder(const FatPointScheme& Zprime, const SchemeResolver& resolver,
                        int base_index) {
  Zprime.validate();
  if (Zprime.ambient_dim < 2)
    throw input_error("the construction needs ambient dimension at least 2");
  int off = first_point_off_hyperplane(Zprime);
  if (off >= 0)
    throw input_error("point " + std::to_string(off) + " does not lie in the hyperplane x" +
                      std::to_string(base_index) + " = 0");
  if (Zprime.empty()) throw input_error("zero scheme: no point has positive multiplicity");

  LadderData L;
  L.scheme_zprime = Zprime;
  L.scheme_z = project_to_hyperplane(Zprime);
  L.max_mult = Zprime.max_mult();
  L.Rprime = scheme_ring(Zprime, base_index);
  L.R = scheme_ring(L.scheme_z, base_index + 1);

  L.ideals.push_back(groebner(unit_ideal(L.R)));
  L.resolutions.push_back(direct_resolution(L.ideals[0]));
  stamp_labels(L.resolutions[0], 0);

  for (int i = 1; i <= L.max_mult; ++i)
    L.ideals.push_back(fat_point_ideal(truncation(L.scheme_z, i), L.R));

  // ladder stages are independent; resolve them concurrently on the
  // default path (a custom resolver runs sequentially)
  std::vector<std::future<Resolution>> jobs;
  for (int i = 1; i <= L.max_mult; ++i) {
    if (resolver) {
      L.resolutions.push_back(resolver(truncation(L.scheme_z, i), L.R));
    } else {
      const IdealBasis& Ii = L.ideals[i];
      jobs.push_back(std::async(std::launch::async, [&Ii] { return direct_resolution(Ii); }));
    }
  }
  for (auto& job : jobs) L.resolutions.push_back(job.get());

  for (int i = 1; i <= L.max_mult; ++i) {
    Resolution& res = L.resolutions[i];
    if (!is_minimal(res)) throw std::logic_error("ladder resolution is not minimal");
    if (groebner(make_ideal(L.R, res.augmentation)).gens != L.ideals[i].gens)
      throw std::logic_error("ladder resolution resolves the wrong ideal");
    stamp_labels(res, i);
  }

  for (int i = 1; i <= L.max_mult; ++i) {
    bool flag = check_R1_containment(L.ideals[i], L.ideals[i - 1]);
    L.criterion_flags.push_back(flag);
    if (flag) {
      try {
        L.comparisons.push_back(lift_chain_map_R1(L.resolutions[i], L.resolutions[i - 1]));
        L.constrained_used.push_back(true);
        continue;
      } catch (const constrained_lift_error&) {
        // fall through: the resolution is still valid, only minimality is lost
      }
    }
    L.comparisons.push_back(lift_chain_map(L.resolutions[i], L.resolutions[i - 1]));
    L.constrained_used.push_back(false);
  }
  return L;
}

// ---------------------------------------------------------------- cone

namespace {

struct BlockKey {
  int i = 0;
  int j = 0;  // the resolution-side homological index of the block
  bool cone = false;
  bool operator<(const BlockKey& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return cone < o.cone;
  }
};

struct ConeLayout {
  FreeModule module;
  std::map<BlockKey, int> offset;
};

int res_len(const Resolution& r) { return r.length(); }

ConeLayout layout_level(const LadderData& L, int j) {
  ConeLayout out;
  out.module.ring = L.Rprime;
  const int m = L.max_mult;
  auto add_block = [&](int i, int rj, bool cone) {
    const Resolution& res = L.resolutions[i];
    if (rj > res_len(res)) return;
    const FreeModule& src = res.modules[rj];
    if (src.rank() == 0) return;
    out.offset[BlockKey{i, rj, cone}] = out.module.rank();
    for (int k = 0; k < src.rank(); ++k) {
      out.module.shifts.push_back(src.shifts[k] + (m - i) + (cone ? 1 : 0));
      out.module.labels.push_back(GenLabel{k, i, rj});
    }
  };
  if (j == 0) {
    for (int i = m; i >= 0; --i) add_block(i, 0, false);
  } else {
    for (int i = m; i >= 1; --i) {
      add_block(i, j, false);
      add_block(i, j - 1, true);
    }
  }
  return out;
}

}  // namespace

Resolution cone_resolution(const LadderData& L) {
  const int m = L.max_mult;
  const RingPtr& Rp = L.Rprime;
  const Poly x0 = Poly::variable(Rp, 0);

  auto embp = [&](const Poly& f) { return embed_into(f, Rp); };
  Poly x0pow = Poly::constant(Rp, FieldElement::one(Rp->field));
  std::vector<Poly> x0powers{x0pow};
  for (int k = 1; k <= m; ++k) x0powers.push_back(x0powers.back() * x0);

  int len = 0;
  for (int i = 1; i <= m; ++i) len = std::max(len, res_len(L.resolutions[i]) + 1);

  std::vector<ConeLayout> layout;
  for (int j = 0; j <= len; ++j) layout.push_back(layout_level(L, j));

  Resolution res;
  res.ring = Rp;
  for (int j = 0; j <= len; ++j) res.modules.push_back(layout[j].module);

  // augmentation: s_{k,i,0} |-> x0^{m-i} * (generator k of I(Z_i))
  for (int i = m; i >= 0; --i) {
    const Resolution& ri = L.resolutions[i];
    for (int k = 0; k < ri.modules[0].rank(); ++k)
      res.augmentation.push_back(embp(ri.augmentation[k]) * x0powers[m - i]);
  }

  for (int j = 1; j <= len; ++j) {
    const ConeLayout& src = layout[j];
    const ConeLayout& tgt = layout[j - 1];
    ChainMap d = ChainMap::zero(src.module, tgt.module);
    for (const auto& [key, off] : src.offset) {
      const Resolution& ri = L.resolutions[key.i];
      const int nk = ri.modules[key.j].rank();
      if (!key.cone) {
        // main block: the differential of the level-i resolution
        const ChainMap& phi = ri.diff(key.j);
        const int toff = tgt.offset.at(BlockKey{key.i, key.j - 1, false});
        for (int k = 0; k < nk; ++k)
          for (int r = 0; r < phi.target.rank(); ++r)
            if (!phi.mat[r][k].is_zero()) d.mat[toff + r][off + k] = embp(phi.mat[r][k]);
      } else {
        // cone block for s_{k,i,j-1}: x0 * (same generator one row up),
        // minus the descent map, minus the shifted differential
        const int main_off = tgt.offset.at(BlockKey{key.i, key.j, false});
        for (int k = 0; k < nk; ++k) d.mat[main_off + k][off + k] = x0;

        const ChainMap& f = L.comparisons[key.i - 1].maps[key.j];
        auto it = tgt.offset.find(BlockKey{key.i - 1, key.j, false});
        if (it != tgt.offset.end()) {
          for (int k = 0; k < nk; ++k)
            for (int r = 0; r < f.target.rank(); ++r)
              if (!f.mat[r][k].is_zero()) d.mat[it->second + r][off + k] = -embp(f.mat[r][k]);
        }
        if (key.j >= 1) {
          const ChainMap& phi = ri.diff(key.j);
          const int coff = tgt.offset.at(BlockKey{key.i, key.j - 1, true});
          for (int k = 0; k < nk; ++k)
            for (int r = 0; r < phi.target.rank(); ++r)
              if (!phi.mat[r][k].is_zero()) d.mat[coff + r][off + k] = -embp(phi.mat[r][k]);
        }
      }
    }
    d.validate_graded();
    res.differentials.push_back(std::move(d));
  }

  res.resolved_ideal = fat_point_ideal(L.scheme_zprime, Rp);
  if (!verify_complex(res))
    throw std::logic_error("cone assembly is not a complex");
  return res;
}

BiPoly theorem_poincare(const std::vector<BiPoly>& ladder_polys, int m) {
  if (m < 1 || static_cast<int>(ladder_polys.size()) != m)
    throw input_error("theorem formula needs exactly m ladder polynomials");
  BiPoly sum;
  for (int i = 1; i <= m; ++i)
    sum = sum + BiPoly::term(m - i, 0, 1) * ladder_polys[i - 1];
  BiPoly one_plus_xt = BiPoly::one() + BiPoly::term(1, 1, 1);
  return one_plus_xt * sum + BiPoly::term(m, 0, 1);
}

Resolution tower_resolution(const FatPointScheme& Z, int codim) {
  Z.validate();
  if (codim < 0 || codim > Z.ambient_dim - 1) throw input_error("bad subspace codimension");
  for (const FatPoint& p : Z.points)
    for (int c = 0; c < codim; ++c)
      if (!p.coords[c].is_zero())
        throw input_error("support does not lie in the declared coordinate subspace");

  // stage schemes live deeper in the flag of coordinate subspaces; the base
  // ring index tracks which variables remain
  std::function<Resolution(const FatPointScheme&, int, int)> recur =
      [&](const FatPointScheme& W, int c, int base) -> Resolution {
    RingPtr ring = make_ring(W.ambient_dim + 1, W.field, base);
    if (W.empty()) return direct_resolution(unit_ideal(ring));
    if (c == 0) return direct_resolution(fat_point_ideal(W, ring));
    SchemeResolver resolver = [&](const FatPointScheme& Zi, const RingPtr&) {
      return recur(Zi, c - 1, base + 1);
    };
    LadderData L = build_ladder(W, resolver, base);
    Resolution cone = cone_resolution(L);
    return is_minimal(cone) ? cone : minimize(cone);
  };
  return recur(Z, codim, 0);
}

Report construction_report(const FatPointScheme& Zprime, const ReportOptions& opts) {
  if (Zprime.empty()) return empty_scheme_report();
  return report_from(build_ladder(Zprime), opts);
}

Report report_from(const LadderData& L, const ReportOptions& opts) {
  Resolution cone = cone_resolution(L);

  Report rep;
  rep.criterion_flags = L.criterion_flags;
  rep.minimal = is_minimal(cone);
  rep.betti_table = betti(cone);
  rep.poincare_constructed = poincare(cone);
  std::vector<BiPoly> ladder_polys;
  for (int i = 1; i <= L.max_mult; ++i) ladder_polys.push_back(poincare(L.resolutions[i]));
  rep.poincare_formula = theorem_poincare(ladder_polys, L.max_mult);
  rep.complex_ok = verify_complex(cone);

  if (opts.run_exactness) {
    int bound = opts.bound.value_or(default_exactness_bound(cone));
    rep.exactness_bound = bound;
    rep.exactness_ok = verify_exactness(cone, bound);
  }
  if (opts.run_oracle) {
    Resolution oracle = direct_resolution(fat_point_ideal(L.scheme_zprime, L.Rprime));
    rep.oracle_betti = betti(oracle);
  }
  // when some flag failed or a lift fell back, the criterion does not
  // guarantee minimality; attach the minimized table
  const bool unverified = !L.all_flags() || !L.all_constrained();
  if (unverified || opts.run_minimize) rep.betti_minimized = betti(minimize(cone));
  if (unverified) rep.note = "resolution, minimality unverified";
  return rep;
}

Report empty_scheme_report() {
  Report rep;
  rep.minimal = true;
  rep.betti_table.entries[{0, 0}] = 1;
  rep.poincare_constructed = BiPoly::one();
  rep.poincare_formula = BiPoly::one();
  rep.complex_ok = true;
  return rep;
}

// --------------------------------------------------------------- rendering

namespace {

nlohmann::ordered_json betti_json(const BettiTable& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [key, v] : t.entries)
    arr.push_back(nlohmann::ordered_json::array({key.first, key.second, v}));
  return arr;
}

}  // namespace

std::string Report::to_json_text() const {
  nlohmann::ordered_json j;
  j["criterion_flags"] = criterion_flags;
  j["minimal"] = minimal;
  j["betti"] = betti_json(betti_table);
  j["poincare_constructed"] = poincare_constructed.to_string();
  j["poincare_formula"] = poincare_formula.to_string();
  j["complex_ok"] = complex_ok;
  if (exactness_bound) j["exactness_bound"] = *exactness_bound;
  if (exactness_ok) j["exactness_ok"] = *exactness_ok;
  if (oracle_betti) j["oracle_betti"] = betti_json(*oracle_betti);
  if (betti_minimized) j["betti_minimized"] = betti_json(*betti_minimized);
  if (note) j["note"] = *note;
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << betti_table.to_text();
  out << "poincare: " << poincare_constructed.to_string() << "\n";
  out << "formula:  " << poincare_formula.to_string() << "\n";
  out << "minimal: " << (minimal ? "yes" : "no") << "\n";
  out << "criterion flags:";
  if (criterion_flags.empty()) out << " (none)";
  for (bool f : criterion_flags) out << " " << (f ? "true" : "false");
  out << "\n";
  if (exactness_ok)
    out << "exact up to degree " << *exactness_bound << ": " << (*exactness_ok ? "yes" : "NO")
        << "\n";
  if (oracle_betti) {
    out << "oracle betti:\n" << oracle_betti->to_text();
  }
  if (betti_minimized) {
    out << "minimized betti:\n" << betti_minimized->to_text();
  }
  if (note) out << "note: " << *note << "\n";
  return out.str();
}

}  // namespace fatres
