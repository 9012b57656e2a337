#include "fatres/resolve.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "fatres/linalg.hpp"

namespace fatres {

// ------------------------------------------------------------------ ChainMap

ChainMap ChainMap::zero(FreeModule src, FreeModule tgt) {
  ChainMap m;
  m.mat.assign(tgt.rank(), std::vector<Poly>(src.rank(), Poly::zero(src.ring)));
  m.source = std::move(src);
  m.target = std::move(tgt);
  return m;
}

void ChainMap::validate_graded() const {
  for (int r = 0; r < target.rank(); ++r)
    for (int c = 0; c < source.rank(); ++c) {
      const Poly& p = mat[r][c];
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || p.degree() != source.shifts[c] - target.shifts[r])
        throw std::logic_error("chain map entry violates the degree-0 grading");
    }
}

ModuleVector ChainMap::apply(const ModuleVector& v) const {
  ModuleVector out = ModuleVector::zero(target);
  for (int c = 0; c < source.rank(); ++c) {
    if (v.coords[c].is_zero()) continue;
    for (int r = 0; r < target.rank(); ++r) {
      if (mat[r][c].is_zero()) continue;
      out.coords[r] = out.coords[r] + mat[r][c] * v.coords[c];
    }
  }
  return out;
}

ModuleVector ChainMap::column(int c) const {
  ModuleVector out = ModuleVector::zero(target);
  for (int r = 0; r < target.rank(); ++r) out.coords[r] = mat[r][c];
  return out;
}

ChainMap ChainMap::compose(const ChainMap& inner) const {
  if (!source.same_shape(inner.target))
    throw std::logic_error("chain map composition shape mismatch");
  ChainMap out = zero(inner.source, target);
  for (int c = 0; c < inner.source.rank(); ++c)
    for (int k = 0; k < source.rank(); ++k) {
      if (inner.mat[k][c].is_zero()) continue;
      for (int r = 0; r < target.rank(); ++r) {
        if (mat[r][k].is_zero()) continue;
        out.mat[r][c] = out.mat[r][c] + mat[r][k] * inner.mat[k][c];
      }
    }
  return out;
}

bool ChainMap::is_zero_map() const {
  for (const auto& row : mat)
    for (const Poly& p : row)
      if (!p.is_zero()) return false;
  return true;
}

ChainMap Resolution::augmentation_map() const {
  ChainMap m = ChainMap::zero(modules.at(0), FreeModule::make(ring, {0}));
  for (int c = 0; c < modules[0].rank(); ++c) m.mat[0][c] = augmentation[c];
  return m;
}

int Resolution::max_shift() const {
  int mx = 0;
  for (const FreeModule& f : modules) mx = std::max(mx, f.max_shift());
  return mx;
}

// -------------------------------------------------------------------- BiPoly

BiPoly BiPoly::term(int t_exp, int x_exp, long long c) {
  BiPoly p;
  if (c != 0) p.coeffs[{t_exp, x_exp}] = c;
  return p;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, v] : o.coeffs) {
    r.coeffs[k] += v;
    if (r.coeffs[k] == 0) r.coeffs.erase(k);
  }
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ka, va] : coeffs)
    for (const auto& [kb, vb] : o.coeffs) {
      auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
      r.coeffs[key] += va * vb;
      if (r.coeffs[key] == 0) r.coeffs.erase(key);
    }
  return r;
}

std::string BiPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : coeffs) {  // map order = (T-degree, X-degree)
    const auto [ti, xj] = key;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    long long a = c < 0 ? -c : c;
    std::vector<std::string> parts;
    if (a != 1 || (ti == 0 && xj == 0)) parts.push_back(std::to_string(a));
    if (xj >= 1) parts.push_back(xj == 1 ? "X" : "X^" + std::to_string(xj));
    if (ti >= 1) parts.push_back(ti == 1 ? "T" : "T^" + std::to_string(ti));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out << "*";
      out << parts[i];
    }
    first = false;
  }
  return out.str();
}

BiPoly BiPoly::parse(const std::string& s) {
  BiPoly out;
  std::size_t pos = 0;
  auto skip = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
  bool first = true;
  while (true) {
    skip();
    if (pos >= s.size()) break;
    long long sign = 1;
    if (s[pos] == '+') { ++pos; }
    else if (s[pos] == '-') { sign = -1; ++pos; }
    else if (!first) throw input_error("bad polynomial '" + s + "'");
    skip();
    long long coeff = 1;
    int ti = 0, xj = 0;
    bool any = false;
    while (pos < s.size()) {
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
          v = v * 10 + (s[pos++] - '0');
        coeff *= v;
        any = true;
      } else if (s[pos] == 'T' || s[pos] == 'X') {
        char var = s[pos++];
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = 0;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            e = e * 10 + (s[pos++] - '0');
        }
        (var == 'T' ? ti : xj) += e;
        any = true;
      } else {
        throw input_error("bad polynomial '" + s + "'");
      }
      if (pos < s.size() && s[pos] == '*') { ++pos; continue; }
      break;
    }
    if (!any) throw input_error("bad polynomial '" + s + "'");
    out = out + term(ti, xj, sign * coeff);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- BettiTable

BiPoly BettiTable::to_poincare() const {
  BiPoly p;
  for (const auto& [key, v] : entries) p = p + BiPoly::term(key.first, key.second, v);
  return p;
}

std::string BettiTable::to_text() const {
  if (entries.empty()) return "(empty)\n";
  int min_shift = entries.begin()->first.first, max_shift = min_shift, max_j = 0;
  for (const auto& [key, v] : entries) {
    min_shift = std::min(min_shift, key.first);
    max_shift = std::max(max_shift, key.first);
    max_j = std::max(max_j, key.second);
  }
  std::size_t label_w = 0, cell_w = 0;
  for (int i = min_shift; i <= max_shift; ++i)
    label_w = std::max(label_w, std::to_string(i).size() + 1);
  for (int j = 0; j <= max_j; ++j) cell_w = std::max(cell_w, std::to_string(j).size());
  for (const auto& [key, v] : entries) cell_w = std::max(cell_w, std::to_string(v).size());
  cell_w += 2;

  auto rjust = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  std::ostringstream out;
  out << std::string(label_w, ' ') << " ";
  for (int j = 0; j <= max_j; ++j) out << rjust(std::to_string(j), cell_w);
  out << "\n";
  for (int i = min_shift; i <= max_shift; ++i) {
    bool has = false;
    for (int j = 0; j <= max_j && !has; ++j) has = entries.count({i, j}) > 0;
    if (!has) continue;
    std::string label = std::to_string(i) + ":";
    out << label << std::string(label_w - label.size(), ' ') << " ";
    for (int j = 0; j <= max_j; ++j) {
      auto it = entries.find({i, j});
      out << rjust(it == entries.end() ? "." : std::to_string(it->second), cell_w);
    }
    out << "\n";
  }
  return out.str();
}

BettiTable betti(const Resolution& res) {
  BettiTable t;
  for (std::size_t j = 0; j < res.modules.size(); ++j)
    for (int s : res.modules[j].shifts) t.entries[{s, static_cast<int>(j)}] += 1;
  return t;
}

BiPoly poincare(const Resolution& res) { return betti(res).to_poincare(); }

// --------------------------------------------------------------- resolutions

Resolution schreyer_resolution(const IdealBasis& I) {
  for (const Poly& g : I.gens)
    if (!g.is_homogeneous()) throw std::logic_error("direct resolution needs a homogeneous ideal");
  if (I.gens.empty()) throw std::logic_error("cannot resolve the zero ideal");
  IdealBasis gb = ensure_groebner(I);

  Resolution res;
  res.ring = I.ring;
  res.resolved_ideal = gb;
  std::vector<int> shifts;
  for (const Poly& g : gb.gens) shifts.push_back(g.degree());
  res.modules.push_back(FreeModule::make(I.ring, shifts));
  res.augmentation = gb.gens;

  ModuleBasis cur;
  cur.ambient = FreeModule::make(I.ring, {0});
  for (const Poly& g : gb.gens) {
    ModuleVector v;
    v.coords.push_back(g);
    cur.gens.push_back(v);
  }
  cur.is_groebner = true;
  cur.order = ModuleOrder::top(I.ring->order);

  while (true) {
    ModuleBasis syz = syzygies(cur);
    if (syz.gens.empty()) break;
    const FreeModule& src_shape = res.modules.back();
    std::vector<int> next_shifts;
    for (const ModuleVector& v : syz.gens) next_shifts.push_back(mv_degree(syz.ambient, v));
    FreeModule next = FreeModule::make(I.ring, next_shifts);
    ChainMap d = ChainMap::zero(next, src_shape);
    for (std::size_t c = 0; c < syz.gens.size(); ++c)
      for (int r = 0; r < src_shape.rank(); ++r) d.mat[r][c] = syz.gens[c].coords[r];
    d.validate_graded();
    res.modules.push_back(std::move(next));
    res.differentials.push_back(std::move(d));
    cur = syz;
    if (res.length() > I.ring->nvars)
      throw std::logic_error("resolution exceeds the syzygy bound");
  }
  return res;
}

Resolution direct_resolution(const IdealBasis& I) {
  Resolution res = minimize(schreyer_resolution(I));
  if (!verify_complex(res)) throw std::logic_error("constructed resolution is not a complex");
  return res;
}

// --------------------------------------------------------------- minimize

namespace {

void erase_row(std::vector<std::vector<Poly>>& mat, int r) { mat.erase(mat.begin() + r); }

void erase_col(std::vector<std::vector<Poly>>& mat, int c) {
  for (auto& row : mat) row.erase(row.begin() + c);
}

void erase_generator(FreeModule& mod, int k) {
  mod.shifts.erase(mod.shifts.begin() + k);
  if (!mod.labels.empty()) mod.labels.erase(mod.labels.begin() + k);
}

// split off the rank-1 trivial complex at the unit entry (r, c) of d_j
void prune_at(Resolution& res, int j, int r, int c) {
  ChainMap& B = res.differentials[j - 1];
  const Poly u = B.mat[r][c];
  const FieldElement ui = u.lc().inv();

  for (int rr = 0; rr < B.target.rank(); ++rr) {
    if (rr == r || B.mat[rr][c].is_zero()) continue;
    const Poly w = B.mat[rr][c];
    for (int cc = 0; cc < B.source.rank(); ++cc) {
      if (cc == c || B.mat[r][cc].is_zero()) continue;
      B.mat[rr][cc] = B.mat[rr][cc] - w.scaled(ui) * B.mat[r][cc];
    }
  }
  erase_row(B.mat, r);
  erase_col(B.mat, c);
  erase_generator(res.modules[j], c);
  erase_generator(res.modules[j - 1], r);
  B.source = res.modules[j];
  B.target = res.modules[j - 1];

  if (j < res.length()) {
    ChainMap& C = res.differentials[j];
    erase_row(C.mat, c);
    C.target = res.modules[j];
  }
  if (j >= 2) {
    ChainMap& A = res.differentials[j - 2];
    erase_col(A.mat, r);
    A.source = res.modules[j - 1];
  } else {
    res.augmentation.erase(res.augmentation.begin() + r);
  }
}

}  // namespace

Resolution minimize(const Resolution& input) {
  Resolution res = input;
  bool found = true;
  while (found) {
    found = false;
    for (int j = res.length(); j >= 1 && !found; --j) {
      const ChainMap& B = res.differentials[j - 1];
      for (int c = 0; c < B.source.rank() && !found; ++c)
        for (int r = 0; r < B.target.rank() && !found; ++r) {
          const Poly& e = B.mat[r][c];
          if (!e.is_zero() && e.degree() == 0) {
            prune_at(res, j, r, c);
            found = true;
          }
        }
    }
  }
  while (res.length() >= 1 && res.modules.back().rank() == 0) {
    res.modules.pop_back();
    res.differentials.pop_back();
  }
  for (const ChainMap& d : res.differentials) d.validate_graded();
  return res;
}

bool is_minimal(const Resolution& res) {
  for (const ChainMap& d : res.differentials)
    for (const auto& row : d.mat)
      for (const Poly& p : row)
        if (!p.is_zero() && p.degree() == 0) return false;
  return true;
}

bool verify_complex(const Resolution& res) {
  if (res.length() >= 1) {
    if (!res.augmentation_map().compose(res.diff(1)).is_zero_map()) return false;
  }
  for (int j = 1; j + 1 <= res.length(); ++j)
    if (!res.diff(j).compose(res.diff(j + 1)).is_zero_map()) return false;
  return true;
}

// ------------------------------------------------------------- exactness

long long module_dim_at(const FreeModule& mod, int t) {
  const int n = mod.ring->nvars;
  long long d = 0;
  for (int s : mod.shifts)
    if (t - s >= 0) d += binom(t - s + n - 1, n - 1);
  return d;
}

GradedPieceIndex::GradedPieceIndex(const FreeModule& mod, int t) {
  offset.resize(mod.rank());
  index.resize(mod.rank());
  for (int r = 0; r < mod.rank(); ++r) {
    offset[r] = dim;
    const int d = t - mod.shifts[r];
    if (d < 0) continue;
    auto mons = monomials_of_degree(mod.ring, d);
    for (std::size_t k = 0; k < mons.size(); ++k)
      index[r][mons[k].exps] = static_cast<int>(k);
    dim += static_cast<int>(mons.size());
  }
}

SparseVec GradedPieceIndex::to_vec(const ModuleVector& v) const {
  SparseVec out;
  for (std::size_t r = 0; r < v.coords.size(); ++r)
    for (const Term& tm : v.coords[r].terms())
      out[offset[r] + index[r].at(tm.mon.exps)] = tm.coeff;
  return out;
}

int graded_rank_at(const ChainMap& map, int t) {
  GradedPieceIndex target(map.target, t);
  Echelon ech(map.source.ring->field);
  for (int c = 0; c < map.source.rank(); ++c) {
    const int d = t - map.source.shifts[c];
    if (d < 0) continue;
    for (const Monomial& mu : monomials_of_degree(map.source.ring, d)) {
      SparseVec col;
      for (int r = 0; r < map.target.rank(); ++r) {
        const Poly& p = map.mat[r][c];
        if (p.is_zero()) continue;
        for (const Term& tm : p.terms())
          col[target.offset[r] + target.index[r].at((tm.mon * mu).exps)] = tm.coeff;
      }
      ech.insert(std::move(col));
    }
  }
  return ech.rank();
}

int default_exactness_bound(const Resolution& res) { return res.max_shift() + 2; }

bool verify_exactness(const Resolution& res, int bound) {
  if (!verify_complex(res)) return false;
  if (bound < 0) bound = default_exactness_bound(res);
  const int len = res.length();
  const ChainMap aug = res.augmentation_map();
  const IdealBasis gb = ensure_groebner(res.resolved_ideal);

  auto degree_ok = [&](int t) {
    std::vector<int> rank(len + 1);
    rank[0] = graded_rank_at(aug, t);
    for (int j = 1; j <= len; ++j) rank[j] = graded_rank_at(res.diff(j), t);
    if (rank[0] != ideal_dim_at(gb, t)) return false;
    for (int j = 0; j <= len; ++j) {
      long long ker = module_dim_at(res.modules[j], t) - rank[j];
      long long im = j < len ? rank[j + 1] : 0;
      if (ker != im) return false;
    }
    return true;
  };

  // per-degree checks are independent; run them concurrently
  std::vector<std::future<bool>> jobs;
  for (int t = 0; t <= bound; ++t)
    jobs.push_back(std::async(std::launch::async, degree_ok, t));
  bool ok = true;
  for (auto& job : jobs) ok = job.get() && ok;
  return ok;
}

}  // namespace fatres
