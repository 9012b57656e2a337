#include <doctest.h>

#include <random>

#include <json.hpp>

#include "fatres/hypercone.hpp"
#include "oracle.hpp"

using namespace fatres;

namespace {

FatPointScheme scheme(int dim, std::vector<std::pair<std::vector<long>, int>> pts,
                      FieldSpec f = FieldSpec::rationals()) {
  FatPointScheme Z;
  Z.ambient_dim = dim;
  Z.field = f;
  for (auto& [cs, m] : pts) {
    FatPoint p;
    p.mult = m;
    for (long c : cs) p.coords.push_back(FieldElement::from_int(f, c));
    Z.points.push_back(std::move(p));
  }
  return Z;
}

}  // namespace

TEST_CASE("ladder for a double point in the hyperplane of P2") {
  FatPointScheme Z = scheme(2, {{{0, 0, 1}, 2}});
  LadderData L = build_ladder(Z);
  CHECK(L.max_mult == 2);
  CHECK(L.ideals[1].gens == std::vector<Poly>{Poly::parse(L.R, "x1")});
  CHECK(L.ideals[2].gens == std::vector<Poly>{Poly::parse(L.R, "x1^2")});
  CHECK(L.all_flags());
  CHECK(L.all_constrained());
}

TEST_CASE("ladder principal ideals for collinear points") {
  FatPointScheme Z = scheme(2, {{{0, 1, 0}, 2}, {{0, 0, 1}, 1}});
  LadderData L = build_ladder(Z);
  REQUIRE(L.max_mult == 2);
  CHECK(L.ideals[1].gens.size() == 1);  // principal: one simple point on P^1
  CHECK(L.ideals[2].gens.size() == 1);  // principal of degree 3
  CHECK(L.ideals[2].gens[0].degree() == 3);
  CHECK(L.all_flags());
}

TEST_CASE("ladder rejects off-hyperplane supports and empty schemes") {
  FatPointScheme bad = scheme(2, {{{1, 0, 1}, 2}});
  CHECK_THROWS_AS(build_ladder(bad), input_error);
  FatPointScheme empty = scheme(2, {{{0, 0, 1}, 0}});
  CHECK_THROWS_AS(build_ladder(empty), input_error);
}

TEST_CASE("cone for the double point matches the direct resolution") {
  FatPointScheme Z = scheme(2, {{{0, 0, 1}, 2}});
  LadderData L = build_ladder(Z);
  Resolution cone = cone_resolution(L);
  CHECK(cone.modules[0].shifts == std::vector<int>{2, 2, 2});
  CHECK(cone.modules[1].shifts == std::vector<int>{3, 3});
  CHECK(poincare(cone) == BiPoly::parse("3*T^2 + 2*X*T^3"));
  CHECK(is_minimal(cone));
  CHECK(verify_complex(cone));
  CHECK(verify_exactness(cone));
  Resolution oracle = direct_resolution(fat_point_ideal(Z, L.Rprime));
  CHECK(betti(cone) == betti(oracle));
}

TEST_CASE("cone matrices of the double point, pinned entry by entry") {
  FatPointScheme Z = scheme(2, {{{0, 0, 1}, 2}});
  Resolution cone = cone_resolution(build_ladder(Z));
  const RingPtr& Rp = cone.ring;
  auto P = [&](const char* s) { return Poly::parse(Rp, s); };
  // generators: x1^2 (level 2), x0*x1 (level 1 shifted), x0^2 (level 0)
  REQUIRE(cone.augmentation.size() == 3);
  CHECK(cone.augmentation[0] == P("x1^2"));
  CHECK(cone.augmentation[1] == P("x0*x1"));
  CHECK(cone.augmentation[2] == P("x0^2"));
  const ChainMap& d = cone.diff(1);
  REQUIRE(d.source.rank() == 2);
  REQUIRE(d.target.rank() == 3);
  CHECK(d.mat[0][0] == P("x0"));
  CHECK(d.mat[1][0] == P("-x1"));
  CHECK(d.mat[2][0].is_zero());
  CHECK(d.mat[0][1].is_zero());
  CHECK(d.mat[1][1] == P("x0"));
  CHECK(d.mat[2][1] == P("-x1"));
}

TEST_CASE("single reduced point in the hyperplane of P3") {
  FatPointScheme Z = scheme(3, {{{0, 0, 0, 1}, 1}});
  Report rep = construction_report(Z);
  CHECK(rep.poincare_constructed == BiPoly::parse("3*T + 3*X*T^2 + X^2*T^3"));
  CHECK(rep.poincare_formula == rep.poincare_constructed);
  CHECK(rep.minimal);
}

TEST_CASE("collinear pair of double points") {
  FatPointScheme Z = scheme(2, {{{0, 1, 0}, 2}, {{0, 0, 1}, 2}});
  LadderData L = build_ladder(Z);
  Resolution cone = cone_resolution(L);
  CHECK(poincare(cone) == BiPoly::parse("T^2 + T^3 + T^4 + X*T^4 + X*T^5"));
  CHECK(is_minimal(cone));
  CHECK(verify_exactness(cone, 8));
  Resolution oracle = direct_resolution(fat_point_ideal(Z, L.Rprime));
  CHECK(betti(minimize(cone)) == betti(oracle));
  // the comparison maps behind a constrained ladder have no constant entries
  CHECK(L.all_constrained());
  for (const ComparisonMaps& cm : L.comparisons)
    for (const ChainMap& f : cm.maps)
      for (const auto& row : f.mat)
        for (const Poly& p : row)
          if (!p.is_zero()) CHECK(p.degree() >= 1);
}

TEST_CASE("coordinate-vertex triple in P3 keeps monomial flags") {
  FatPointScheme Z = scheme(3, {{{0, 1, 0, 0}, 2}, {{0, 0, 1, 0}, 2}, {{0, 0, 0, 1}, 1}});
  LadderData L = build_ladder(Z);
  CHECK(L.all_flags());
  Resolution cone = cone_resolution(L);
  CHECK(is_minimal(cone));
  std::vector<BiPoly> polys;
  for (int i = 1; i <= L.max_mult; ++i) polys.push_back(poincare(L.resolutions[i]));
  CHECK(poincare(cone) == theorem_poincare(polys, L.max_mult));
}

TEST_CASE("shift bookkeeping of cone generators") {
  FatPointScheme Z = scheme(2, {{{0, 1, 0}, 2}, {{0, 0, 1}, 2}});
  LadderData L = build_ladder(Z);
  Resolution cone = cone_resolution(L);
  const int m = L.max_mult;
  for (std::size_t j = 0; j < cone.modules.size(); ++j) {
    const FreeModule& mod = cone.modules[j];
    for (int k = 0; k < mod.rank(); ++k) {
      const GenLabel& lbl = mod.labels[k];
      const int orig = L.resolutions[lbl.i].modules[lbl.j].shifts[lbl.k];
      if (lbl.j == static_cast<int>(j)) {
        CHECK(mod.shifts[k] == orig + (m - lbl.i));
      } else {
        REQUIRE(lbl.j == static_cast<int>(j) - 1);  // cone part
        CHECK(mod.shifts[k] == orig + (m - lbl.i) + 1);
      }
    }
  }
}

TEST_CASE("block layout is descending in the ladder index") {
  FatPointScheme Z = scheme(2, {{{0, 1, 0}, 2}, {{0, 0, 1}, 2}});
  Resolution cone = cone_resolution(build_ladder(Z));
  for (const FreeModule& mod : cone.modules) {
    int last_i = 1000;
    for (const GenLabel& lbl : mod.labels) {
      CHECK(lbl.i <= last_i);
      last_i = lbl.i;
    }
  }
  // augmentation column for the i = 0 block is x0^m
  const FreeModule& F0 = cone.modules[0];
  REQUIRE(F0.labels.back().i == 0);
  CHECK(cone.augmentation.back() == Poly::parse(cone.ring, "x0^2"));
}

TEST_CASE("theorem formula examples") {
  // m = 1, one simple point in the plane
  CHECK(theorem_poincare({BiPoly::parse("2*T + X*T^2")}, 1) ==
        BiPoly::parse("3*T + 3*X*T^2 + X^2*T^3"));
  // m = 2, double point
  CHECK(theorem_poincare({BiPoly::parse("T"), BiPoly::parse("T^2")}, 2) ==
        BiPoly::parse("3*T^2 + 2*X*T^3"));
  // m = 2, collinear double points
  CHECK(theorem_poincare({BiPoly::parse("T^2"), BiPoly::parse("T^4")}, 2) ==
        BiPoly::parse("T^2 + T^3 + T^4 + X*T^4 + X*T^5"));
  CHECK_THROWS_AS(theorem_poincare({BiPoly::one()}, 2), input_error);
}

TEST_CASE("augmentation image equals the fat point ideal") {
  FatPointScheme Z = scheme(3, {{{0, 1, 0, 0}, 2}, {{0, 0, 1, 0}, 1}});
  LadderData L = build_ladder(Z);
  Resolution cone = cone_resolution(L);
  IdealBasis from_aug = groebner(make_ideal(L.Rprime, cone.augmentation));
  CHECK(from_aug.gens == cone.resolved_ideal.gens);
}

TEST_CASE("tower: two simple points on a line in P3") {
  FatPointScheme Z = scheme(3, {{{0, 0, 1, 0}, 1}, {{0, 0, 0, 1}, 1}});
  Resolution tower = tower_resolution(Z, 2);
  Resolution oracle = direct_resolution(fat_point_ideal(Z, scheme_ring(Z, 0)));
  CHECK(betti(tower) == betti(oracle));
  CHECK(is_minimal(tower));
  CHECK(verify_exactness(tower));
}

TEST_CASE("tower with codimension one equals the cone") {
  FatPointScheme Z = scheme(2, {{{0, 1, 0}, 2}, {{0, 0, 1}, 1}});
  Resolution t1 = tower_resolution(Z, 1);
  Resolution cone = cone_resolution(build_ladder(Z));
  CHECK(betti(t1) == betti(cone));
}

TEST_CASE("tower: fat point on a line matches the power-of-linear-ideal pattern") {
  for (int m = 1; m <= 3; ++m) {
    FatPointScheme Z = scheme(3, {{{0, 0, 0, 1}, m}});
    Resolution tower = tower_resolution(Z, 2);
    Resolution oracle = direct_resolution(fat_point_ideal(Z, scheme_ring(Z, 0)));
    CHECK(betti(tower) == betti(oracle));
  }
}

TEST_CASE("tower validates the declared subspace") {
  FatPointScheme Z = scheme(3, {{{0, 1, 0, 0}, 1}, {{0, 0, 0, 1}, 1}});
  CHECK_THROWS_AS(tower_resolution(Z, 2), input_error);  // second coordinate not zero
  CHECK_NOTHROW(tower_resolution(Z, 1));
}

TEST_CASE("report fields on a clean instance") {
  FatPointScheme Z = scheme(2, {{{0, 0, 1}, 2}});
  ReportOptions opts;
  opts.run_exactness = true;
  opts.run_oracle = true;
  Report rep = construction_report(Z, opts);
  CHECK(rep.minimal);
  CHECK(rep.complex_ok);
  REQUIRE(rep.exactness_ok.has_value());
  CHECK(*rep.exactness_ok);
  REQUIRE(rep.oracle_betti.has_value());
  CHECK(*rep.oracle_betti == rep.betti_table);
  CHECK(rep.poincare_constructed == rep.poincare_formula);
  CHECK_FALSE(rep.note.has_value());
}

TEST_CASE("report marks the hypothetical flag-false path") {
  FatPointScheme Z = scheme(2, {{{0, 0, 1}, 2}});
  LadderData L = build_ladder(Z);
  // force the control path a failed criterion would take
  L.criterion_flags[0] = false;
  L.constrained_used[0] = false;
  Report rep = report_from(L);
  REQUIRE(rep.note.has_value());
  CHECK(*rep.note == "resolution, minimality unverified");
  REQUIRE(rep.betti_minimized.has_value());
  CHECK(*rep.betti_minimized == betti(minimize(cone_resolution(L))));
}

TEST_CASE("report json serialization round trips") {
  FatPointScheme Z = scheme(2, {{{0, 0, 1}, 2}});
  ReportOptions opts;
  opts.run_exactness = true;
  Report rep = construction_report(Z, opts);
  std::string text = rep.to_json_text();
  auto parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);
  CHECK(parsed["minimal"] == true);
  CHECK(parsed["poincare_constructed"] == "3*T^2 + 2*X*T^3");
}

TEST_CASE("empty scheme report") {
  Report rep = empty_scheme_report();
  CHECK(rep.poincare_constructed == BiPoly::one());
  CHECK(rep.betti_table.entries.at({0, 0}) == 1);
}

TEST_CASE("randomized end-to-end sweep across fields") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> coord(0, 4), mult(1, 3), npts(1, 3), dims(2, 3);
  std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime_field(2),
                                   FieldSpec::prime_field(3), FieldSpec::prime_field(5)};
  int built = 0, guard = 0;
  while (built < 16 && guard++ < 400) {
    const FieldSpec f = fields[built % fields.size()];
    const int dim = dims(rng);
    FatPointScheme Z;
    Z.ambient_dim = dim;
    Z.field = f;
    const int want = npts(rng);
    int tries = 0;
    while (static_cast<int>(Z.points.size()) < want && tries++ < 60) {
      FatPoint p;
      p.mult = mult(rng);
      p.coords.push_back(FieldElement::zero(f));  // support in x0 = 0
      bool zero = true;
      for (int c = 1; c <= dim; ++c) {
        p.coords.push_back(FieldElement::from_int(f, coord(rng)));
        zero = zero && p.coords.back().is_zero();
      }
      if (zero) continue;
      FatPointScheme trial = Z;
      trial.points.push_back(p);
      try {
        trial.validate();
      } catch (const input_error&) {
        continue;
      }
      Z = std::move(trial);
    }
    if (Z.points.empty()) continue;
    ++built;

    CAPTURE(built);
    LadderData L = build_ladder(Z);
    Resolution cone = cone_resolution(L);
    CHECK(verify_complex(cone));
    CHECK(verify_exactness(cone));
    // minimality is promised exactly when every flag held and every lift
    // kept its entries linear
    if (L.all_flags() && L.all_constrained()) CHECK(is_minimal(cone));
    if (is_minimal(cone)) {
      std::vector<BiPoly> polys;
      for (int i = 1; i <= L.max_mult; ++i) polys.push_back(poincare(L.resolutions[i]));
      if (L.all_flags()) CHECK(poincare(cone) == theorem_poincare(polys, L.max_mult));
    }
    Resolution oracle = direct_resolution(fat_point_ideal(Z, L.Rprime));
    CHECK(betti(minimize(cone)) == betti(oracle));
  }
  CHECK(built == 16);
}

TEST_CASE("cone over GF(2) for a monomial instance") {
  FatPointScheme Z = scheme(3, {{{0, 1, 0, 0}, 2}, {{0, 0, 1, 0}, 1}},
                            FieldSpec::prime_field(2));
  LadderData L = build_ladder(Z);
  CHECK(L.all_flags());
  Resolution cone = cone_resolution(L);
  CHECK(is_minimal(cone));
  Resolution oracle = direct_resolution(fat_point_ideal(Z, L.Rprime));
  CHECK(betti(minimize(cone)) == betti(oracle));
}
