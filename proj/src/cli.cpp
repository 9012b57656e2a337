#include "fatres/cli.hpp"

#include <json.hpp>

#include "fatres/hypercone.hpp"

namespace fatres {

namespace {

FatPointScheme load_scheme(const CliOptions& opts) {
  return FatPointScheme::load(opts.input_path, opts.field.value_or(""));
}

void print_report(const Report& rep, const CliOptions& opts, std::ostream& out) {
  if (opts.json)
    out << rep.to_json_text();
  else
    out << rep.to_text();
}

}  // namespace

int cmd_resolve(const CliOptions& opts, std::ostream& out) {
  FatPointScheme Z = load_scheme(opts);
  ReportOptions ropts;
  ropts.run_exactness = opts.verify;
  ropts.bound = opts.bound;
  ropts.run_minimize = opts.minimize;
  Report rep = construction_report(Z, ropts);
  print_report(rep, opts, out);
  return 0;
}

int cmd_oracle(const CliOptions& opts, std::ostream& out) {
  FatPointScheme Z = load_scheme(opts);
  Report rep;
  if (Z.empty()) {
    rep = empty_scheme_report();
  } else {
    RingPtr ring = scheme_ring(Z, 0);
    Resolution res = direct_resolution(fat_point_ideal(Z, ring));
    rep.minimal = is_minimal(res);
    rep.betti_table = betti(res);
    rep.poincare_constructed = poincare(res);
    rep.poincare_formula = rep.poincare_constructed;
    rep.complex_ok = verify_complex(res);
    if (opts.verify) {
      int bound = opts.bound.value_or(default_exactness_bound(res));
      rep.exactness_bound = bound;
      rep.exactness_ok = verify_exactness(res, bound);
    }
  }
  print_report(rep, opts, out);
  return 0;
}

int cmd_criterion(const CliOptions& opts, std::ostream& out) {
  FatPointScheme Z = load_scheme(opts);
  if (Z.empty()) throw input_error("zero scheme: no point has positive multiplicity");
  Z.validate();
  if (Z.ambient_dim < 2) throw input_error("the construction needs ambient dimension at least 2");
  int off = first_point_off_hyperplane(Z);
  if (off >= 0)
    throw input_error("point " + std::to_string(off) + " does not lie in the hyperplane x0 = 0");

  FatPointScheme Zh = project_to_hyperplane(Z);
  RingPtr R = scheme_ring(Zh, 1);
  const int m = Z.max_mult();
  IdealBasis prev = groebner(unit_ideal(R));
  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  bool all = true;
  for (int i = 1; i <= m; ++i) {
    IdealBasis cur = fat_point_ideal(truncation(Zh, i), R);
    ContainmentVerdict v = classify_containment(cur, prev);
    all = all && v.holds;
    if (opts.json) {
      nlohmann::ordered_json lv;
      lv["level"] = i;
      lv["holds"] = v.holds;
      lv["witness"] = witness_name(v.witness);
      levels.push_back(std::move(lv));
    } else {
      out << "level " << i << ": " << (v.holds ? "true" : "false") << " ("
          << witness_name(v.witness) << ")\n";
    }
    prev = std::move(cur);
  }
  if (opts.json) {
    nlohmann::ordered_json j;
    j["levels"] = std::move(levels);
    j["all_hold"] = all;
    out << j.dump(2) << "\n";
  } else {
    out << "criterion " << (all ? "holds" : "FAILS") << " at every level\n";
  }
  return 0;
}

int cmd_verify(const CliOptions& opts, std::ostream& out) {
  FatPointScheme Z = load_scheme(opts);
  if (Z.empty()) throw input_error("zero scheme: no point has positive multiplicity");
  LadderData L = build_ladder(Z);
  Resolution cone = cone_resolution(L);
  bool cx = verify_complex(cone);
  int bound = opts.bound.value_or(default_exactness_bound(cone));
  bool ex = verify_exactness(cone, bound);
  if (opts.json) {
    nlohmann::ordered_json j;
    j["complex_ok"] = cx;
    j["exactness_bound"] = bound;
    j["exactness_ok"] = ex;
    out << j.dump(2) << "\n";
  } else {
    out << "complex: " << (cx ? "ok" : "FAIL") << "\n";
    out << "exact up to degree " << bound << ": " << (ex ? "ok" : "FAIL") << "\n";
  }
  return cx && ex ? 0 : 1;
}

int cmd_formula(const CliOptions& opts, std::ostream& out) {
  FatPointScheme Z = load_scheme(opts);
  if (Z.empty()) {
    if (opts.json) {
      nlohmann::ordered_json j;
      j["poincare"] = "1";
      j["criterion_holds"] = true;
      out << j.dump(2) << "\n";
    } else {
      out << "poincare: 1\n";
    }
    return 0;
  }
  Z.validate();
  if (Z.ambient_dim < 2) throw input_error("the construction needs ambient dimension at least 2");
  int off = first_point_off_hyperplane(Z);
  if (off >= 0)
    throw input_error("point " + std::to_string(off) + " does not lie in the hyperplane x0 = 0");

  FatPointScheme Zh = project_to_hyperplane(Z);
  RingPtr R = scheme_ring(Zh, 1);
  const int m = Z.max_mult();
  std::vector<BiPoly> polys;
  bool all = true;
  IdealBasis prev = groebner(unit_ideal(R));
  for (int i = 1; i <= m; ++i) {
    IdealBasis cur = fat_point_ideal(truncation(Zh, i), R);
    all = all && check_R1_containment(cur, prev);
    polys.push_back(poincare(direct_resolution(cur)));
    prev = std::move(cur);
  }
  BiPoly P = theorem_poincare(polys, m);
  if (opts.json) {
    nlohmann::ordered_json j;
    j["poincare"] = P.to_string();
    j["criterion_holds"] = all;
    out << j.dump(2) << "\n";
  } else {
    out << "poincare: " << P.to_string() << "\n";
    if (!all) out << "caveat: criterion fails at some level; the formula may overcount\n";
  }
  return 0;
}

int run_command(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (opts.verb == "resolve") return cmd_resolve(opts, out);
    if (opts.verb == "oracle") return cmd_oracle(opts, out);
    if (opts.verb == "criterion") return cmd_criterion(opts, out);
    if (opts.verb == "verify") return cmd_verify(opts, out);
    if (opts.verb == "formula") return cmd_formula(opts, out);
    err << "unknown command '" << opts.verb << "'\n";
    return 2;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fatres
