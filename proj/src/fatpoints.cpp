#include "fatres/fatpoints.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fatres {

int FatPointScheme::max_mult() const {
  int m = 0;
  for (const FatPoint& p : points) m = std::max(m, p.mult);
  return m;
}

void FatPointScheme::validate() const {
  if (ambient_dim < 1) throw input_error("ambient dimension must be at least 1");
  for (std::size_t a = 0; a < points.size(); ++a) {
    const FatPoint& p = points[a];
    if (static_cast<int>(p.coords.size()) != ambient_dim + 1)
      throw input_error("point " + std::to_string(a) + " needs " +
                        std::to_string(ambient_dim + 1) + " coordinates");
    if (p.mult < 0) throw input_error("point " + std::to_string(a) + " has negative multiplicity");
    bool all_zero = true;
    for (const FieldElement& c : p.coords) {
      if (c.spec() != field) throw input_error("coordinate field mismatch");
      if (!c.is_zero()) all_zero = false;
    }
    if (all_zero) throw input_error("point " + std::to_string(a) + " has all coordinates zero");
  }
  // pairwise projectively distinct, by the cross-product proportionality test
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const auto& u = points[a].coords;
      const auto& v = points[b].coords;
      bool proportional = true;
      for (std::size_t i = 0; i < u.size() && proportional; ++i)
        for (std::size_t j = i + 1; j < u.size() && proportional; ++j)
          if (u[i] * v[j] != u[j] * v[i]) proportional = false;
      if (proportional)
        throw input_error("points " + std::to_string(a) + " and " + std::to_string(b) +
                          " coincide");
    }
}

RingPtr scheme_ring(const FatPointScheme& Z, int base_index) {
  return make_ring(Z.ambient_dim + 1, Z.field, base_index);
}

IdealBasis point_ideal(const RingPtr& ring, const std::vector<FieldElement>& coords) {
  if (static_cast<int>(coords.size()) != ring->nvars)
    throw std::logic_error("coordinate count does not match the ring");
  int piv = -1;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) { piv = static_cast<int>(i); break; }
  if (piv < 0) throw input_error("zero coordinate vector");
  const FieldElement apiv = coords[piv];
  std::vector<Poly> gens;
  for (int k = 0; k < ring->nvars; ++k) {
    if (k == piv) continue;
    Poly g = Poly::variable(ring, k).scaled(apiv) -
             Poly::variable(ring, piv).scaled(coords[k]);
    gens.push_back(g);
  }
  return groebner(make_ideal(ring, std::move(gens)));
}

namespace {

bool is_unit(const IdealBasis& I) {
  for (const Poly& g : I.gens)
    if (!g.is_zero() && g.degree() == 0) return true;
  return false;
}

}  // namespace

IdealBasis fat_point_ideal(const FatPointScheme& Z, const RingPtr& ring) {
  IdealBasis acc = unit_ideal(ring);
  acc.is_groebner = true;
  for (const FatPoint& p : Z.points) {
    if (p.mult < 1) continue;
    IdealBasis power = ideal_power(point_ideal(ring, p.coords), p.mult);
    acc = is_unit(acc) ? groebner(power) : ideal_intersection(acc, power);
  }
  return acc;
}

FatPointScheme truncation(const FatPointScheme& Z, int i) {
  const int m = Z.max_mult();
  if (i < 0 || i > m) throw input_error("truncation index out of range");
  FatPointScheme out = Z;
  for (FatPoint& p : out.points) p.mult = std::max(p.mult - (m - i), 0);
  return out;
}

FatPointScheme residual_scheme(const FatPointScheme& Z, int i) {
  if (i < 0 || i > Z.max_mult()) throw input_error("residual index out of range");
  FatPointScheme out = Z;
  for (FatPoint& p : out.points) p.mult = std::max(p.mult - i, 0);
  return out;
}

FatPointScheme embed_in_hyperplane(const FatPointScheme& Z) {
  FatPointScheme out = Z;
  out.ambient_dim += 1;
  for (FatPoint& p : out.points)
    p.coords.insert(p.coords.begin(), FieldElement::zero(Z.field));
  return out;
}

FatPointScheme project_to_hyperplane(const FatPointScheme& Z) {
  int off = first_point_off_hyperplane(Z);
  if (off >= 0)
    throw input_error("point " + std::to_string(off) + " does not lie in the hyperplane x0 = 0");
  if (Z.ambient_dim < 2) throw input_error("no hyperplane to project to");
  FatPointScheme out = Z;
  out.ambient_dim -= 1;
  for (FatPoint& p : out.points) p.coords.erase(p.coords.begin());
  return out;
}

int first_point_off_hyperplane(const FatPointScheme& Z) {
  for (std::size_t a = 0; a < Z.points.size(); ++a)
    if (!Z.points[a].coords.at(0).is_zero()) return static_cast<int>(a);
  return -1;
}

// --------------------------------------------------------------------- JSON

FatPointScheme FatPointScheme::from_json_text(const std::string& text,
                                              const std::string& field_override) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed scheme file: ") + e.what());
  }
  FatPointScheme Z;
  try {
    Z.ambient_dim = j.at("ambient_dim").get<int>();
    Z.field = FieldSpec::parse(field_override.empty() ? j.value("field", std::string("q"))
                                                      : field_override);
    for (const auto& jp : j.at("points")) {
      FatPoint p;
      for (const auto& jc : jp.at("coords"))
        p.coords.push_back(FieldElement::parse(Z.field, jc.get<std::string>()));
      p.mult = jp.at("mult").get<int>();
      Z.points.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed scheme file: ") + e.what());
  }
  Z.validate();
  return Z;
}

FatPointScheme FatPointScheme::load(const std::string& path, const std::string& field_override) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open scheme file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), field_override);
}

std::string FatPointScheme::to_json_text() const {
  nlohmann::ordered_json j;
  j["ambient_dim"] = ambient_dim;
  j["field"] = field.to_string();
  j["points"] = nlohmann::ordered_json::array();
  for (const FatPoint& p : points) {
    nlohmann::ordered_json jp;
    jp["coords"] = nlohmann::ordered_json::array();
    for (const FieldElement& c : p.coords) jp["coords"].push_back(c.to_string());
    jp["mult"] = p.mult;
    j["points"].push_back(std::move(jp));
  }
  return j.dump(2) + "\n";
}

}  // namespace fatres
