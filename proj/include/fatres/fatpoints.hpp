#ifndef FATRES_FATPOINTS_HPP
#define FATRES_FATPOINTS_HPP

#include <string>
#include <vector>

#include "fatres/gb.hpp"

namespace fatres {

struct FatPoint {
  std::vector<FieldElement> coords;  // length ambient_dim + 1
  int mult = 0;
};

/// Fat point scheme m_1 p_1 + ... + m_r p_r in P^n. Points with multiplicity
/// zero stay in the data (the truncation ladder needs stable indexing) but
/// contribute nothing to ideals.
struct FatPointScheme {
  int ambient_dim = 0;
  FieldSpec field;
  std::vector<FatPoint> points;

  int max_mult() const;
  bool empty() const { return max_mult() == 0; }
  void validate() const;  // throws input_error

  static FatPointScheme from_json_text(const std::string& text,
                                       const std::string& field_override = "");
  static FatPointScheme load(const std::string& path, const std::string& field_override = "");
  std::string to_json_text() const;
};

// coordinate ring of the scheme's ambient space; variables are named
// x{base}..x{base+n}, base 0 marking x0 as the hyperplane variable
RingPtr scheme_ring(const FatPointScheme& Z, int base_index = 0);

// ideal of all forms vanishing at the point: n independent linear forms
IdealBasis point_ideal(const RingPtr& ring, const std::vector<FieldElement>& coords);

// intersection of point-ideal powers; the empty scheme gives (1)
IdealBasis fat_point_ideal(const FatPointScheme& Z, const RingPtr& ring);

// Z_i: multiplicities (m_k - (m - i))_+, so Z_0 is empty and Z_m = Z
FatPointScheme truncation(const FatPointScheme& Z, int i);

// multiplicities (m_k - i)_+ in the same ambient space
FatPointScheme residual_scheme(const FatPointScheme& Z, int i);

// prepend coordinate 0: P^n as the hyperplane x0 = 0 in P^{n+1}
FatPointScheme embed_in_hyperplane(const FatPointScheme& Z);

// inverse of the embedding; every point must have first coordinate 0
FatPointScheme project_to_hyperplane(const FatPointScheme& Z);

// -1 if all points have first coordinate zero, else an offending point index
int first_point_off_hyperplane(const FatPointScheme& Z);

}  // namespace fatres

#endif
