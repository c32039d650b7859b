#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace fanotk {

// Smooth threefold V with -K_V = r*H and a smooth curve C on it.
struct ThreefoldData {
  long h3 = 0;
  long r = 0;
  long curve_deg = 0;
  long curve_genus = 0;

  ThreefoldData(long h3_, long r_, long deg_, long genus_);

  // Degree of the normal bundle N_{C/V}: -K.C + 2g - 2.
  long normal_degree() const;
};

// Intersection numbers on the blowup of V along C:
// (H'^3, H'^2 E, H' E^2, E^3).
struct BlowupRing {
  long h3 = 0;
  long h2e = 0;
  long he2 = 0;
  long e3 = 0;

  // Value of H'^(3-k) E^k.
  long power(int k) const;
  friend bool operator==(const BlowupRing&, const BlowupRing&) = default;
};

BlowupRing blowup_ring(const ThreefoldData& t);

// alpha*H' + beta*E
struct DivClass {
  long alpha = 0;
  long beta = 0;

  friend DivClass operator+(DivClass a, DivClass b) { return {a.alpha + b.alpha, a.beta + b.beta}; }
  friend DivClass operator-(DivClass a, DivClass b) { return {a.alpha - b.alpha, a.beta - b.beta}; }
  friend DivClass operator*(long k, DivClass a) { return {k * a.alpha, k * a.beta}; }
  friend bool operator==(const DivClass&, const DivClass&) = default;

  std::string to_string() const;
};

inline constexpr DivClass kH{1, 0};
inline constexpr DivClass kE{0, 1};

long triple_product(const BlowupRing& ring, const DivClass& a, const DivClass& b, const DivClass& c);

// Integer combination sum k_i * D_i.
using ClassCombination = std::vector<std::pair<long, DivClass>>;

DivClass evaluate(const ClassCombination& combo);
bool class_identity(const ClassCombination& lhs, const DivClass& rhs);

// Anticanonical class r*H' - E of the blowup.
DivClass anticanonical(const ThreefoldData& t);

// A dimension imported as a fixed input, or computed from other entries.
struct DimensionEntry {
  std::string name;
  long value = 0;
  bool axiom = false;
};

struct DimensionCount {
  std::vector<DimensionEntry> entries;

  long value(const std::string& name) const;
  bool is_axiom(const std::string& name) const;
};

// Sections of H_X, of O_C(2) and of the twisted conormal bundle are axioms;
// the bound for the system of hyperplane sections singular along the conic,
// and the pencil of quadrics through the sextic, are computed from them.
DimensionCount dimension_count();

}  // namespace fanotk
