#include "fanotk/blowup.hpp"

#include <algorithm>

#include "fanotk/error.hpp"

namespace fanotk {

ThreefoldData::ThreefoldData(long h3_, long r_, long deg_, long genus_)
    : h3(h3_), r(r_), curve_deg(deg_), curve_genus(genus_) {
  if (h3 <= 0) throw DegenerateInput("H^3 must be positive");
  if (r < 1 || r > 4) throw DegenerateInput("index must lie in 1..4");
  if (curve_deg < 1) throw DegenerateInput("curve degree must be positive");
  if (curve_genus < 0) throw DegenerateInput("curve genus must be non-negative");
}

long ThreefoldData::normal_degree() const { return r * curve_deg + 2 * curve_genus - 2; }

long BlowupRing::power(int k) const {
  switch (k) {
    case 0: return h3;
    case 1: return h2e;
    case 2: return he2;
    case 3: return e3;
    default: throw ArityMismatch("intersection of more than three divisors");
  }
}

BlowupRing blowup_ring(const ThreefoldData& t) {
  return {t.h3, 0, -t.curve_deg, -t.normal_degree()};
}

std::string DivClass::to_string() const {
  auto term = [](long k, const char* name) -> std::string {
    if (k == 0) return "";
    if (k == 1) return name;
    if (k == -1) return std::string("-") + name;
    return std::to_string(k) + name;
  };
  std::string a = term(alpha, "H'"), b = term(beta, "E");
  if (a.empty() && b.empty()) return "0";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + (beta > 0 ? " + " : " - ") + term(beta > 0 ? beta : -beta, "E");
}

long triple_product(const BlowupRing& ring, const DivClass& a, const DivClass& b, const DivClass& c) {
  const std::array<DivClass, 3> d{a, b, c};
  long total = 0;
  for (int mask = 0; mask < 8; ++mask) {
    long coeff = 1;
    int k = 0;
    for (int i = 0; i < 3; ++i) {
      if (mask & (1 << i)) {
        coeff *= d[static_cast<std::size_t>(i)].beta;
        ++k;
      } else {
        coeff *= d[static_cast<std::size_t>(i)].alpha;
      }
    }
    total += coeff * ring.power(k);
  }
  return total;
}

DivClass evaluate(const ClassCombination& combo) {
  DivClass acc;
  for (const auto& [k, d] : combo) acc = acc + k * d;
  return acc;
}

bool class_identity(const ClassCombination& lhs, const DivClass& rhs) { return evaluate(lhs) == rhs; }

DivClass anticanonical(const ThreefoldData& t) { return {t.r, -1}; }

long DimensionCount::value(const std::string& name) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == name; });
  if (it == entries.end()) throw Error("unknown dimension entry: " + name);
  return it->value;
}

bool DimensionCount::is_axiom(const std::string& name) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == name; });
  if (it == entries.end()) throw Error("unknown dimension entry: " + name);
  return it->axiom;
}

DimensionCount dimension_count() {
  DimensionCount dc;
  dc.entries.push_back({"h0(X, H_X)", 14, true});
  dc.entries.push_back({"h0(C, O_C(2))", 3, true});
  dc.entries.push_back({"h0(C, I_C/I_C^2(2))", 6, true});
  const long proj = dc.value("h0(X, H_X)") - 1;
  dc.entries.push_back({"dim |H_X|", proj, false});
  dc.entries.push_back(
      {"dim |H'_X - 2E_C| lower bound", proj - dc.value("h0(C, O_C(2))") - dc.value("h0(C, I_C/I_C^2(2))"), false});
  // h0(P^4, O(2)) = C(6, 2); h0(P^1, O(12)) = 13.
  dc.entries.push_back({"h0(P^4, O(2))", 6 * 5 / 2, false});
  dc.entries.push_back({"h0(Gamma, O_Gamma(2))", 6 * 2 + 1, false});
  dc.entries.push_back(
      {"h0(P^4, I_Gamma(2))", dc.value("h0(P^4, O(2))") - dc.value("h0(Gamma, O_Gamma(2))"), false});
  dc.entries.push_back({"dim |I_Gamma(2)|", dc.value("h0(P^4, I_Gamma(2))") - 1, false});
  return dc;
}

}  // namespace fanotk
