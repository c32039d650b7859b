#pragma once

#include <string>
#include <vector>

#include "fanotk/error.hpp"
#include "fanotk/field.hpp"

namespace fanotk {

// Point of projective space, canonically scaled so that the first nonzero
// coordinate is 1.
template <Field F>
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<F> coords) : c_(std::move(coords)) {
    std::size_t i = 0;
    while (i < c_.size() && c_[i].is_zero()) ++i;
    if (i == c_.size()) throw DegenerateInput("projective point with all coordinates zero");
    F inv = F(1) / c_[i];
    for (auto& v : c_) v *= inv;
  }

  // Coordinate vector e_i in P^{n}.
  static ProjPoint basis(std::size_t dim, std::size_t i) {
    std::vector<F> c(dim + 1, F(0));
    c.at(i) = F(1);
    return ProjPoint(std::move(c));
  }

  const std::vector<F>& coords() const { return c_; }
  std::size_t size() const { return c_.size(); }
  const F& operator[](std::size_t i) const { return c_[i]; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

  // "(c0 : c1 : ... : cn)"
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += " : ";
      out += scalar_text(c_[i]);
    }
    return out + ")";
  }

 private:
  std::vector<F> c_;
};

}  // namespace fanotk
