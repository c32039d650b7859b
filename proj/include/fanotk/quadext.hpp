#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "fanotk/rational.hpp"

namespace fanotk {

// Element r + s*sqrt(5) of the real quadratic field Q(sqrt 5). The
// representation is unique because sqrt 5 is irrational.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int v) : r_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long v) : r_(v) {}  // NOLINT
  QuadExt(Rational r) : r_(std::move(r)) {}  // NOLINT
  QuadExt(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {}

  static QuadExt sqrt5() { return {Rational(0), Rational(1)}; }
  // (1 + sqrt 5) / 2
  static QuadExt golden() { return {Rational(1, 2), Rational(1, 2)}; }
  static QuadExt parse(std::string_view text);

  const Rational& r() const { return r_; }
  const Rational& s() const { return s_; }

  bool is_zero() const { return r_.is_zero() && s_.is_zero(); }
  bool is_one() const { return r_.is_one() && s_.is_zero(); }

  QuadExt operator-() const { return {-r_, -s_}; }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend bool operator==(const QuadExt& a, const QuadExt& b) = default;

  QuadExt conjugate() const { return {r_, -s_}; }
  // r^2 - 5 s^2
  Rational norm() const;
  // conjugate / norm; throws DivisionByZero on zero.
  QuadExt inverse() const;
  QuadExt pow(unsigned e) const;

  std::optional<Rational> as_rational() const;
  std::optional<QuadExt> sqrt() const;

  // "p/q" when s = 0, otherwise "p/q+r/s*sqrt5" / "p/q-r/s*sqrt5".
  std::string to_string() const;

 private:
  Rational r_;
  Rational s_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& q) {
  return os << q.to_string();
}

}  // namespace fanotk
