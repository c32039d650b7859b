#include "fanotk/quadext.hpp"

#include "fanotk/error.hpp"

namespace fanotk {

QuadExt QuadExt::parse(std::string_view text) {
  constexpr std::string_view kTail = "*sqrt5";
  if (text.size() <= kTail.size() || text.substr(text.size() - kTail.size()) != kTail) {
    return QuadExt(Rational::parse(text));
  }
  auto body = text.substr(0, text.size() - kTail.size());
  // The sign separating the two parts is the last '+' or '-' that is not
  // the leading sign of the whole string.
  auto split = body.find_last_of("+-");
  if (split == std::string_view::npos || split == 0) {
    return QuadExt(Rational(0), Rational::parse(body));
  }
  return QuadExt(Rational::parse(body.substr(0, split)), Rational::parse(body.substr(split)));
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  r_ += o.r_;
  s_ += o.s_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  r_ -= o.r_;
  s_ -= o.s_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational r = r_ * o.r_ + Rational(5) * s_ * o.s_;
  Rational s = r_ * o.s_ + s_ * o.r_;
  r_ = std::move(r);
  s_ = std::move(s);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

Rational QuadExt::norm() const { return r_ * r_ - Rational(5) * s_ * s_; }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  return {r_ / n, -s_ / n};
}

QuadExt QuadExt::pow(unsigned e) const {
  QuadExt base = *this, acc(1);
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

std::optional<Rational> QuadExt::as_rational() const {
  if (!s_.is_zero()) return std::nullopt;
  return r_;
}

std::optional<QuadExt> QuadExt::sqrt() const {
  if (s_.is_zero()) {
    if (auto root = r_.sqrt()) return QuadExt(*root);
    // r = 5 c^2 gives c*sqrt5
    if (auto root = (r_ / Rational(5)).sqrt()) return QuadExt(Rational(0), *root);
    return std::nullopt;
  }
  // (a + b sqrt5)^2 = r + s sqrt5 forces a^2 + 5 b^2 = r, 2ab = s, so a^2 is a
  // root of X^2 - r X + 5 s^2 / 4.
  auto disc = norm().sqrt();
  if (!disc) return std::nullopt;
  for (const Rational& a2 : {(r_ + *disc) / Rational(2), (r_ - *disc) / Rational(2)}) {
    if (a2.is_zero()) continue;
    if (auto a = a2.sqrt()) {
      QuadExt cand(*a, s_ / (Rational(2) * *a));
      if (cand * cand == *this) return cand;
    }
  }
  return std::nullopt;
}

std::string QuadExt::to_string() const {
  if (s_.is_zero()) return r_.to_string();
  std::string out = r_.to_string();
  if (s_.sign() > 0) out += "+";
  out += s_.to_string() + "*sqrt5";
  return out;
}

}  // namespace fanotk
