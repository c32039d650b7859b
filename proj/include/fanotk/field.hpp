#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "fanotk/quadext.hpp"
#include "fanotk/rational.hpp"

namespace fanotk {

// Per-field hooks used by the generic polynomial and linear-algebra code.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr std::string_view name = "Q";
  static Rational from_rational(const Rational& x) { return x; }
  static std::optional<Rational> as_rational(const Rational& x) { return x; }
  static Rational conjugate(const Rational& x) { return x; }
  static std::optional<Rational> sqrt(const Rational& x) { return x.sqrt(); }
  static std::string to_string(const Rational& x) { return x.to_string(); }
  static Rational parse(std::string_view s) { return Rational::parse(s); }
};

template <>
struct FieldTraits<QuadExt> {
  static constexpr std::string_view name = "Q(sqrt5)";
  static QuadExt from_rational(const Rational& x) { return QuadExt(x); }
  static std::optional<Rational> as_rational(const QuadExt& x) { return x.as_rational(); }
  static QuadExt conjugate(const QuadExt& x) { return x.conjugate(); }
  static std::optional<QuadExt> sqrt(const QuadExt& x) { return x.sqrt(); }
  static std::string to_string(const QuadExt& x) { return x.to_string(); }
  static QuadExt parse(std::string_view s) { return QuadExt::parse(s); }
};

template <class F>
concept Field = requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { F(1) };
  { FieldTraits<F>::from_rational(Rational(0)) } -> std::convertible_to<F>;
};

template <Field F>
F from_rational(const Rational& x) {
  return FieldTraits<F>::from_rational(x);
}

template <Field F>
std::string scalar_text(const F& x) {
  return FieldTraits<F>::to_string(x);
}

}  // namespace fanotk
