#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "fanotk/error.hpp"
#include "fanotk/quadext.hpp"
#include "fanotk/rational.hpp"

namespace fanotk {

enum class FieldKind { Rational, QuadExt };

// A value tagged with the field it lives in. Arithmetic never mixes fields
// implicitly; use promote() to move a rational into Q(sqrt 5).
class Scalar {
 public:
  Scalar(Rational v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(QuadExt v) : v_(std::move(v)) {}  // NOLINT

  static Scalar parse(std::string_view text, FieldKind kind);

  FieldKind kind() const {
    return std::holds_alternative<Rational>(v_) ? FieldKind::Rational : FieldKind::QuadExt;
  }
  const Rational* rational() const { return std::get_if<Rational>(&v_); }
  const QuadExt* quadext() const { return std::get_if<QuadExt>(&v_); }

  bool is_zero() const;
  Scalar promote() const;

  std::string to_string() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  std::variant<Rational, QuadExt> v_;
};

Result<Scalar> add(const Scalar& a, const Scalar& b);
Result<Scalar> sub(const Scalar& a, const Scalar& b);
Result<Scalar> mul(const Scalar& a, const Scalar& b);
Result<Scalar> div(const Scalar& a, const Scalar& b);

Result<QuadExt> qext_inverse(const QuadExt& a);
std::optional<Rational> qext_is_rational(const QuadExt& a);

}  // namespace fanotk
