#include "fanotk/scalar.hpp"

namespace fanotk {

namespace {

template <class Op>
Result<Scalar> combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.kind() != b.kind()) {
    return Result<Scalar>::failure(ErrorKind::FieldMismatch,
                                   "operands live in different fields");
  }
  if (a.kind() == FieldKind::Rational) return Scalar(op(*a.rational(), *b.rational()));
  return Scalar(op(*a.quadext(), *b.quadext()));
}

}  // namespace

Scalar Scalar::parse(std::string_view text, FieldKind kind) {
  if (kind == FieldKind::Rational) return Scalar(Rational::parse(text));
  return Scalar(QuadExt::parse(text));
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

Scalar Scalar::promote() const {
  if (const auto* r = rational()) return Scalar(QuadExt(*r));
  return *this;
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

Result<Scalar> add(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Result<Scalar> sub(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Result<Scalar> mul(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Result<Scalar> div(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) return Result<Scalar>::failure(ErrorKind::DivisionByZero, "division by zero");
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

Result<QuadExt> qext_inverse(const QuadExt& a) {
  if (a.is_zero()) return Result<QuadExt>::failure(ErrorKind::DivisionByZero, "inverse of zero");
  return a.inverse();
}

std::optional<Rational> qext_is_rational(const QuadExt& a) { return a.as_rational(); }

}  // namespace fanotk
