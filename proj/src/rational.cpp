#include "fanotk/rational.hpp"

#include <cctype>

#include "fanotk/error.hpp"

namespace fanotk {

namespace {

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  if (i == text.size()) throw ParseError("sign without digits");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError("invalid integer '" + std::string(text) + "'");
    }
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(s, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), 1);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("signed denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / v_);
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpz_class n = num(), d = den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_compact_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return to_string();
}

}  // namespace fanotk
