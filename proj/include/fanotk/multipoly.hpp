#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fanotk/error.hpp"
#include "fanotk/field.hpp"

namespace fanotk {

using Exponents = std::vector<unsigned>;
using VarNames = std::vector<std::string>;

// Integer torus weight per variable.
struct WeightVector {
  std::vector<long> w;

  std::size_t size() const { return w.size(); }
  long operator[](std::size_t i) const { return w[i]; }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// Sparse polynomial in a fixed number of variables. Terms are kept in
// descending lexicographic order of exponent vectors and never store a zero
// coefficient.
template <Field F>
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, F, std::greater<>>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const F& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(e), F(1));
  }

  static MultiPoly monomial(Exponents e, const F& c) {
    MultiPoly p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  F coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }

  // Coefficient of the lexicographically largest term.
  const F& leading_coefficient() const {
    if (terms_.empty()) throw DegenerateInput("leading coefficient of zero polynomial");
    return terms_.begin()->second;
  }
  const Exponents& leading_exponents() const {
    if (terms_.empty()) throw DegenerateInput("leading term of zero polynomial");
    return terms_.begin()->first;
  }

  void add_term(Exponents e, const F& c) {
    if (e.size() != nvars_) throw ArityMismatch("exponent vector length differs from nvars");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e));
    return best;
  }

  // Common total degree of all terms; empty for the zero polynomial or a
  // non-homogeneous one.
  std::optional<unsigned> homogeneous_degree() const {
    std::optional<unsigned> d;
    for (const auto& [e, c] : terms_) {
      auto k = static_cast<unsigned>(degree_of(e));
      if (d && *d != k) return std::nullopt;
      d = k;
    }
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  MultiPoly operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const F& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const F& s) { return a *= s; }
  friend MultiPoly operator*(const F& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned k) const {
    MultiPoly base = *this, acc = constant(nvars_, F(1));
    while (k) {
      if (k & 1u) acc *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return acc;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  F evaluate(std::span<const F> point) const {
    if (point.size() != nvars_) throw ArityMismatch("evaluation point has wrong length");
    F acc(0);
    for (const auto& [e, c] : terms_) {
      F t = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      }
      acc += t;
    }
    return acc;
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      r.add_term(std::move(d), c * F(static_cast<long>(e[var])));
    }
    return r;
  }

  template <Field G, class Fn>
  MultiPoly<G> map_coefficients(Fn fn) const {
    MultiPoly<G> r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  // Same polynomial viewed in a larger ring: variable i maps to slot[i].
  MultiPoly embed(std::size_t new_nvars, std::span<const std::size_t> slot) const {
    if (slot.size() != nvars_) throw ArityMismatch("embedding map has wrong length");
    MultiPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
      Exponents ne(new_nvars, 0);
      for (std::size_t i = 0; i < nvars_; ++i) ne.at(slot[i]) += e[i];
      r.add_term(std::move(ne), c);
    }
    return r;
  }

  static int degree_of(const Exponents& e) {
    int d = 0;
    for (unsigned k : e) d += static_cast<int>(k);
    return d;
  }

 private:
  void check_same(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw ArityMismatch("polynomials live in different rings");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

// Ring-homomorphic substitution x_i -> images[i]. All images must share one
// ring; `target_nvars` is only consulted when `images` is empty.
template <Field F>
MultiPoly<F> poly_substitute(const MultiPoly<F>& p, std::span<const MultiPoly<F>> images,
                             std::size_t target_nvars = 0) {
  if (images.size() != p.nvars()) {
    throw ArityMismatch("substitution needs " + std::to_string(p.nvars()) + " images, got " +
                        std::to_string(images.size()));
  }
  const std::size_t m = images.empty() ? target_nvars : images[0].nvars();
  for (const auto& img : images) {
    if (img.nvars() != m) throw ArityMismatch("substitution images live in different rings");
  }
  std::vector<std::vector<MultiPoly<F>>> powers(p.nvars());
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly<F>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly<F>::constant(m, F(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly<F> out(m);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly<F> t = MultiPoly<F>::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) t *= power(i, e[i]);
    }
    out += t;
  }
  return out;
}

template <Field F>
MultiPoly<F> poly_substitute(const MultiPoly<F>& p, const std::vector<MultiPoly<F>>& images,
                             std::size_t target_nvars = 0) {
  return poly_substitute(p, std::span<const MultiPoly<F>>(images), target_nvars);
}

template <Field F>
std::vector<MultiPoly<F>> partial_derivatives(const MultiPoly<F>& p) {
  std::vector<MultiPoly<F>> out;
  out.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) out.push_back(p.derivative(i));
  return out;
}

// Weight k such that every term has weight <exponents, w> = k. The zero
// polynomial and mixed-weight polynomials have no weight.
template <Field F>
std::optional<long> torus_weight(const MultiPoly<F>& p, const WeightVector& w) {
  if (w.size() != p.nvars()) throw ArityMismatch("weight vector length differs from nvars");
  std::optional<long> k;
  for (const auto& [e, c] : p.terms()) {
    long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<long>(e[i]) * w[i];
    if (k && *k != s) return std::nullopt;
    k = s;
  }
  return k;
}

inline MultiPoly<QuadExt> promote(const MultiPoly<Rational>& p) {
  return p.map_coefficients<QuadExt>([](const Rational& c) { return QuadExt(c); });
}

// Canonical text: terms in descending lexicographic order, e.g.
// "y0*y6 - y3^2". Irrational coefficients are parenthesised.
template <Field F>
std::string to_string(const MultiPoly<F>& p, const VarNames& names) {
  if (names.size() != p.nvars()) throw ArityMismatch("variable name list has wrong length");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool is_const = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
    std::string coeff;
    bool negative = false;
    if (auto rc = FieldTraits<F>::as_rational(c)) {
      negative = rc->sign() < 0;
      Rational mag = rc->abs();
      if (!mag.is_one() || is_const) coeff = mag.to_compact_string();
    } else {
      coeff = "(" + scalar_text(c) + ")";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

namespace detail {

template <Field F>
class PolyParser {
 public:
  PolyParser(std::string_view text, const VarNames& names) : s_(text), names_(names) {}

  MultiPoly<F> parse() {
    MultiPoly<F> out(names_.size());
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
    }
    out += signed_term(negative);
    while (true) {
      skip();
      if (at_end()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      out += signed_term(op == '-');
    }
    return out;
  }

 private:
  MultiPoly<F> signed_term(bool negative) {
    MultiPoly<F> t = factor();
    while (true) {
      skip();
      if (peek() != '*') break;
      get();
      t *= factor();
    }
    return negative ? -t : t;
  }

  MultiPoly<F> factor() {
    skip();
    char c = peek();
    const std::size_t n = names_.size();
    if (c == '(') {
      get();
      std::size_t close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      F v = FieldTraits<F>::parse(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return MultiPoly<F>::constant(n, v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
        ++pos_;
      }
      F v = from_rational<F>(Rational::parse(s_.substr(start, pos_ - start)));
      return MultiPoly<F>::constant(n, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) fail("unknown variable '" + name + "'");
      unsigned k = 1;
      skip();
      if (peek() == '^') {
        get();
        skip();
        std::size_t ds = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (ds == pos_) fail("expected exponent");
        k = static_cast<unsigned>(std::stoul(std::string(s_.substr(ds, pos_ - ds))));
      }
      Exponents e(n, 0);
      e[static_cast<std::size_t>(it - names_.begin())] = k;
      return MultiPoly<F>::monomial(std::move(e), F(1));
    }
    fail("unexpected character");
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) +
                     "'");
  }

  std::string_view s_;
  const VarNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <Field F>
MultiPoly<F> parse_poly(std::string_view text, const VarNames& names) {
  return detail::PolyParser<F>(text, names).parse();
}

}  // namespace fanotk
