#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fanotk/multipoly.hpp"
#include "fanotk/projpoint.hpp"
#include "fanotk/unipoly.hpp"

namespace fanotk {

// Homogeneous polynomial of fixed degree in (t0, t1).
template <Field F>
class BinaryForm {
 public:
  BinaryForm() : p_(2), d_(0) {}
  BinaryForm(MultiPoly<F> p, unsigned degree) : p_(std::move(p)), d_(degree) {
    if (p_.nvars() != 2) throw ArityMismatch("binary form needs exactly two variables");
    if (!p_.is_zero() && p_.homogeneous_degree() != degree) {
      throw DegenerateInput("polynomial is not homogeneous of degree " + std::to_string(degree));
    }
  }

  // Degree read off the (nonzero) polynomial.
  static BinaryForm from_poly(MultiPoly<F> p) {
    auto d = p.homogeneous_degree();
    if (!d) throw DegenerateInput("not a nonzero homogeneous binary polynomial");
    return BinaryForm(std::move(p), *d);
  }

  // coeffs[i] multiplies t0^(d-i) t1^i with d = coeffs.size() - 1.
  static BinaryForm from_coeffs(const std::vector<F>& coeffs) {
    if (coeffs.empty()) throw DegenerateInput("binary form needs at least one coefficient");
    const auto d = static_cast<unsigned>(coeffs.size() - 1);
    MultiPoly<F> p(2);
    for (unsigned i = 0; i <= d; ++i) p.add_term({d - i, i}, coeffs[i]);
    return BinaryForm(std::move(p), d);
  }

  static BinaryForm t0() { return BinaryForm(MultiPoly<F>::variable(2, 0), 1); }
  static BinaryForm t1() { return BinaryForm(MultiPoly<F>::variable(2, 1), 1); }
  static BinaryForm monomial(unsigned a, unsigned b, const F& c = F(1)) {
    return BinaryForm(MultiPoly<F>::monomial({a, b}, c), a + b);
  }

  const MultiPoly<F>& poly() const { return p_; }
  unsigned degree() const { return d_; }
  bool is_zero() const { return p_.is_zero(); }
  F coeff(unsigned i) const { return p_.coefficient({d_ - i, i}); }

  // Largest k with t0^k (resp. t1^k) dividing the form.
  unsigned valuation(std::size_t var) const {
    if (is_zero()) throw DegenerateInput("valuation of zero form");
    unsigned v = d_;
    for (const auto& [e, c] : p_.terms()) v = std::min(v, e[var]);
    return v;
  }

  // Coefficient of the term with the largest t0 exponent set to 1.
  BinaryForm monic() const {
    if (is_zero()) return *this;
    return BinaryForm(p_ * (F(1) / p_.leading_coefficient()), d_);
  }

  // f(1, x) as a univariate polynomial in x = t1/t0.
  UniPoly<F> dehomogenize() const {
    std::vector<F> c;
    for (unsigned i = 0; i <= d_; ++i) c.push_back(coeff(i));
    return UniPoly<F>(std::move(c));
  }

  static BinaryForm homogenize(const UniPoly<F>& u, unsigned d) {
    if (u.degree() > static_cast<int>(d)) throw DegenerateInput("homogenizing degree too small");
    std::vector<F> c;
    for (unsigned i = 0; i <= d; ++i) c.push_back(u.coeff(i));
    return from_coeffs(c);
  }

  BinaryForm divide_monomial(unsigned a, unsigned b) const {
    MultiPoly<F> r(2);
    for (const auto& [e, c] : p_.terms()) {
      if (e[0] < a || e[1] < b) throw Error("monomial does not divide form");
      r.add_term({e[0] - a, e[1] - b}, c);
    }
    return BinaryForm(std::move(r), d_ - a - b);
  }

  F evaluate(const F& t0v, const F& t1v) const {
    std::vector<F> pt{t0v, t1v};
    return p_.evaluate(pt);
  }

  BinaryForm derivative(std::size_t var) const {
    if (d_ == 0) return BinaryForm(MultiPoly<F>(2), 0);
    return BinaryForm(p_.derivative(var), d_ - 1);
  }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    return BinaryForm(a.p_ * b.p_, a.d_ + b.d_);
  }
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.d_ != b.d_ && !a.is_zero() && !b.is_zero()) throw ArityMismatch("degree mismatch");
    return BinaryForm(a.p_ + b.p_, a.is_zero() ? b.d_ : a.d_);
  }
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    if (a.d_ != b.d_ && !a.is_zero() && !b.is_zero()) throw ArityMismatch("degree mismatch");
    return BinaryForm(a.p_ - b.p_, a.is_zero() ? b.d_ : a.d_);
  }
  friend BinaryForm operator*(const F& s, const BinaryForm& a) { return BinaryForm(a.p_ * s, a.d_); }
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.p_ == b.p_ && (a.d_ == b.d_ || a.is_zero());
  }

  BinaryForm pow(unsigned k) const { return BinaryForm(p_.pow(k), d_ * k); }

  std::string to_string(const VarNames& names = {"t0", "t1"}) const {
    return fanotk::to_string(p_, names);
  }

 private:
  MultiPoly<F> p_;
  unsigned d_;
};

// Exact quotient f / g; throws when g does not divide f.
template <Field F>
BinaryForm<F> exact_div(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (f.is_zero()) return BinaryForm<F>(MultiPoly<F>(2), 0);
  if (g.degree() > f.degree()) throw Error("divisor has larger degree");
  // Dehomogenizing at t0 = 1 loses t0 powers; the known quotient degree
  // restores them.
  auto [q, r] = f.dehomogenize().divmod(g.dehomogenize());
  if (!r.is_zero() || q.degree() > static_cast<int>(f.degree() - g.degree())) {
    throw Error("form does not divide");
  }
  auto out = BinaryForm<F>::homogenize(q, f.degree() - g.degree());
  if (!(out * g == f)) throw Error("form does not divide");
  return out;
}

// Greatest common divisor, normalized by monic(). Powers of t0 and t1 are
// extracted explicitly before a Euclidean pass on the dehomogenizations.
template <Field F>
BinaryForm<F> binary_gcd(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  if (f.is_zero() && g.is_zero()) throw DegenerateInput("gcd of two zero forms");
  if (g.is_zero()) return f.monic();
  if (f.is_zero()) return g.monic();
  const unsigned f0 = f.valuation(0), f1 = f.valuation(1);
  const unsigned g0 = g.valuation(0), g1 = g.valuation(1);
  auto fs = f.divide_monomial(f0, f1);
  auto gs = g.divide_monomial(g0, g1);
  auto h = uni_gcd(fs.dehomogenize(), gs.dehomogenize());
  auto core = BinaryForm<F>::homogenize(h, static_cast<unsigned>(h.degree()));
  return (core * BinaryForm<F>::monomial(std::min(f0, g0), std::min(f1, g1))).monic();
}

template <Field F>
BinaryForm<F> binary_gcd(const std::vector<BinaryForm<F>>& forms) {
  std::optional<BinaryForm<F>> acc;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    acc = acc ? binary_gcd(*acc, f) : f.monic();
  }
  if (!acc) throw DegenerateInput("gcd of zero forms");
  return *acc;
}

// One factor of a binary form: its (monic) form, multiplicity, and the point
// of P^1 where it vanishes when the factor is linear.
template <Field F>
struct FormFactor {
  BinaryForm<F> form;
  unsigned multiplicity = 1;
  std::optional<ProjPoint<F>> point;
  // False for residual factors that were not split further and may still be
  // reducible over F.
  bool certified_irreducible = true;
};

// Effective divisor on P^1 given as pairwise coprime factors.
template <Field F>
struct P1Divisor {
  std::vector<FormFactor<F>> factors;

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& f : factors) d += f.form.degree() * f.multiplicity;
    return d;
  }
  bool is_squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const auto& f) { return f.multiplicity == 1; });
  }
  // "3*(1 : 0) + [t0^4 + ...]"; non-linear factors are bracketed.
  std::string to_string() const {
    std::string out;
    for (const auto& f : factors) {
      if (!out.empty()) out += " + ";
      if (f.multiplicity > 1) out += std::to_string(f.multiplicity) + "*";
      out += f.point ? f.point->to_string() : "[" + f.form.to_string() + "]";
    }
    return out.empty() ? "0" : out;
  }
};

namespace detail {

template <Field F>
FormFactor<F> linear_factor(const F& root, unsigned mult) {
  // t1 - root * t0 vanishes at (1 : root)
  auto form = BinaryForm<F>::from_coeffs({-root, F(1)}).monic();
  return {form, mult, ProjPoint<F>({F(1), root}), true};
}

// Splits a squarefree univariate polynomial over F into linear factors found
// in F plus at most one residual factor.
template <Field F>
void split_squarefree(UniPoly<F> s, unsigned mult, std::vector<FormFactor<F>>& out) {
  std::vector<FormFactor<F>> linear;
  auto take_root = [&](const F& r) {
    linear.push_back(linear_factor(r, mult));
    s = s.exact_div(UniPoly<F>::linear_root(r));
  };
  if (s.degree() > 2) {
    for (const F& r : rational_roots_in_field(s)) take_root(r);
  }
  if (s.degree() == 1) {
    take_root(-s.coeff(0) / s.coeff(1));
  } else if (s.degree() == 2) {
    const F a = s.coeff(2), b = s.coeff(1), c = s.coeff(0);
    const F disc = b * b - F(4) * a * c;
    if (auto root = FieldTraits<F>::sqrt(disc)) {
      const F two_a = F(2) * a;
      F r1 = (-b + *root) / two_a, r2 = (-b - *root) / two_a;
      take_root(r1);
      take_root(r2);
    }
  }
  std::sort(linear.begin(), linear.end(), [](const auto& x, const auto& y) {
    return x.form.to_string() < y.form.to_string();
  });
  for (auto& f : linear) out.push_back(std::move(f));
  if (s.degree() >= 1) {
    auto form = BinaryForm<F>::homogenize(s, static_cast<unsigned>(s.degree())).monic();
    // Rational root search is complete over Q, so a rootless cubic is
    // irreducible there; over Q(sqrt5) only quadratics are settled.
    const bool certified = s.degree() <= 2 || (s.degree() == 3 && std::is_same_v<F, Rational>);
    out.push_back({form, mult, std::nullopt, certified});
  }
}

}  // namespace detail

// Factorization of a nonzero binary form into coprime factors with
// multiplicities: explicit t0 and t1 powers, then a squarefree decomposition
// of the remainder whose parts are split into linear factors over F where
// roots exist. Factors multiply back to f up to a nonzero scalar.
template <Field F>
P1Divisor<F> squarefree_and_roots(const BinaryForm<F>& f) {
  if (f.is_zero()) throw DegenerateInput("factorization of the zero form");
  P1Divisor<F> out;
  const unsigned v0 = f.valuation(0), v1 = f.valuation(1);
  if (v0) out.factors.push_back({BinaryForm<F>::t0(), v0, ProjPoint<F>({F(0), F(1)}), true});
  if (v1) out.factors.push_back({BinaryForm<F>::t1(), v1, ProjPoint<F>({F(1), F(0)}), true});
  auto rest = f.divide_monomial(v0, v1).dehomogenize();
  for (auto& [part, k] : squarefree_decomposition(rest)) detail::split_squarefree(part, k, out.factors);
  return out;
}

}  // namespace fanotk
