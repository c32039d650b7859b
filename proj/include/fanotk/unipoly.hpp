#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <span>
#include <utility>
#include <vector>

#include "fanotk/error.hpp"
#include "fanotk/field.hpp"

namespace fanotk {

// Dense univariate polynomial, coefficient i multiplies x^i. Internal helper
// for binary forms; the zero polynomial is the empty vector.
template <Field F>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }

  static UniPoly constant(const F& v) { return UniPoly(std::vector<F>{v}); }
  // x - r
  static UniPoly linear_root(const F& r) { return UniPoly(std::vector<F>{-r, F(1)}); }

  const std::vector<F>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const F& lead() const { return c_.back(); }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

  F evaluate(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    F inv = F(1) / lead();
    for (auto& v : r.c_) v *= inv;
    return r;
  }

  UniPoly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // Euclidean division; throws on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    std::vector<F> rem = c_;
    if (degree() < d.degree()) return {UniPoly(), *this};
    std::vector<F> q(c_.size() - d.c_.size() + 1, F(0));
    F inv = F(1) / d.lead();
    for (int k = degree() - d.degree(); k >= 0; --k) {
      F t = rem[static_cast<std::size_t>(k) + d.c_.size() - 1] * inv;
      if (t.is_zero()) continue;
      q[static_cast<std::size_t>(k)] = t;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= t * d.c_[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
  }

  UniPoly exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

// Monic gcd; gcd(0, 0) = 0.
template <Field F>
UniPoly<F> uni_gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Yun's squarefree decomposition in characteristic zero: returns (s_k, k)
// with f = lead * prod s_k^k, each s_k monic, squarefree and pairwise coprime.
template <Field F>
std::vector<std::pair<UniPoly<F>, unsigned>> squarefree_decomposition(const UniPoly<F>& f) {
  std::vector<std::pair<UniPoly<F>, unsigned>> out;
  if (f.degree() < 1) return out;
  UniPoly<F> fp = f.derivative();
  UniPoly<F> a = uni_gcd(f, fp);
  UniPoly<F> b = f.exact_div(a);
  UniPoly<F> c = fp.exact_div(a);
  UniPoly<F> d = c - b.derivative();
  unsigned k = 1;
  while (b.degree() >= 1) {
    UniPoly<F> g = uni_gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, k);
    b = b.exact_div(g);
    c = d.exact_div(g);
    d = c - b.derivative();
    ++k;
  }
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
template <Field F>
UniPoly<F> interpolate(std::span<const F> xs, std::span<const F> ys) {
  if (xs.size() != ys.size()) throw ArityMismatch("interpolation node count mismatch");
  UniPoly<F> acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly<F> basis = UniPoly<F>::constant(F(1));
    F denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly<F>::linear_root(xs[j]);
      denom *= xs[i] - xs[j];
    }
    acc = acc + basis * UniPoly<F>::constant(ys[i] / denom);
  }
  return acc;
}

namespace detail {

// Number of sign changes of the Sturm sequence at x.
inline int sturm_variations(const std::vector<UniPoly<Rational>>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = p.evaluate(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

// All rational roots (without multiplicity) of a polynomial with rational
// coefficients, in increasing order. Real roots are isolated with a Sturm
// sequence and each is narrowed until its interval holds at most two
// multiples of 1/a, where a is the leading coefficient of the primitive
// integer form; a rational root p/q in lowest terms has q | a.
inline std::vector<Rational> rational_roots(const UniPoly<Rational>& f) {
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  UniPoly<Rational> sf = f.exact_div(uni_gcd(f, f.derivative()));
  mpz_class lcm_den = 1;
  for (const auto& c : sf.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  mpz_class lead = abs(sf.lead().num() * (lcm_den / sf.lead().den()));
  const Rational step(mpz_class(1), lead);

  std::vector<UniPoly<Rational>> seq{sf, sf.derivative()};
  while (seq.back().degree() > 0) {
    auto r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(UniPoly<Rational>() - r);
  }

  // Cauchy bound: every root lies in (-B, B).
  Rational bound(1);
  for (int i = 0; i < sf.degree(); ++i) {
    bound = std::max(bound, Rational(1) + (sf.coeff(static_cast<std::size_t>(i)) / sf.lead()).abs());
  }
  auto count = [&](const Rational& lo, const Rational& hi) {
    return detail::sturm_variations(seq, lo) - detail::sturm_variations(seq, hi);
  };
  auto check = [&](const Rational& x) {
    if (sf.evaluate(x).is_zero() && (roots.empty() || roots.back() != x)) roots.push_back(x);
  };
  // Roots in (lo, hi], refined depth first from the left.
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = count(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      int shi = sf.evaluate(hi).sign();
      if (shi == 0) {
        check(hi);
        continue;
      }
      // One simple root in (lo, hi): plain sign bisection.
      while (hi - lo >= step) {
        Rational mid = (lo + hi) / Rational(2);
        int sm = sf.evaluate(mid).sign();
        if (sm == 0) {
          lo = hi = mid;
          break;
        }
        (sm == shi ? hi : lo) = mid;
      }
      if (lo == hi) {
        check(lo);
        continue;
      }
    }
    if (hi - lo < step) {
      // Multiples of 1/a in (lo, hi]: at most two.
      Rational scaled = hi * Rational(lead, mpz_class(1));
      mpz_class k = scaled.num() / scaled.den();
      if (mpz_class(k * scaled.den()) > scaled.num()) k -= 1;
      for (mpz_class j = k - 1; j <= k; ++j) {
        Rational x(j, lead);
        if (lo < x && x <= hi) check(x);
      }
      continue;
    }
    Rational mid = (lo + hi) / Rational(2);
    stack.push_back({mid, hi});
    stack.push_back({lo, mid});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Roots in F that happen to be rational: run the rational root test on the
// norm f * conj(f), which has rational coefficients.
template <Field F>
std::vector<F> rational_roots_in_field(const UniPoly<F>& f) {
  std::vector<F> conj;
  for (const auto& c : f.coeffs()) conj.push_back(FieldTraits<F>::conjugate(c));
  UniPoly<F> n = f * UniPoly<F>(std::move(conj));
  std::vector<Rational> q;
  for (const auto& c : n.coeffs()) {
    auto r = FieldTraits<F>::as_rational(c);
    if (!r) throw Error("norm polynomial is not rational");
    q.push_back(*r);
  }
  std::vector<F> out;
  for (const auto& r : rational_roots(UniPoly<Rational>(std::move(q)))) {
    F x = from_rational<F>(r);
    if (f.evaluate(x).is_zero()) out.push_back(x);
  }
  return out;
}

}  // namespace fanotk
