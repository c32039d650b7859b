#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanotk/projective.hpp"

namespace fanotk {

// Pencil u0*Q0 + u1*Qinf of quadrics.
template <Field F>
class QuadricPencil {
 public:
  QuadricPencil(QuadricForm<F> q0, QuadricForm<F> qinf) : q0_(std::move(q0)), qinf_(std::move(qinf)) {
    if (q0_.ncoords() != qinf_.ncoords()) throw ArityMismatch("pencil generators live in different spaces");
    if (rank(Matrix<F>::from_rows({flatten(q0_), flatten(qinf_)})) != 2) {
      throw DegenerateInput("pencil generators are linearly dependent");
    }
  }

  static QuadricPencil from_polys(const MultiPoly<F>& q0, const MultiPoly<F>& qinf) {
    return QuadricPencil(QuadricForm<F>::from_poly(q0), QuadricForm<F>::from_poly(qinf));
  }

  const QuadricForm<F>& q0() const { return q0_; }
  const QuadricForm<F>& qinf() const { return qinf_; }
  std::size_t ncoords() const { return q0_.ncoords(); }

  Matrix<F> gram_at(const F& u0, const F& u1) const { return u0 * q0_.gram() + u1 * qinf_.gram(); }
  QuadricForm<F> member(const F& u0, const F& u1) const { return QuadricForm<F>(gram_at(u0, u1)); }

  static Vec<F> flatten(const QuadricForm<F>& q) {
    Vec<F> v;
    for (std::size_t i = 0; i < q.ncoords(); ++i) {
      for (std::size_t j = 0; j < q.ncoords(); ++j) v.push_back(q.gram()(i, j));
    }
    return v;
  }

 private:
  QuadricForm<F> q0_;
  QuadricForm<F> qinf_;
};

// det(u0 M0 + u1 Minf) as a binary form of degree n+1, interpolated from
// n+2 values of det(M0 + x Minf) and homogenized with x = u1/u0.
template <Field F>
BinaryForm<F> pencil_discriminant(const QuadricPencil<F>& p) {
  const auto n = static_cast<unsigned>(p.ncoords());
  std::vector<F> xs, ys;
  for (unsigned k = 0; k <= n; ++k) {
    xs.emplace_back(F(static_cast<long>(k)));
    ys.push_back(determinant(p.gram_at(F(1), xs.back())));
  }
  auto g = interpolate<F>(xs, ys);
  return BinaryForm<F>::homogenize(g, n);
}

template <Field F>
struct SingularMember {
  ProjPoint<F> param;
  unsigned multiplicity = 1;
  std::size_t corank = 0;
};

template <Field F>
struct SingularMembers {
  std::vector<SingularMember<F>> members;
  // Discriminant factors without a root in F.
  std::vector<FormFactor<F>> residual;
};

// Linear factors of the discriminant with the corank of the Gram matrix at
// each root. Members with u1 = 0 come first, then u0 = 0, then the rest.
template <Field F>
Result<SingularMembers<F>> singular_members(const QuadricPencil<F>& p) {
  auto disc = pencil_discriminant(p);
  if (disc.is_zero()) {
    return Result<SingularMembers<F>>::failure(ErrorKind::DegeneratePencil, "every member of the pencil is singular");
  }
  SingularMembers<F> out;
  std::vector<SingularMember<F>> at_inf, at_zero, rest;
  for (const auto& f : squarefree_and_roots(disc).factors) {
    if (!f.point) {
      out.residual.push_back(f);
      continue;
    }
    const auto& u = *f.point;
    SingularMember<F> m{u, f.multiplicity, p.ncoords() - rank(p.gram_at(u[0], u[1]))};
    if (u[1].is_zero()) at_inf.push_back(m);
    else if (u[0].is_zero()) at_zero.push_back(m);
    else rest.push_back(m);
  }
  for (auto* part : {&at_inf, &at_zero, &rest}) {
    out.members.insert(out.members.end(), part->begin(), part->end());
  }
  return out;
}

template <Field F>
bool base_locus_contains(const QuadricPencil<F>& p, const ProjPoint<F>& x) {
  return point_membership(x, {p.q0().to_poly(), p.qinf().to_poly()});
}

template <Field F>
bool base_locus_contains(const QuadricPencil<F>& p, const ParamCurve<F>& c) {
  const auto imgs = c.images();
  return poly_substitute(p.q0().to_poly(), imgs).is_zero() &&
         poly_substitute(p.qinf().to_poly(), imgs).is_zero();
}

template <Field F>
bool base_locus_contains(const QuadricPencil<F>& p, const ParamSurface<F>& s) {
  return poly_substitute(p.q0().to_poly(), s.coords).is_zero() &&
         poly_substitute(p.qinf().to_poly(), s.coords).is_zero();
}

// The pair (u0 : u1) with q proportional to u0*Q0 + u1*Qinf, if any.
template <Field F>
std::optional<ProjPoint<F>> express_in_pencil(const QuadricPencil<F>& p, const QuadricForm<F>& q) {
  if (q.ncoords() != p.ncoords()) throw ArityMismatch("quadric lives in a different space");
  if (q.is_zero()) return std::nullopt;
  auto a = QuadricPencil<F>::flatten(p.q0());
  auto b = QuadricPencil<F>::flatten(p.qinf());
  Matrix<F> m(a.size(), 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    m(i, 0) = a[i];
    m(i, 1) = b[i];
  }
  auto sol = solve_linear(m, QuadricPencil<F>::flatten(q));
  if (!sol) return std::nullopt;
  return ProjPoint<F>(*sol);
}

// Representative of (u0 : u1) for display: coprime integers with u1 > 0 (or
// u0 = 1 when u1 = 0) over Q; u1 = 1 over larger fields.
template <Field F>
std::pair<F, F> pencil_pair(const ProjPoint<F>& u) {
  if (u[1].is_zero()) return {F(1), F(0)};
  F u0 = u[0] / u[1];
  if constexpr (std::is_same_v<F, Rational>) {
    return {Rational(u0.num()), Rational(u0.den())};
  } else {
    return {u0, F(1)};
  }
}

// "(u0:u1)" with compact scalars.
template <Field F>
std::string pencil_pair_text(const ProjPoint<F>& u) {
  auto [a, b] = pencil_pair(u);
  auto text = [](const F& x) {
    if constexpr (std::is_same_v<F, Rational>) return x.to_compact_string();
    else return scalar_text(x);
  };
  return "(" + text(a) + ":" + text(b) + ")";
}

// Affine value u = u0/u1, "inf" when u1 = 0.
template <Field F>
std::string pencil_affine_text(const ProjPoint<F>& u) {
  if (u[1].is_zero()) return "inf";
  return scalar_text(u[0] / u[1]);
}

}  // namespace fanotk
