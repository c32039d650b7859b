#include <gtest/gtest.h>

#include "fanotk/projective.hpp"
#include "generators.hpp"

using namespace fanotk;
using fanotk::testing::Gen;
using fanotk::testing::kPropertyCases;

namespace {

const VarNames kY{"y0", "y1", "y3", "y5", "y6"};

MultiPoly<Rational> Y(const std::string& s) { return parse_poly<Rational>(s, kY); }

ParamCurve<Rational> gamma() { return ParamCurve<Rational>::monomial(6, {0, 1, 3, 5, 6}); }

ProjPoint<Rational> P(std::size_t i) { return ProjPoint<Rational>::basis(4, i); }

// Indices into (y0, y1, y3, y5, y6).
enum : std::size_t { kP0 = 0, kP1 = 1, kP3 = 2, kP5 = 3, kP6 = 4 };

BinaryForm<Rational> T(const std::string& s) {
  return BinaryForm<Rational>::from_poly(parse_poly<Rational>(s, {"t0", "t1"}));
}

}  // namespace

TEST(ProjVarieties, QuadricGramMatrix) {
  auto q = QuadricForm<Rational>::from_poly(Y("y0*y6 - y3^2"));
  Matrix<Rational> expect(5, 5);
  expect(0, 4) = Rational(1, 2);
  expect(4, 0) = Rational(1, 2);
  expect(2, 2) = Rational(-1);
  EXPECT_EQ(q.gram(), expect);
  EXPECT_EQ(q.to_poly(), Y("y0*y6 - y3^2"));
  Matrix<Rational> e22(5, 5);
  e22(2, 2) = Rational(1);
  EXPECT_EQ(QuadricForm<Rational>::from_poly(Y("y3^2")).gram(), e22);
  EXPECT_THROW(QuadricForm<Rational>::from_poly(Y("y0^3")), DegenerateInput);
  EXPECT_THROW(QuadricForm<Rational>::from_poly(Y("y0 + y1^2")), DegenerateInput);
}

TEST(ProjVarieties, VertexOfTheDegenerateQuadric) {
  auto loc = quadric_singular_locus(QuadricForm<Rational>::from_poly(Y("y0*y6 - y1*y5")));
  ASSERT_EQ(loc.dimension(), 0);
  EXPECT_EQ(loc.points()[0], P(kP3));
  EXPECT_EQ(loc.points()[0].to_string(), "(0/1 : 0/1 : 1/1 : 0/1 : 0/1)");
}

TEST(ProjVarieties, SmoothPencilMember) {
  // u0 = 1, u1 = 2: Q0 + 2 Qinf
  auto q = Y("y0*y6 - y3^2") + Rational(2) * Y("y3^2 - y1*y5");
  EXPECT_TRUE(quadric_singular_locus(QuadricForm<Rational>::from_poly(q)).is_empty());
}

TEST(ProjVarieties, SingularLineOfQ0) {
  auto loc = quadric_singular_locus(QuadricForm<Rational>::from_poly(Y("y0*y6 - y3^2")));
  ASSERT_EQ(loc.dimension(), 1);
  // Oracle: the gradient (y6, 0, -2 y3, 0, y0) vanishes exactly where y0 = y3 = y6 = 0.
  EXPECT_TRUE(loc.contains(P(kP1)));
  EXPECT_TRUE(loc.contains(P(kP5)));
  EXPECT_FALSE(loc.contains(P(kP0)));
  EXPECT_FALSE(loc.contains(P(kP3)));
  EXPECT_FALSE(loc.contains(P(kP6)));
  EXPECT_EQ(loc, LinearSubspace<Rational>::from_points(5, {P(kP1), P(kP5)}));
  EXPECT_EQ(loc, LinearSubspace<Rational>::from_forms({Y("y0"), Y("y3"), Y("y6")}));
  EXPECT_THROW(quadric_singular_locus(QuadricForm<Rational>(Matrix<Rational>(5, 5))), DegenerateInput);
}

TEST(ProjVarieties, LinesOnBothQuadrics) {
  auto l01 = LinearSubspace<Rational>::from_points(5, {P(kP0), P(kP1)});
  auto r = restrict_to_line({Y("y0*y6 - y3^2"), Y("y3^2 - y1*y5"), Y("y0")}, l01);
  EXPECT_TRUE(r[0].is_zero());
  EXPECT_TRUE(r[1].is_zero());
  EXPECT_EQ(r[2], BinaryForm<Rational>::t0());
  auto pt = LinearSubspace<Rational>::from_points(5, {P(kP0)});
  EXPECT_THROW(restrict_to_line({Y("y0")}, pt), DegenerateInput);
}

TEST(ProjVarieties, TangencyAlongCoordinateLines) {
  auto d = intersection_divisor(gamma(), {Y("y3"), Y("y5"), Y("y6")});
  ASSERT_TRUE(d.ok());
  ASSERT_EQ(d->factors.size(), 1u);
  EXPECT_EQ(d->factors[0].multiplicity, 3u);
  EXPECT_EQ(d->factors[0].point, ProjPoint<Rational>({Rational(1), Rational(0)}));

  auto e = intersection_divisor(gamma(), {Y("y0"), Y("y1"), Y("y3")});
  ASSERT_TRUE(e.ok());
  ASSERT_EQ(e->factors.size(), 1u);
  EXPECT_EQ(e->factors[0].multiplicity, 3u);
  EXPECT_EQ(e->factors[0].point, ProjPoint<Rational>({Rational(0), Rational(1)}));
}

TEST(ProjVarieties, PlaneMeetsCurveInFivePoints) {
  auto d = intersection_divisor(gamma(), {Y("y5 - 2*y0"), Y("y6 - 2*y1")});
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d->degree(), 5u);
  EXPECT_TRUE(d->is_squarefree());
  ASSERT_EQ(d->factors.size(), 1u);
  EXPECT_EQ(d->factors[0].form, T("t1^5 - 2*t0^5").monic());
}

TEST(ProjVarieties, ContainedSignal) {
  auto d = intersection_divisor(gamma(), {Y("y0*y6 - y3^2")});
  ASSERT_FALSE(d.ok());
  EXPECT_EQ(d.error().kind, ErrorKind::Contained);
}

TEST(ProjVarieties, SmoothMemberIsNotSingularAlongGamma) {
  auto q = Y("y0*y6 - y3^2") + Rational(2) * Y("y3^2 - y1*y5");
  auto cert = singular_on_family({q}, gamma().images(), 1);
  EXPECT_FALSE(cert.singular);
  ASSERT_TRUE(cert.witness_minor.has_value());
  EXPECT_FALSE(cert.witness_minor->is_zero());
  EXPECT_THROW(singular_on_family({q}, gamma().images(), 2), ArityMismatch);
  EXPECT_THROW(singular_on_family({q}, std::vector<MultiPoly<Rational>>{Y("y0")}, 1), ArityMismatch);
}

TEST(ProjVarieties, ConeIsSingularAlongItsVertexLine) {
  // y0 y6 - y3^2 is singular along the line spanned by P1, P5.
  std::vector<MultiPoly<Rational>> line;
  for (const char* s : {"0", "s", "0", "t", "0"}) line.push_back(parse_poly<Rational>(s, {"s", "t"}));
  EXPECT_TRUE(singular_on_family({Y("y0*y6 - y3^2")}, line, 1).singular);
}

TEST(ProjVarieties, CurveMembership) {
  auto g = gamma();
  EXPECT_TRUE(point_membership(P(kP0), g));
  EXPECT_TRUE(point_membership(P(kP6), g));
  EXPECT_FALSE(point_membership(P(kP1), g));
  EXPECT_FALSE(point_membership(P(kP5), g));
  EXPECT_TRUE(point_membership(g.point_at(Rational(2), Rational(-3)), g));
  EXPECT_FALSE(point_membership(ProjPoint<Rational>({Rational(1), Rational(1), Rational(1), Rational(1),
                                                     Rational(2)}),
                                g));
}

TEST(ProjVarieties, VertexIsOffTheSurface) {
  EXPECT_FALSE(point_membership(P(kP3), {Y("y0*y6 - y3^2"), Y("y3^2 - y1*y5")}));
  EXPECT_TRUE(point_membership(P(kP1), {Y("y0*y6 - y3^2"), Y("y3^2 - y1*y5")}));
}

TEST(ProjVarieties, InvolutionSwapsTheEndPoints) {
  auto g = gamma();
  auto r = reverse_coordinates(g);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(r.forms()[i], g.forms()[i]);
  EXPECT_EQ(reverse_coordinates(P(kP0)), P(kP6));
  EXPECT_EQ(reverse_coordinates(Y("y0*y6 - y3^2")), Y("y0*y6 - y3^2"));
  EXPECT_EQ(reverse_coordinates(Y("y1")), Y("y5"));
}

TEST(ProjVarieties, SpaceValidation) {
  EXPECT_THROW(WeightedProjSpace({"a", "a"}, WeightVector{{0, 1}}), DegenerateInput);
  EXPECT_THROW(WeightedProjSpace({"a", "b"}, WeightVector{{0}}), ArityMismatch);
  auto sp = WeightedProjSpace({"a", "b"}, WeightVector{{0, 1}});
  EXPECT_THROW(ParamCurve<Rational>(sp, {T("t0^2"), T("t0*t1")}), DegenerateInput);
  EXPECT_THROW(ParamCurve<Rational>(sp, {T("t0^2"), T("t1")}), DegenerateInput);
}

TEST(ProjVarietiesProperty, QuadricRoundtrip) {
  Gen g;
  for (int i = 0; i < kPropertyCases; ++i) {
    auto f = g.form<Rational>(4, 2, 6);
    if (f.is_zero()) continue;
    auto q = QuadricForm<Rational>::from_poly(f);
    ASSERT_EQ(q.to_poly(), f);
    // v M v^T evaluates the form.
    Vec<Rational> v;
    for (int k = 0; k < 4; ++k) v.push_back(g.rational(9));
    Rational acc(0);
    auto mv = q.gram().apply(v);
    for (int k = 0; k < 4; ++k) acc += v[k] * mv[k];
    ASSERT_EQ(acc, f.evaluate(v));
  }
}

TEST(ProjVarietiesProperty, SingularLocusEmptyIffInvertible) {
  Gen g;
  for (int i = 0; i < kPropertyCases; ++i) {
    auto f = g.form<Rational>(4, 2, 4);
    if (f.is_zero()) continue;
    auto q = QuadricForm<Rational>::from_poly(f);
    auto loc = quadric_singular_locus(q);
    ASSERT_EQ(loc.is_empty(), !determinant(q.gram()).is_zero());
    for (const auto& p : loc.points()) ASSERT_TRUE(point_membership(p, partial_derivatives(f)));
  }
}

TEST(ProjVarietiesProperty, InvolutionIsAnInvolution) {
  Gen g;
  auto gm = gamma();
  for (int i = 0; i < kPropertyCases; ++i) {
    auto f = g.poly<Rational>(5, 4, 6);
    ASSERT_EQ(reverse_coordinates(reverse_coordinates(f)), f);
    std::vector<Rational> c;
    for (int k = 0; k < 5; ++k) c.push_back(g.rational(5));
    c[static_cast<std::size_t>(g.integer(0, 4))] = Rational(1);
    ProjPoint<Rational> p(c);
    ASSERT_EQ(reverse_coordinates(reverse_coordinates(p)), p);
    auto line = LinearSubspace<Rational>::from_points(5, {p, P(static_cast<std::size_t>(g.integer(0, 4)))});
    ASSERT_EQ(reverse_coordinates(reverse_coordinates(line)), line);
    // The swap preserves Gamma pointwise up to t0 <-> t1.
    Rational a = g.rational(5), b = g.nonzero_rational(5);
    ASSERT_EQ(reverse_coordinates(gm.point_at(a, b)), gm.point_at(b, a));
  }
  auto r = reverse_coordinates(reverse_coordinates(gm));
  for (std::size_t i = 0; i < 5; ++i) ASSERT_EQ(r.forms()[i], gm.forms()[i]);
}

TEST(ProjVarietiesProperty, DivisorInvariantUnderRescaling) {
  Gen g;
  auto gm = gamma();
  for (int i = 0; i < kPropertyCases; ++i) {
    auto h1 = g.form<Rational>(5, 1, 3);
    auto h2 = g.form<Rational>(5, 1, 3);
    if (h1.is_zero() || h2.is_zero()) continue;
    auto d = intersection_divisor(gm, {h1, h2});
    auto e = intersection_divisor(gm, {g.nonzero_rational(9) * h1, g.nonzero_rational(9) * h2});
    ASSERT_EQ(d.ok(), e.ok());
    if (d.ok()) {
      ASSERT_EQ(d->to_string(), e->to_string());
      ASSERT_LE(d->degree(), gm.degree());
    }
  }
}

TEST(ProjVarietiesProperty, ContainmentIffAllPullbacksVanish) {
  // A conic placed in a plane of P^3 by a 4x3 matrix A; hyperplanes h with
  // h A = 0 contain it.
  Gen g;
  std::vector<BinaryForm<Rational>> conic{T("t0^2"), T("t0*t1"), T("t1^2")};
  for (int i = 0; i < kPropertyCases; ++i) {
    Matrix<Rational> a(4, 3);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = g.rational(4);
    }
    if (rank(a) < 3) continue;
    std::vector<BinaryForm<Rational>> forms;
    for (std::size_t r = 0; r < 4; ++r) {
      BinaryForm<Rational> f(MultiPoly<Rational>(2), 2);
      for (std::size_t c = 0; c < 3; ++c) f = f + a(r, c) * conic[c];
      forms.push_back(f);
    }
    ParamCurve<Rational> curve(WeightedProjSpace({"x0", "x1", "x2", "x3"}, WeightVector{{0, 0, 0, 0}}), forms);
    Vec<Rational> h;
    auto through = kernel_basis(a.transpose());
    ASSERT_EQ(through.size(), 1u);
    bool want_contained = g.coin();
    for (std::size_t r = 0; r < 4; ++r) {
      h.push_back(want_contained ? g.nonzero_rational(5) * through[0][r] : g.rational(5));
    }
    MultiPoly<Rational> hp(4);
    for (std::size_t r = 0; r < 4; ++r) hp.add_term([&] { Exponents e(4, 0); e[r] = 1; return e; }(), h[r]);
    if (hp.is_zero()) continue;
    bool contained = true;
    for (std::size_t c = 0; c < 3; ++c) {
      Rational s(0);
      for (std::size_t r = 0; r < 4; ++r) s += h[r] * a(r, c);
      contained = contained && s.is_zero();
    }
    auto d = intersection_divisor(curve, {hp});
    ASSERT_EQ(!d.ok(), contained);
    if (d.ok()) ASSERT_EQ(d->degree(), 2u);
  }
}
