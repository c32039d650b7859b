#include <gtest/gtest.h>
#include <set>

#include "fanotk/binary_form.hpp"
#include "generators.hpp"

using namespace fanotk;
using fanotk::testing::Gen;
using fanotk::testing::kPropertyCases;

namespace {

const VarNames kY = {"y0", "y1", "y3", "y5", "y6"};
const VarNames kT = {"t0", "t1"};
const WeightVector kGammaWeights{{0, 1, 3, 5, 6}};

using QPoly = MultiPoly<Rational>;
using QForm = BinaryForm<Rational>;

QPoly Y(std::string_view s) { return parse_poly<Rational>(s, kY); }
QPoly T(std::string_view s) { return parse_poly<Rational>(s, kT); }
QForm TF(std::string_view s) { return QForm::from_poly(T(s)); }

// Random binary form of degree d; the zero form when the draw cancels.
QForm random_form(Gen& g, unsigned d) {
  auto p = g.form<Rational>(2, d, 3);
  return p.is_zero() ? QForm() : QForm(p, d);
}

std::vector<QPoly> gamma_images() {
  return {T("t0^6"), T("t0^5*t1"), T("t0^3*t1^3"), T("t0*t1^5"), T("t1^6")};
}

}  // namespace

TEST(Polynomials, CanonicalTextIsDescendingLex) {
  EXPECT_EQ(to_string(Y("-y3^2 + y6*y0"), kY), "y0*y6 - y3^2");
  EXPECT_EQ(to_string(Y("1764*y0*y6 - 784*y1*y5 + 125*y3^2"), kY),
            "1764*y0*y6 - 784*y1*y5 + 125*y3^2");
  EXPECT_EQ(to_string(Y("0"), kY), "0");
  EXPECT_EQ(to_string(Y("-1/2*y1 + 3"), kY), "-1/2*y1 + 3");
  auto q = parse_poly<QuadExt>("(1/2+1/2*sqrt5)*y0 - y1", kY);
  EXPECT_EQ(to_string(q, kY), "(1/2+1/2*sqrt5)*y0 - y1");
  EXPECT_THROW(Y("y0 + z"), ParseError);
}

TEST(Polynomials, SubstituteGammaIntoQ0) {
  auto r = poly_substitute(Y("y0*y6 - y3^2"), gamma_images());
  EXPECT_TRUE(r.is_zero());
}

TEST(Polynomials, SubstituteSurfaceFIntoQinf) {
  const VarNames w = {"w1", "w2"};
  auto W = [&](std::string_view s) { return parse_poly<Rational>(s, w); };
  std::vector<QPoly> imgs = {W("1"), W("w1^2"), W("w1*w2"), W("w2^2"), W("w1^2*w2^2")};
  EXPECT_TRUE(poly_substitute(Y("y3^2 - y1*y5"), imgs).is_zero());
}

TEST(Polynomials, IdentitySubstitution) {
  auto p = Y("3*y0^2*y6 - y1*y3 + 7");
  std::vector<QPoly> ids;
  for (std::size_t i = 0; i < 5; ++i) ids.push_back(QPoly::variable(5, i));
  EXPECT_EQ(poly_substitute(p, ids), p);
}

TEST(Polynomials, SubstituteArityMismatch) {
  std::vector<QPoly> imgs = {T("t0"), T("t1")};
  EXPECT_THROW(poly_substitute(Y("y0"), imgs), ArityMismatch);
}

TEST(Polynomials, TorusWeights) {
  EXPECT_EQ(torus_weight(Y("y0*y6 - y3^2"), kGammaWeights), 6);
  EXPECT_EQ(torus_weight(Y("y3^2 - y1*y5"), kGammaWeights), 6);
  EXPECT_EQ(torus_weight(Y("y0*y6 + y1"), kGammaWeights), std::nullopt);
  EXPECT_EQ(torus_weight(QPoly(5), kGammaWeights), std::nullopt);
}

TEST(Polynomials, PartialDerivatives) {
  auto d = partial_derivatives(Y("y0*y6 - y1*y5"));
  ASSERT_EQ(d.size(), 5u);
  EXPECT_EQ(d[0], Y("y6"));
  EXPECT_EQ(d[1], Y("-y5"));
  EXPECT_TRUE(d[2].is_zero());
  EXPECT_EQ(d[3], Y("-y1"));
  EXPECT_EQ(d[4], Y("y0"));
  for (const auto& p : partial_derivatives(Y("17"))) EXPECT_TRUE(p.is_zero());
  auto s = partial_derivatives(Y("y3^2"));
  EXPECT_EQ(s[2], Y("2*y3"));
}

TEST(BinaryForms, GcdOnLinePullbacks) {
  // y3, y5, y6 pulled back along the sextic
  auto g = binary_gcd(std::vector<QForm>{TF("t0^3*t1^3"), TF("t0*t1^5"), TF("t1^6")});
  EXPECT_EQ(g, TF("t1^3"));
}

TEST(BinaryForms, GcdOfPlanePullbacks) {
  for (long lambda : {1L, 2L, 3L, -5L}) {
    auto core = QForm::from_coeffs({Rational(-lambda), 0, 0, 0, 0, 1});  // t1^5 - l t0^5
    auto g = binary_gcd(QForm::t0() * core, QForm::t1() * core);
    EXPECT_EQ(g, core.monic());
  }
}

TEST(BinaryForms, GcdWithZero) {
  auto f = TF("2*t0^2 - 4*t0*t1");
  EXPECT_EQ(binary_gcd(f, QForm()), f.monic());
  EXPECT_EQ(binary_gcd(f, QForm()), TF("t0^2 - 2*t0*t1"));
  EXPECT_THROW(binary_gcd(QForm(), QForm()), DegenerateInput);
}

TEST(BinaryForms, FactorDiscriminantShape) {
  // u0^2 u1^2 (u0 - u1), the shape of the pencil discriminant
  auto f = TF("t0^3*t1^2 - t0^2*t1^3");
  auto d = squarefree_and_roots(f);
  ASSERT_EQ(d.factors.size(), 3u);
  EXPECT_EQ(d.factors[0].form, QForm::t0());
  EXPECT_EQ(d.factors[0].multiplicity, 2u);
  EXPECT_EQ(d.factors[1].form, QForm::t1());
  EXPECT_EQ(d.factors[1].multiplicity, 2u);
  EXPECT_EQ(d.factors[2].form, TF("t0 - t1"));
  EXPECT_EQ(d.factors[2].multiplicity, 1u);
  EXPECT_EQ(d.factors[2].point->to_string(), "(1/1 : 1/1)");
  EXPECT_EQ(d.degree(), 5u);
}

TEST(BinaryForms, FactorQuinticPlaneSection) {
  auto d = squarefree_and_roots(TF("t1^5 - t0^5"));
  ASSERT_EQ(d.factors.size(), 2u);
  EXPECT_TRUE(d.is_squarefree());
  EXPECT_EQ(d.factors[0].form, TF("t0 - t1"));
  EXPECT_EQ(d.factors[1].form.degree(), 4u);
  EXPECT_FALSE(d.factors[1].point.has_value());
  EXPECT_EQ(d.degree(), 5u);
  // independent squarefree check: gcd(f, f') = 1
  auto f = TF("t1^5 - t0^5");
  EXPECT_EQ(binary_gcd(f, f.derivative(1)).degree(), 0u);
}

TEST(BinaryForms, FactorDoubleLine) {
  auto d = squarefree_and_roots(TF("t0^2 - 2*t0*t1 + t1^2"));
  ASSERT_EQ(d.factors.size(), 1u);
  EXPECT_EQ(d.factors[0].form, TF("t0 - t1"));
  EXPECT_EQ(d.factors[0].multiplicity, 2u);
  EXPECT_THROW(squarefree_and_roots(QForm()), DegenerateInput);
}

TEST(BinaryForms, QuadraticFormulaOverGoldenField) {
  // a^2 + 3ab + b^2 has roots a/b = -phi^2, -phi^-2 in Q(sqrt5) only
  const VarNames ab = {"a", "b"};
  auto q = parse_poly<Rational>("a^2 + 3*a*b + b^2", ab);
  auto overQ = squarefree_and_roots(QForm::from_poly(q));
  ASSERT_EQ(overQ.factors.size(), 1u);
  EXPECT_FALSE(overQ.factors[0].point.has_value());
  EXPECT_TRUE(overQ.factors[0].certified_irreducible);

  auto overK = squarefree_and_roots(BinaryForm<QuadExt>::from_poly(promote(q)));
  ASSERT_EQ(overK.factors.size(), 2u);
  const QuadExt phi = QuadExt::golden(), phi2 = phi * phi;
  // factor a + c*b vanishes at (a : b) = (-c : 1) ~ (1 : -1/c)
  std::vector<ProjPoint<QuadExt>> expected = {ProjPoint<QuadExt>({-phi2, QuadExt(1)}),
                                              ProjPoint<QuadExt>({-phi2.inverse(), QuadExt(1)})};
  for (const auto& f : overK.factors) {
    ASSERT_TRUE(f.point.has_value());
    EXPECT_NE(std::find(expected.begin(), expected.end(), *f.point), expected.end())
        << f.point->to_string();
  }
}

TEST(BinaryFormsProperty, SubstitutionIsHomomorphism) {
  Gen g;
  for (int i = 0; i < kPropertyCases; ++i) {
    auto p = g.poly<Rational>(3, 3, 4), q = g.poly<Rational>(3, 3, 4);
    std::vector<QPoly> imgs = {g.poly<Rational>(2, 2, 3), g.poly<Rational>(2, 2, 3),
                               g.poly<Rational>(2, 2, 3)};
    ASSERT_EQ(poly_substitute(p + q, imgs, 2),
              poly_substitute(p, imgs, 2) + poly_substitute(q, imgs, 2));
    ASSERT_EQ(poly_substitute(p * q, imgs, 2),
              poly_substitute(p, imgs, 2) * poly_substitute(q, imgs, 2));
  }
}

TEST(BinaryFormsProperty, GcdDividesAndIsMaximal) {
  Gen g;
  for (int i = 0; i < kPropertyCases; ++i) {
    auto common = random_form(g, static_cast<unsigned>(g.integer(0, 3)));
    auto a = random_form(g, static_cast<unsigned>(g.integer(0, 3)));
    auto b = random_form(g, static_cast<unsigned>(g.integer(0, 3)));
    if (common.is_zero() || a.is_zero() || b.is_zero()) continue;
    auto f = common * a, h = common * b;
    auto d = binary_gcd(f, h);
    auto fq = exact_div(f, d), hq = exact_div(h, d);
    ASSERT_EQ(binary_gcd(fq, hq).degree(), 0u);
    ASSERT_GE(d.degree(), common.degree());
  }
}

TEST(BinaryFormsProperty, FactorsMultiplyBack) {
  Gen g;
  for (int i = 0; i < kPropertyCases; ++i) {
    // product of random linear and quadratic pieces with repeats
    QForm f = QForm::from_coeffs({g.nonzero_rational()});
    int pieces = static_cast<int>(g.integer(1, 4));
    for (int k = 0; k < pieces; ++k) {
      auto piece = random_form(g, static_cast<unsigned>(g.integer(1, 2)));
      if (piece.is_zero()) continue;
      f = f * piece.pow(static_cast<unsigned>(g.integer(1, 3)));
    }
    auto d = squarefree_and_roots(f);
    ASSERT_EQ(d.degree(), f.degree());
    QForm prod = QForm::from_coeffs({Rational(1)});
    for (const auto& fac : d.factors) prod = prod * fac.form.pow(fac.multiplicity);
    ASSERT_EQ(prod.monic(), f.monic());
  }
}

TEST(BinaryFormsProperty, TorusWeightIsAdditive) {
  Gen g;
  const WeightVector w{{0, 1, 3, 5, 6}};
  for (int i = 0; i < kPropertyCases; ++i) {
    // monomials times scalars are always weight-homogeneous
    auto p = QPoly::monomial({static_cast<unsigned>(g.integer(0, 3)), 0, static_cast<unsigned>(g.integer(0, 2)), 0, 1},
                             g.nonzero_rational());
    auto q = g.poly<Rational>(5, 3, 3);
    auto wp = torus_weight(p, w), wq = torus_weight(q, w);
    if (wp && wq) {
      ASSERT_EQ(torus_weight(p * q, w), *wp + *wq);
    }
  }
}

TEST(BinaryFormsProperty, EulerIdentity) {
  Gen g;
  for (int i = 0; i < kPropertyCases; ++i) {
    auto d = static_cast<unsigned>(g.integer(1, 7));
    auto f = random_form(g, d);
    if (f.is_zero()) continue;
    auto lhs = QForm::t0() * f.derivative(0) + QForm::t1() * f.derivative(1);
    ASSERT_EQ(lhs, Rational(static_cast<long>(d)) * f);
  }
}

TEST(UniPoly, RationalRootsWithLargeCoefficients) {
  // (x - 1234567/891011)(x + 3/7)(x^2 + 1)
  auto f = UniPoly<Rational>::linear_root(Rational(1234567, 891011)) * UniPoly<Rational>::linear_root(Rational(-3, 7)) *
           UniPoly<Rational>({Rational(1), Rational(0), Rational(1)});
  EXPECT_EQ(rational_roots(f), (std::vector<Rational>{Rational(-3, 7), Rational(1234567, 891011)}));
  EXPECT_TRUE(rational_roots(UniPoly<Rational>({Rational(-2), Rational(0), Rational(1)})).empty());
}

TEST(UniPolyProperty, RationalRootsAreExactlyThePlantedOnes) {
  Gen g;
  for (int i = 0; i < kPropertyCases; ++i) {
    std::set<Rational> planted;
    auto f = UniPoly<Rational>::constant(g.nonzero_rational());
    auto k = g.integer(0, 4);
    for (long j = 0; j < k; ++j) {
      Rational r = g.rational(200);
      planted.insert(r);
      f = f * UniPoly<Rational>::linear_root(r);
      if (g.coin(0.2)) f = f * UniPoly<Rational>::linear_root(r);
    }
    // x^2 + c with c > 0 has no real roots.
    if (g.coin()) f = f * UniPoly<Rational>({Rational(g.integer(1, 50)), Rational(0), Rational(1)});
    auto roots = rational_roots(f);
    ASSERT_EQ(std::set<Rational>(roots.begin(), roots.end()), planted);
    ASSERT_TRUE(std::is_sorted(roots.begin(), roots.end()));
  }
}
