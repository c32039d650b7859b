#include <gtest/gtest.h>

#include <set>

#include "fanotk/graded_ideals.hpp"
#include "generators.hpp"

using namespace fanotk;
using fanotk::testing::Gen;
using fanotk::testing::kPropertyCases;

namespace {

const VarNames kY{"y0", "y1", "y3", "y5", "y6"};
const VarNames kZ{"z3", "z4", "z6", "z8", "z9"};

MultiPoly<Rational> Y(const std::string& s) { return parse_poly<Rational>(s, kY); }
MultiPoly<Rational> Z(const std::string& s) { return parse_poly<Rational>(s, kZ); }

ParamCurve<Rational> mono(std::vector<unsigned> e) { return ParamCurve<Rational>::monomial(6, e); }

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficient of x^(12-i) y^i in (x + a y)(x + b y)^11, for i in {3,4,6,8,9}.
ParamSurface<Rational> boundary_surface() {
  std::vector<MultiPoly<Rational>> coords;
  for (long i : {3, 4, 6, 8, 9}) {
    MultiPoly<Rational> z(2);
    z.add_term({0, static_cast<unsigned>(i)}, Rational(binom(11, i)));
    z.add_term({1, static_cast<unsigned>(i - 1)}, Rational(binom(11, i - 1)));
    coords.push_back(std::move(z));
  }
  return ParamSurface<Rational>(WeightedProjSpace(kZ, WeightVector{{-3, -2, 0, 2, 3}}), {"a", "b"}, coords);
}

ParamSurface<Rational> quartic_surface() {
  std::vector<MultiPoly<Rational>> coords;
  for (const char* s : {"1", "w1^2", "w1*w2", "w2^2", "w1^2*w2^2"}) {
    coords.push_back(parse_poly<Rational>(s, {"w1", "w2"}));
  }
  return ParamSurface<Rational>(WeightedProjSpace(kY, WeightVector{{0, 1, 3, 5, 6}}), {"w1", "w2"}, coords);
}

// Number of distinct k-fold sums from the exponent set: the rank of a
// monomial curve's degree-k evaluation map, since every column is a unit
// vector.
std::size_t distinct_sums(const std::vector<unsigned>& e, int k) {
  std::set<unsigned> sums{0};
  for (int r = 0; r < k; ++r) {
    std::set<unsigned> next;
    for (unsigned s : sums) {
      for (unsigned x : e) next.insert(s + x);
    }
    sums = next;
  }
  return sums.size();
}

ParamCurve<Rational> random_curve(Gen& g) {
  // Monomial sextic with a sparse random perturbation; retried until coprime.
  for (;;) {
    std::vector<unsigned> e{0, 6};
    std::set<unsigned> mid;
    while (mid.size() < 3) mid.insert(static_cast<unsigned>(g.integer(1, 5)));
    e.insert(e.begin() + 1, mid.begin(), mid.end());
    std::vector<BinaryForm<Rational>> forms;
    for (unsigned x : e) {
      auto f = BinaryForm<Rational>::monomial(6 - x, x);
      if (g.coin(0.3)) {
        auto k = static_cast<unsigned>(g.integer(0, 6));
        f = f + BinaryForm<Rational>::monomial(6 - k, k, g.rational(5));
      }
      forms.push_back(f.is_zero() ? BinaryForm<Rational>::monomial(6 - x, x) : f);
    }
    try {
      return ParamCurve<Rational>(WeightedProjSpace(kY, WeightVector{{0, 1, 3, 5, 6}}), forms);
    } catch (const DegenerateInput&) {
    }
  }
}

}  // namespace

TEST(GradedIdeals, MonomialOrder) {
  auto m = monomials_of_degree(3, 2);
  ASSERT_EQ(m.size(), 6u);
  EXPECT_EQ(m.front(), (Exponents{2, 0, 0}));
  EXPECT_EQ(m[1], (Exponents{1, 1, 0}));
  EXPECT_EQ(m.back(), (Exponents{0, 0, 2}));
  EXPECT_EQ(monomials_of_degree(5, 2).size(), 15u);
  EXPECT_EQ(monomials_of_degree(5, 5).size(), 126u);
}

TEST(GradedIdeals, QuadricsThroughGamma) {
  auto g = mono({0, 1, 3, 5, 6});
  auto q = forms_through_curve(g, 2);
  ASSERT_EQ(q.size(), 2u);
  std::vector<MultiPoly<Rational>> expected{Y("y0*y6 - y3^2"), Y("y3^2 - y1*y5")};
  EXPECT_TRUE(in_span(q, expected));
  EXPECT_TRUE(in_span(expected, q));
  EXPECT_FALSE(in_span({Y("y0*y6")}, q));
  auto ev = curve_evaluation_map(g, 2);
  EXPECT_EQ(ev.matrix.rows(), 13u);
  EXPECT_EQ(ev.matrix.cols(), 15u);
  EXPECT_EQ(rank(ev.matrix.transpose()), 13u);
}

TEST(GradedIdeals, GammaSpansP4) { EXPECT_TRUE(forms_through_curve(mono({0, 1, 3, 5, 6}), 1).empty()); }

TEST(GradedIdeals, CubicsThroughGamma) {
  std::vector<unsigned> e{0, 1, 3, 5, 6};
  auto c = forms_through_curve(mono(e), 3);
  EXPECT_EQ(c.size(), 35u - distinct_sums(e, 3));
  EXPECT_EQ(c.size(), 16u);
}

TEST(GradedIdeals, QuadraticNormality) {
  auto good = is_quadratically_normal(mono({0, 1, 3, 5, 6}));
  EXPECT_TRUE(good.normal);
  EXPECT_EQ(good.kernel_dim, 2u);
  for (std::vector<unsigned> e : {std::vector<unsigned>{0, 1, 2, 5, 6}, std::vector<unsigned>{0, 1, 4, 5, 6}}) {
    auto bad = is_quadratically_normal(mono(e));
    EXPECT_FALSE(bad.normal);
    EXPECT_EQ(bad.rank, distinct_sums(e, 2));
    EXPECT_EQ(bad.rank, 12u);
    EXPECT_EQ(bad.kernel_dim, 3u);
  }
}

TEST(GradedIdeals, QuadricThroughBoundarySurface) {
  auto q = forms_through_surface(boundary_surface(), 2);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_TRUE(in_span({Z("1764*z3*z9 - 784*z4*z8 + 125*z6^2")}, q));
}

TEST(GradedIdeals, QuinticThroughBoundarySurface) {
  auto s = boundary_surface();
  auto quintic = Z("32*z4^2*z6*z8^2 - 630*z3^2*z8^3 + 81*z3*z4*z6*z8*z9 - 630*z4^3*z9^2 + 2187*z3^2*z6*z9^2");
  EXPECT_TRUE(poly_substitute(quintic, s.coords).is_zero());
  auto f5 = forms_through_surface(s, 5);
  EXPECT_TRUE(in_span({quintic}, f5));
  // The quadric times all cubics accounts for 35 of them; the quintic is new.
  auto quad = Z("1764*z3*z9 - 784*z4*z8 + 125*z6^2");
  std::vector<MultiPoly<Rational>> multiples;
  for (const auto& e : monomials_of_degree(5, 3)) multiples.push_back(quad * MultiPoly<Rational>::monomial(e, Rational(1)));
  EXPECT_FALSE(in_span({quintic}, multiples));
  EXPECT_GT(f5.size(), multiples.size());
}

TEST(GradedIdeals, QuadricsThroughQuarticSurface) {
  auto q = forms_through_surface(quartic_surface(), 2);
  ASSERT_EQ(q.size(), 2u);
  std::vector<MultiPoly<Rational>> pencil{Y("y0*y6 - y3^2"), Y("y3^2 - y1*y5")};
  EXPECT_TRUE(in_span(q, pencil));
  EXPECT_TRUE(in_span(pencil, q));
}

TEST(GradedIdeals, SecancyOfCoordinateLines) {
  auto g = mono({0, 1, 3, 5, 6});
  auto l01 = LinearSubspace<Rational>::from_points(5, {ProjPoint<Rational>::basis(4, 0), ProjPoint<Rational>::basis(4, 1)});
  EXPECT_EQ(*multisecant_degree(g, l01), 3u);
  auto l16 = LinearSubspace<Rational>::from_forms({Y("y0"), Y("y3"), Y("y5")});
  EXPECT_EQ(*multisecant_degree(g, l16), 1u);
}

TEST(GradedIdeals, FourTangentLineOfNonNormalCurve) {
  // Oracle: <P_i, P_j> cuts the monomial curve in t0^(6 - max) t1^(min) over
  // the three complementary exponents.
  std::vector<unsigned> e{0, 1, 2, 5, 6};
  auto sec = coordinate_line_secancy(mono(e));
  ASSERT_EQ(sec.size(), 10u);
  unsigned best = 0;
  for (const auto& s : sec) {
    std::vector<unsigned> rest;
    for (std::size_t k = 0; k < 5; ++k) {
      if (k != s.i && k != s.j) rest.push_back(e[k]);
    }
    EXPECT_EQ(s.degree, 6 - *std::max_element(rest.begin(), rest.end()) + *std::min_element(rest.begin(), rest.end()));
    best = std::max(best, s.degree);
  }
  EXPECT_GE(best, 4u);
  // The maximum sits on <P5, P6> = {y0 = y1 = y2 = 0}.
  auto it = std::max_element(sec.begin(), sec.end(), [](auto& a, auto& b) { return a.degree < b.degree; });
  EXPECT_EQ(it->i, 3u);
  EXPECT_EQ(it->j, 4u);
}

TEST(GradedIdealsProperty, RankNullityAndVanishing) {
  Gen g;
  for (int i = 0; i < kPropertyCases; ++i) {
    auto c = random_curve(g);
    auto d = static_cast<unsigned>(g.integer(1, 2));
    auto ev = curve_evaluation_map(c, d);
    auto forms = forms_through_curve(c, d);
    ASSERT_EQ(forms.size() + ev.rank(), monomials_of_degree(5, d).size());
    for (const auto& f : forms) ASSERT_TRUE(poly_substitute(f, c.images()).is_zero());
  }
}

TEST(GradedIdealsProperty, IdealIsClosedUnderMultiplication) {
  Gen g;
  for (int i = 0; i < kPropertyCases; ++i) {
    auto c = random_curve(g);
    auto q = forms_through_curve(c, 2);
    if (q.empty()) continue;
    auto f = q[static_cast<std::size_t>(g.integer(0, static_cast<long>(q.size()) - 1))];
    auto y = MultiPoly<Rational>::variable(5, static_cast<std::size_t>(g.integer(0, 4)));
    // Membership in the degree-3 piece is vanishing on the curve.
    ASSERT_TRUE(poly_substitute(f * y, c.images()).is_zero());
  }
  auto gm = mono({0, 1, 3, 5, 6});
  auto q = forms_through_curve(gm, 2);
  auto c3 = forms_through_curve(gm, 3);
  for (const auto& f : q) {
    for (std::size_t v = 0; v < 5; ++v) ASSERT_TRUE(in_span({f * MultiPoly<Rational>::variable(5, v)}, c3));
  }
}

TEST(GradedIdealsProperty, NormalCurvesHaveNoFourSecantCoordinateLine) {
  Gen g;
  int normal = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    auto c = random_curve(g);
    if (!is_quadratically_normal(c).normal) continue;
    ++normal;
    for (const auto& s : coordinate_line_secancy(c)) ASSERT_LE(s.degree, 3u);
  }
  EXPECT_GT(normal, 0);
}
