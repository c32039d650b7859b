#include "fanotk/mu_pipeline.hpp"

#include <algorithm>
#include <random>

namespace fanotk::mu {

namespace {

const std::vector<unsigned> kZIndex{3, 4, 6, 8, 9};
const std::vector<unsigned> kGammaExp{0, 1, 3, 5, 6};

MultiPoly<Rational> Y(const std::string& s) { return parse_poly<Rational>(s, y_names()); }
MultiPoly<Rational> Z(const std::string& s) { return parse_poly<Rational>(s, z_names()); }

const QuadExt& phi() {
  static const QuadExt v = QuadExt::golden();
  return v;
}

MultiPoly<QuadExt> var(std::size_t n, std::size_t i) { return MultiPoly<QuadExt>::variable(n, i); }

ProjPoint<Rational> P(std::size_t i) { return ProjPoint<Rational>::basis(4, i); }

// Coordinate line <P_i, P_j> as a subspace.
LinearSubspace<Rational> coordinate_line(std::size_t i, std::size_t j) {
  return LinearSubspace<Rational>::from_points(5, {P(i), P(j)});
}

std::string line_name(std::size_t i, std::size_t j) {
  return "<P" + std::to_string(kGammaExp[i]) + ", P" + std::to_string(kGammaExp[j]) + ">";
}

// Substitutes a and b (variables 0, 1 of the surface ring) by polynomials in
// the target ring.
std::vector<MultiPoly<QuadExt>> substitute_params(const ParamSurface<Rational>& s,
                                                  const std::vector<MultiPoly<QuadExt>>& ab) {
  std::vector<MultiPoly<QuadExt>> out;
  for (const auto& c : s.coords) out.push_back(poly_substitute(promote(c), ab));
  return out;
}

// Common factor k with lhs_i = k * t^3 * rhs_i for every i; throws otherwise.
QuadExt proportionality(const std::vector<MultiPoly<QuadExt>>& lhs, const ParamCurve<QuadExt>& curve,
                        const char* what) {
  std::optional<QuadExt> k;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    // Affine curve coordinate d_i t^(e_i), shifted by t^3.
    MultiPoly<QuadExt> rhs(1);
    for (const auto& [e, c] : curve.forms()[i].poly().terms()) rhs.add_term({e[1] + 3}, c);
    if (lhs[i].size() != 1 || rhs.size() != 1 || lhs[i].leading_exponents() != rhs.leading_exponents()) {
      throw Error(std::string(what) + ": coordinate " + std::to_string(i) + " has the wrong shape");
    }
    QuadExt ki = lhs[i].leading_coefficient() / rhs.leading_coefficient();
    if (k && *k != ki) throw Error(std::string(what) + ": coordinates are not proportional");
    k = ki;
  }
  return *k;
}

}  // namespace

const VarNames& y_names() {
  static const VarNames v{"y0", "y1", "y3", "y5", "y6"};
  return v;
}
const VarNames& z_names() {
  static const VarNames v{"z3", "z4", "z6", "z8", "z9"};
  return v;
}
const WeightVector& y_weights() {
  static const WeightVector w{{0, 1, 3, 5, 6}};
  return w;
}
const WeightVector& z_weights() {
  static const WeightVector w{{-3, -2, 0, 2, 3}};
  return w;
}

MultiPoly<Rational> q0() { return Y("y0*y6 - y3^2"); }
MultiPoly<Rational> qinf() { return Y("y3^2 - y1*y5"); }

ParamCurve<Rational> gamma_curve() { return ParamCurve<Rational>::monomial(6, kGammaExp); }

QuadricPencil<Rational> gamma_pencil() { return QuadricPencil<Rational>::from_polys(q0(), qinf()); }

ParamSurface<Rational> quotient_surface() {
  std::vector<MultiPoly<Rational>> coords;
  for (const char* s : {"1", "w1^2", "w1*w2", "w2^2", "w1^2*w2^2"}) {
    coords.push_back(parse_poly<Rational>(s, {"w1", "w2"}));
  }
  return ParamSurface<Rational>(WeightedProjSpace(y_names(), y_weights()), {"w1", "w2"}, std::move(coords));
}

MultiPoly<Rational> reference_mu_quadric() { return Z("1764*z3*z9 - 784*z4*z8 + 125*z6^2"); }

MultiPoly<Rational> reference_quintic() {
  return Z("32*z4^2*z6*z8^2 - 630*z3^2*z8^3 + 81*z3*z4*z6*z8*z9 - 630*z4^3*z9^2 + 2187*z3^2*z6*z9^2");
}

MultiPoly<Rational> primitive_integer(const MultiPoly<Rational>& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1, g = 0;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  for (const auto& [e, c] : p.terms()) {
    mpz_class n = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(l, g);
  if (p.leading_coefficient().sign() < 0) scale = -scale;
  return p * scale;
}

BoundarySurfaceParam build_boundary_param() {
  // Ring (x, y, a, b).
  auto x = MultiPoly<Rational>::variable(4, 0), y = MultiPoly<Rational>::variable(4, 1);
  auto a = MultiPoly<Rational>::variable(4, 2), b = MultiPoly<Rational>::variable(4, 3);
  auto f = (x + a * y) * (x + b * y).pow(11);

  std::vector<MultiPoly<Rational>> coords;
  for (unsigned i : kZIndex) {
    MultiPoly<Rational> z(2);
    for (const auto& [e, c] : f.terms()) {
      if (e[1] == i) z.add_term({e[2], e[3]}, c);
    }
    coords.push_back(std::move(z));
  }

  auto A = MultiPoly<Rational>::variable(2, 0), B = MultiPoly<Rational>::variable(2, 1);
  auto k = [](long v) { return Rational(v); };
  const std::vector<MultiPoly<Rational>> closed{
      k(55) * (A + k(3) * B) * B.pow(2), k(165) * (A + k(2) * B) * B.pow(3), k(462) * (A + B) * B.pow(5),
      k(165) * (k(2) * A + B) * B.pow(7), k(55) * (k(3) * A + B) * B.pow(8)};
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (!(coords[i] == closed[i])) {
      throw Error("boundary coordinate z" + std::to_string(kZIndex[i]) + " disagrees with its closed form");
    }
  }

  BoundarySurfaceParam out{ParamSurface<Rational>(WeightedProjSpace(z_names(), z_weights()), {"a", "b"}, coords),
                           {},
                           Rational(0),
                           {},
                           Rational(0)};

  // Binomials from (x + y)^11 in the (x, y) ring.
  auto xy = (MultiPoly<Rational>::variable(2, 0) + MultiPoly<Rational>::variable(2, 1)).pow(11);
  const std::array<unsigned, 3> ks{2, 3, 5};
  for (std::size_t i = 0; i < 3; ++i) {
    Rational c = xy.coefficient({11 - ks[i], ks[i]});
    if (!c.is_integer()) throw Error("binomial coefficient is not an integer");
    out.binomials[i] = c.num().get_si();
  }

  auto X = MultiPoly<Rational>::variable(2, 0), Yv = MultiPoly<Rational>::variable(2, 1);
  auto phi12 = X * Yv * (X.pow(10) + Rational(11) * X.pow(5) * Yv.pow(5) + Yv.pow(10));
  out.z6_at_phi12 = phi12.coefficient({6, 6});

  const std::vector<Rational> one{Rational(1), Rational(1)};
  const std::array<long, 5> sextic{20, 45, 84, 45, 20};
  for (std::size_t i = 0; i < coords.size(); ++i) out.diagonal.push_back(coords[i].evaluate(one));
  out.diagonal_factor = out.diagonal[0] / Rational(sextic[0]);
  for (std::size_t i = 0; i < 5; ++i) {
    if (out.diagonal[i] != out.diagonal_factor * Rational(sextic[i])) {
      throw Error("diagonal coefficients are not proportional to the sextic");
    }
  }
  return out;
}

UniqueQuadric unique_quadric_through_boundary(const BoundarySurfaceParam& p) {
  auto ev = surface_evaluation_map(p.surface, 2);
  UniqueQuadric out;
  out.source_dim = ev.source.size();
  out.rank = ev.rank();
  auto forms = forms_through_surface(p.surface, 2);
  out.kernel_dim = forms.size();
  if (forms.size() != 1) throw Error("expected exactly one quadric through the boundary surface");
  out.quadric = primitive_integer(forms[0]);
  out.vanishes_on_surface = poly_substitute(out.quadric, p.surface.coords).is_zero();
  return out;
}

GammaImage gamma_image_over_extension(const BoundarySurfaceParam& p) {
  const QuadExt f2 = phi() * phi();
  const QuadExt one(1);
  const std::array<QuadExt, 5> display{QuadExt(5) * (QuadExt(3) - f2), QuadExt(15) * (QuadExt(2) - f2),
                                       QuadExt(42) * (one - f2), QuadExt(15) * (one - QuadExt(2) * f2),
                                       QuadExt(5) * (one - QuadExt(3) * f2)};
  std::vector<BinaryForm<QuadExt>> forms;
  for (std::size_t i = 0; i < 5; ++i) {
    forms.push_back(BinaryForm<QuadExt>::monomial(6 - kGammaExp[i], kGammaExp[i], display[i]));
  }
  GammaImage out{ParamCurve<QuadExt>(WeightedProjSpace(z_names(), z_weights()), forms), QuadExt(0), QuadExt(0),
                 false};

  auto t = var(1, 0);
  out.first_factor = proportionality(substitute_params(p.surface, {-f2 * t, t}), out.curve, "first branch");
  out.second_factor = proportionality(substitute_params(p.surface, {t, -f2 * t}), out.curve, "second branch");

  auto a = var(2, 0), b = var(2, 1);
  auto lhs = a * a + QuadExt(3) * a * b + b * b;
  auto rhs = (a + f2 * b) * (a + f2.inverse() * b);
  out.conic_residue_factors = lhs == rhs;
  return out;
}

CoordinateChange coordinate_change_from(const ParamCurve<QuadExt>& image) {
  auto g = gamma_curve();
  if (image.forms().size() != 5 || image.degree() != g.degree()) throw ArityMismatch("image is not a sextic in P^4");
  CoordinateChange out;
  for (std::size_t i = 0; i < 5; ++i) {
    Matrix<QuadExt> m(g.degree() + 1, 1);
    Vec<QuadExt> rhs;
    for (unsigned k = 0; k <= g.degree(); ++k) {
      m(k, 0) = QuadExt(g.forms()[i].coeff(k));
      rhs.push_back(image.forms()[i].coeff(k));
    }
    auto sol = solve_linear(m, rhs);
    if (!sol || (*sol)[0].is_zero()) throw Error("image coordinate is not a multiple of the sextic coordinate");
    out.c[i] = (*sol)[0];
  }
  return out;
}

CoordinateChange reference_coordinate_change() {
  const QuadExt f2 = phi() * phi();
  const QuadExt one(1);
  return {{QuadExt(5) * (QuadExt(3) - f2), QuadExt(15) * (QuadExt(2) - f2), QuadExt(42) * (one - f2),
           QuadExt(15) * (one - QuadExt(2) * f2), QuadExt(5) * (one - QuadExt(3) * f2)}};
}

MuIdentification identify_mu_quadric(const MultiPoly<Rational>& z_quadric, const CoordinateChange& change) {
  std::vector<MultiPoly<QuadExt>> images;
  for (std::size_t i = 0; i < 5; ++i) images.push_back(change.c[i] * var(5, i));
  auto sub = poly_substitute(promote(z_quadric), images);
  if (sub.is_zero()) throw Error("substituted quadric vanishes");

  // Divide by the first coefficient; the rest must be rational.
  const QuadExt lead = sub.leading_coefficient();
  MultiPoly<Rational> normalized(5);
  for (const auto& [e, c] : sub.terms()) {
    auto r = (c / lead).as_rational();
    if (!r) throw Error("substituted quadric is not a multiple of a rational quadric");
    normalized.add_term(e, *r);
  }
  auto pencil = gamma_pencil();
  auto u = express_in_pencil(pencil, QuadricForm<Rational>::from_poly(normalized));
  if (!u) throw Error("substituted quadric is not in the pencil");
  auto [u0, u1] = pencil_pair(*u);
  auto target = u0 * q0() + u1 * qinf();
  QuadExt factor = lead / QuadExt(target.coefficient(sub.leading_exponents()));
  if (!(sub == promote(target) * factor)) throw Error("common factor extraction failed");

  MuIdentification out{change, sub, target, factor, *u, false};
  out.vanishes_on_gamma = poly_substitute(target, gamma_curve().images()).is_zero();
  return out;
}

bool BoundarySingularityCertificate::ok() const {
  return quintic_on_surface && quadric_on_surface && diagonal_is_sextic && sample_rank == 2 &&
         std::all_of(loci.begin(), loci.end(), [](const auto& l) { return l.singular; }) && loci.size() == 4;
}

BoundarySingularityCertificate verify_boundary_singularities(const BoundarySurfaceParam& p, const GammaImage& g,
                                      const MultiPoly<Rational>& quintic) {
  BoundarySingularityCertificate out;
  const auto quadric = reference_mu_quadric();
  out.quintic_on_surface = poly_substitute(quintic, p.surface.coords).is_zero();
  out.quadric_on_surface = poly_substitute(quadric, p.surface.coords).is_zero();
  const std::vector<MultiPoly<Rational>> eqs{quadric, quintic};

  auto s = MultiPoly<Rational>::variable(2, 0), t = MultiPoly<Rational>::variable(2, 1);
  MultiPoly<Rational> zero(2);
  auto check = [&](const std::string& name, const auto& equations, const auto& images) {
    auto cert = singular_on_family(equations, images, 2);
    out.loci.push_back({name, cert.singular, cert.minors_checked});
  };
  check("{z9 = z8 = z6 = 0}", eqs, std::vector<MultiPoly<Rational>>{s, t, zero, zero, zero});
  check("{z6 = z4 = z3 = 0}", eqs, std::vector<MultiPoly<Rational>>{zero, zero, zero, s, t});
  check("sextic over Q(sqrt5)", std::vector<MultiPoly<QuadExt>>{promote(quadric), promote(quintic)},
        g.curve.images());

  std::vector<BinaryForm<Rational>> diag_forms;
  const std::array<long, 5> sextic{20, 45, 84, 45, 20};
  for (std::size_t i = 0; i < 5; ++i) {
    diag_forms.push_back(BinaryForm<Rational>::monomial(6 - kGammaExp[i], kGammaExp[i], Rational(sextic[i])));
  }
  ParamCurve<Rational> diag(WeightedProjSpace(z_names(), z_weights()), diag_forms);
  check("diagonal sextic", eqs, diag.images());

  // The line a = b maps to t^3 times the diagonal sextic, up to a constant.
  auto tt = MultiPoly<Rational>::variable(1, 0);
  out.diagonal_is_sextic = true;
  std::optional<Rational> k;
  for (std::size_t i = 0; i < 5; ++i) {
    auto zi = poly_substitute(p.surface.coords[i], std::vector<MultiPoly<Rational>>{tt, tt});
    auto expect = MultiPoly<Rational>::monomial({kGammaExp[i] + 3}, Rational(sextic[i]));
    if (zi.size() != 1 || zi.leading_exponents() != expect.leading_exponents()) {
      out.diagonal_is_sextic = false;
      break;
    }
    Rational ki = zi.leading_coefficient() / Rational(sextic[i]);
    if (k && *k != ki) out.diagonal_is_sextic = false;
    k = ki;
  }
  out.diagonal_factor = k.value_or(Rational(0));

  std::vector<Rational> ab{Rational(1), Rational(2)};
  for (const auto& c : p.surface.coords) out.sample_point.push_back(c.evaluate(ab));
  ProjPoint<Rational> pt(out.sample_point);
  out.sample_rank = jacobian_rank_at(eqs, pt);
  std::vector<MultiPoly<Rational>> constant;
  for (const auto& v : out.sample_point) constant.push_back(MultiPoly<Rational>::constant(1, v));
  auto cert = singular_on_family(eqs, constant, 2);
  if (cert.witness_minor) {
    out.sample_minor = "rows {" + std::to_string(cert.witness_rows[0]) + "," + std::to_string(cert.witness_rows[1]) +
                       "} cols {" + z_names()[cert.witness_cols[0]] + "," + z_names()[cert.witness_cols[1]] +
                       "} = " + cert.witness_minor->leading_coefficient().to_compact_string();
  }
  return out;
}

bool SurfaceFCertificate::ok() const {
  return on_both_quadrics && sign_invariant && singular_points.size() == 4 && contained_lines.size() == 4 &&
         gamma_through_p0_p6 && gamma_misses_p1_p5 && divisor_01 == "3*(1/1 : 0/1)" &&
         divisor_65 == "3*(0/1 : 1/1)" && resultant_degree == 8 && resultant_squarefree && map_degree == 2 &&
         degree == 4;
}

SurfaceFCertificate verify_surface_F() {
  SurfaceFCertificate out;
  const auto F = quotient_surface();
  const auto gens = std::vector<MultiPoly<Rational>>{q0(), qinf()};
  out.on_both_quadrics = poly_substitute(q0(), F.coords).is_zero() && poly_substitute(qinf(), F.coords).is_zero();

  auto w1 = MultiPoly<Rational>::variable(2, 0), w2 = MultiPoly<Rational>::variable(2, 1);
  out.sign_invariant = true;
  for (const auto& c : F.coords) {
    if (!(poly_substitute(c, std::vector<MultiPoly<Rational>>{-w1, -w2}) == c)) out.sign_invariant = false;
  }

  // P0, P1, P5, P6 sit at indices 0, 1, 3, 4.
  for (std::size_t i : {0u, 1u, 3u, 4u}) {
    if (point_membership(P(i), gens) && jacobian_rank_at(gens, P(i)) < 2) {
      out.singular_points.push_back(P(i).to_string());
    }
  }
  for (auto [i, j] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 4}, {4, 3}, {3, 0}}) {
    auto r = restrict_to_line(gens, coordinate_line(i, j));
    if (r[0].is_zero() && r[1].is_zero()) out.contained_lines.push_back(line_name(i, j));
  }

  auto g = gamma_curve();
  out.gamma_through_p0_p6 = point_membership(P(0), g) && point_membership(P(4), g);
  out.gamma_misses_p1_p5 = !point_membership(P(1), g) && !point_membership(P(3), g);
  auto d01 = intersection_divisor(g, coordinate_line(0, 1).cutting_forms());
  auto d65 = intersection_divisor(g, coordinate_line(4, 3).cutting_forms());
  out.divisor_01 = d01.ok() ? d01->to_string() : "contained";
  out.divisor_65 = d65.ok() ? d65->to_string() : "contained";

  // Bihomogeneous form of the parametrization on P^1 x P^1, ring (s0, s1, t0, t1).
  std::vector<MultiPoly<Rational>> bi;
  for (const char* s : {"s0^2*t0^2", "s1^2*t0^2", "s0*s1*t0*t1", "s0^2*t1^2", "s1^2*t1^2"}) {
    bi.push_back(parse_poly<Rational>(s, {"s0", "s1", "t0", "t1"}));
  }
  std::mt19937_64 rng(0x5eed'f00dULL);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (;;) {
    ++out.hyperplane_draws;
    std::array<MultiPoly<Rational>, 2> h{MultiPoly<Rational>(5), MultiPoly<Rational>(5)};
    for (auto& hk : h) {
      for (std::size_t i = 0; i < 5; ++i) {
        Exponents e(5, 0);
        e[i] = 1;
        hk.add_term(std::move(e), Rational(coef(rng)));
      }
    }
    // Avoid the four fixed points of the deck involution.
    bool avoids = true;
    for (std::size_t i : {0u, 1u, 3u, 4u}) {
      avoids = avoids && !h[0].evaluate(P(i).coords()).is_zero() && !h[1].evaluate(P(i).coords()).is_zero();
    }
    if (!avoids) continue;
    // Coefficients in t of the pulled-back (2,2)-forms, as forms in s.
    std::vector<std::vector<MultiPoly<Rational>>> co(2, std::vector<MultiPoly<Rational>>(3, MultiPoly<Rational>(2)));
    for (std::size_t k = 0; k < 2; ++k) {
      auto pulled = poly_substitute(h[k], bi);
      for (const auto& [e, c] : pulled.terms()) co[k][e[3]].add_term({e[0], e[1]}, c);
    }
    MultiPoly<Rational> zero(2);
    std::vector<std::vector<MultiPoly<Rational>>> syl{{co[0][0], co[0][1], co[0][2], zero},
                                                      {zero, co[0][0], co[0][1], co[0][2]},
                                                      {co[1][0], co[1][1], co[1][2], zero},
                                                      {zero, co[1][0], co[1][1], co[1][2]}};
    auto res = detail::poly_det(syl, 2);
    if (res.is_zero()) continue;
    auto form = BinaryForm<Rational>::from_poly(res);
    auto div = squarefree_and_roots(form);
    if (form.degree() != 8 || !div.is_squarefree()) continue;
    out.resultant_degree = form.degree();
    out.resultant_squarefree = true;
    for (const auto& hk : h) out.hyperplanes.push_back(to_string(hk, y_names()));
    break;
  }

  // Fibers over sample image points: solutions of w1^2 = y1, w2^2 = y5, w1 w2 = y3.
  for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 3}, {1, 5}, {-3, 7}}) {
    std::vector<Rational> img;
    for (const auto& c : F.coords) img.push_back(c.evaluate(std::vector<Rational>{Rational(a), Rational(b)}));
    std::size_t count = 0;
    auto r1 = img[1].sqrt(), r2 = img[3].sqrt();
    if (r1 && r2) {
      for (const Rational& x : {*r1, -*r1}) {
        for (const Rational& y : {*r2, -*r2}) {
          if (x * y == img[2]) ++count;
        }
      }
    }
    out.fiber_sizes.push_back(count);
  }
  out.map_degree = std::all_of(out.fiber_sizes.begin(), out.fiber_sizes.end(), [](auto n) { return n == 2; }) ? 2 : 0;
  out.degree = out.map_degree ? out.resultant_degree / out.map_degree : 0;
  return out;
}

bool PlaneFamilyCertificate::ok() const {
  return q1_is_sum && vertex == "(0/1 : 0/1 : 1/1 : 0/1 : 0/1)" && vertex_off_F && plane_in_q1 &&
         plane_pullback_identity && plane_contains_vertex && samples.size() == 2 &&
         std::all_of(samples.begin(), samples.end(), [](const auto& s) {
           return s.degree == 5 && s.squarefree && s.misses_l01 && s.misses_l65;
         });
}

PlaneFamilyCertificate verify_plane_family() {
  PlaneFamilyCertificate out;
  auto q1 = q0() + qinf();
  out.q1 = to_string(q1, y_names());
  out.q1_is_sum = q1 == Y("y0*y6 - y1*y5");
  auto loc = quadric_singular_locus(QuadricForm<Rational>::from_poly(q1));
  out.vertex = loc.dimension() == 0 ? loc.points()[0].to_string() : "not a point";
  out.vertex_off_F = !point_membership(P(2), std::vector<MultiPoly<Rational>>{q0(), qinf()});

  // Ring (y0, y1, y3, lambda): the plane is y5 = lambda y0, y6 = lambda y1.
  auto v = [](std::size_t i) { return MultiPoly<Rational>::variable(4, i); };
  std::vector<MultiPoly<Rational>> plane{v(0), v(1), v(2), v(3) * v(0), v(3) * v(1)};
  out.plane_in_q1 = poly_substitute(q1, plane).is_zero();

  // Ring (t0, t1, lambda).
  auto u = [](std::size_t i) { return MultiPoly<Rational>::variable(3, i); };
  std::vector<MultiPoly<Rational>> gam;
  for (unsigned e : kGammaExp) gam.push_back(u(0).pow(6 - e) * u(1).pow(e));
  auto core = u(1).pow(5) - u(2) * u(0).pow(5);
  out.plane_pullback_identity = gam[3] - u(2) * gam[0] == u(0) * core && gam[4] - u(2) * gam[1] == u(1) * core;
  out.plane_contains_vertex = true;  // both cutting forms omit y3

  // Plane meets l01 = {y3 = y5 = y6 = 0} and l65 = {y0 = y1 = y3 = 0}: 5x5
  // systems with entries in lambda.
  auto lam = MultiPoly<Rational>::variable(1, 0);
  auto c = [](long k) { return MultiPoly<Rational>::constant(1, Rational(k)); };
  const std::vector<MultiPoly<Rational>> row_a{-lam, c(0), c(0), c(1), c(0)};
  const std::vector<MultiPoly<Rational>> row_b{c(0), -lam, c(0), c(0), c(1)};
  auto unit = [&](std::size_t i) {
    std::vector<MultiPoly<Rational>> r(5, c(0));
    r[i] = c(1);
    return r;
  };
  auto d01 = detail::poly_det<Rational>({row_a, row_b, unit(2), unit(3), unit(4)}, 1);
  auto d65 = detail::poly_det<Rational>({row_a, row_b, unit(0), unit(1), unit(2)}, 1);
  out.det_plane_l01 = to_string(d01, {"lambda"});
  out.det_plane_l65 = to_string(d65, {"lambda"});

  auto g = gamma_curve();
  for (long l : {2L, 3L}) {
    PlaneFamilyCertificate::Sample s;
    s.lambda = l;
    auto cut = std::vector<MultiPoly<Rational>>{Y("y5") - Rational(l) * Y("y0"), Y("y6") - Rational(l) * Y("y1")};
    auto d = intersection_divisor(g, cut);
    if (d.ok()) {
      s.divisor = d->to_string();
      s.degree = d->degree();
      s.squarefree = d->is_squarefree();
    }
    auto meet = [&](std::vector<MultiPoly<Rational>> forms) {
      forms.insert(forms.end(), cut.begin(), cut.end());
      return LinearSubspace<Rational>::from_forms(forms).is_empty();
    };
    s.misses_l01 = meet({Y("y3"), Y("y5"), Y("y6")});
    s.misses_l65 = meet({Y("y0"), Y("y1"), Y("y3")});
    out.samples.push_back(s);
  }
  return out;
}

bool ConicOrbitCertificate::ok() const {
  return linear_relations == 1 && contains_expected_quadric && shifted_coordinate_vanishes;
}

ConicOrbitCertificate verify_conic_orbit() {
  const VarNames names{"z1", "z6", "z11", "zbar"};
  std::vector<BinaryForm<Rational>> forms{BinaryForm<Rational>::monomial(2, 0),
                                          BinaryForm<Rational>::monomial(1, 1, Rational(11)),
                                          BinaryForm<Rational>::monomial(0, 2), BinaryForm<Rational>::monomial(1, 1)};
  ParamCurve<Rational> c(WeightedProjSpace(names, WeightVector{{-5, 0, 5, 0}}), forms);
  ConicOrbitCertificate out;
  auto lin = forms_through_curve(c, 1);
  auto quad = forms_through_curve(c, 2);
  out.linear_relations = lin.size();
  // Quadrics modulo multiples of the linear relations.
  out.quadric_relations = quad.size() - lin.size() * 4;
  out.contains_expected_quadric = in_span({parse_poly<Rational>("z1*z11 - zbar^2", names)}, quad);
  out.shifted_coordinate_vanishes = in_span({parse_poly<Rational>("z6 - 11*zbar", names)}, lin);
  return out;
}

bool WeightCertificate::ok() const {
  return z_weights == std::vector<long>{-3, -2, 0, 2, 3} && quadric_weight == 0 && quintic_weight == 0 &&
         surface_equivariant;
}

WeightCertificate verify_weights(const BoundarySurfaceParam& p, const MultiPoly<Rational>& quadric) {
  WeightCertificate out;
  // Coefficient of x^(12-i) y^i has weight (i - (12 - i)) / 2.
  for (unsigned i : kZIndex) out.z_weights.push_back((static_cast<long>(i) - (12 - static_cast<long>(i))) / 2);
  WeightVector w{out.z_weights};
  out.quadric_weight = torus_weight(quadric, w).value_or(-999);
  out.quintic_weight = torus_weight(reference_quintic(), w).value_or(-999);
  // z_i(l a, l b) = l^i z_i(a, b).
  out.surface_equivariant = true;
  for (std::size_t k = 0; k < p.surface.coords.size(); ++k) {
    auto d = p.surface.coords[k].homogeneous_degree();
    if (!d || static_cast<long>(*d) != out.z_weights[k] + 6) out.surface_equivariant = false;
  }
  return out;
}

}  // namespace fanotk::mu
