#include <algorithm>

#include "fanotk/blowup.hpp"
#include "fanotk/mu_pipeline.hpp"
#include "fanotk/report.hpp"

namespace fanotk::report {

namespace {

using namespace fanotk::mu;

Outcome verdict(bool ok, Json w) { return {ok ? Status::Pass : Status::Fail, std::move(w)}; }

Json texts(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

Json poly_texts(const std::vector<MultiPoly<Rational>>& v, const VarNames& names) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(to_string(p, names));
  return a;
}

ParamCurve<Rational> curve(const std::vector<unsigned>& e) { return ParamCurve<Rational>::monomial(6, e); }

Outcome sextic_ideal() {
  auto forms = forms_through_curve(gamma_curve(), 2);
  const std::vector<MultiPoly<Rational>> gens{q0(), qinf()};
  bool ok = forms.size() == 2 && in_span(forms, gens) && in_span(gens, forms);
  return verdict(ok, {{"dimension", forms.size()},
                      {"basis", poly_texts(forms, y_names())},
                      {"generators", poly_texts(gens, y_names())},
                      {"mutual_membership", in_span(forms, gens) && in_span(gens, forms)}});
}

Outcome normality() {
  Json rows = Json::array();
  bool ok = true;
  for (const auto& [e, expect] : std::vector<std::pair<std::vector<unsigned>, bool>>{
           {{0, 1, 3, 5, 6}, true}, {{0, 1, 2, 5, 6}, false}, {{0, 1, 4, 5, 6}, false}}) {
    auto c = is_quadratically_normal(curve(e));
    ok = ok && c.normal == expect && (expect ? c.kernel_dim == 2 : c.kernel_dim == 3);
    rows.push_back({{"exponents", e},
                    {"normal", c.normal},
                    {"rank", c.rank},
                    {"target_dim", c.target_dim},
                    {"kernel_dim", c.kernel_dim}});
  }
  return verdict(ok, {{"curves", rows}});
}

Outcome discriminant() {
  auto p = gamma_pencil();
  auto disc = pencil_discriminant(p);
  auto sm = singular_members(p);
  Json members = Json::array();
  std::vector<std::pair<std::string, std::size_t>> got;
  if (sm.ok()) {
    for (const auto& m : sm->members) {
      members.push_back({{"u", pencil_affine_text(m.param)},
                         {"point", m.param.to_string()},
                         {"multiplicity", m.multiplicity},
                         {"corank", m.corank}});
      got.emplace_back(pencil_affine_text(m.param), m.corank);
    }
  }
  const std::vector<std::pair<std::string, std::size_t>> expect{{"inf", 2}, {"0/1", 2}, {"1/1", 1}};
  bool ok = sm.ok() && sm->residual.empty() && got == expect;
  return verdict(ok, {{"discriminant", disc.to_string({"u0", "u1"})}, {"singular_members", members}});
}

Outcome base_locus() {
  auto p = gamma_pencil();
  bool on_curve = base_locus_contains(p, gamma_curve());
  bool on_surface = base_locus_contains(p, quotient_surface());
  return verdict(on_curve && on_surface, {{"contains_sextic", on_curve}, {"contains_quotient_surface", on_surface}});
}

Outcome dimension(const std::string& name, long expect) {
  auto dc = dimension_count();
  long v = dc.value(name);
  Json w{{"name", name}, {"value", v}};
  if (dc.is_axiom(name)) return {Status::Axiom, w};
  return verdict(v == expect, w);
}

Outcome quadric_side() {
  const ThreefoldData q{2, 3, 6, 0};
  auto ring = blowup_ring(q);
  Json rows = Json::array();
  bool ok = true;
  for (long m : {1L, 2L, 3L}) {
    long v = triple_product(ring, {3, -1}, {3, -1}, {2, -m});
    ok = ok && v == 24 - 20 * m;
    rows.push_back({{"m", m}, {"value", v}});
  }
  return verdict(ok, {{"ring", {ring.h3, ring.h2e, ring.he2, ring.e3}},
                      {"class", DivClass{3, -1}.to_string()},
                      {"products", rows}});
}

Outcome fano_side() {
  const ThreefoldData x{22, 1, 2, 0};
  auto ring = blowup_ring(x);
  long v = triple_product(ring, {1, -1}, {1, -1}, kE);
  return verdict(v == 4, {{"ring", {ring.h3, ring.h2e, ring.he2, ring.e3}}, {"value", v}});
}

Outcome class_identity_check() {
  ClassCombination combo{{2, {1, -2}}, {-1, {2, -5}}};
  auto v = evaluate(combo);
  return verdict(class_identity(combo, kE), {{"lhs", "2(H' - 2E) - (2H' - 5E)"}, {"value", v.to_string()}});
}

Outcome pencil_weights() {
  auto p = gamma_pencil();
  Json rows = Json::array();
  bool ok = true;
  for (auto [u0, u1] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {1, 1}, {-1, 4}, {2, 3}}) {
    auto m = p.member(Rational(u0), Rational(u1)).to_poly();
    auto w = torus_weight(m, y_weights());
    ok = ok && w == 6;
    rows.push_back({{"u", std::to_string(u0) + ":" + std::to_string(u1)}, {"weight", w ? Json(*w) : Json()}});
  }
  return verdict(ok, {{"weights", y_weights().w}, {"members", rows}});
}

Outcome swap_symmetry() {
  bool q0_fixed = reverse_coordinates(q0()) == q0();
  bool qinf_fixed = reverse_coordinates(qinf()) == qinf();
  auto g = gamma_curve();
  bool curve_fixed = reverse_coordinates(g).forms() == g.forms();
  return verdict(q0_fixed && qinf_fixed && curve_fixed,
                 {{"q0_fixed", q0_fixed}, {"qinf_fixed", qinf_fixed}, {"sextic_fixed", curve_fixed}});
}

Outcome boundary_weights() {
  auto p = build_boundary_param();
  auto c = verify_weights(p, reference_mu_quadric());
  bool ok = c.ok() && p.z6_at_phi12 == Rational(11);
  return verdict(ok, {{"z_weights", c.z_weights},
                      {"quadric_weight", c.quadric_weight},
                      {"quintic_weight", c.quintic_weight},
                      {"surface_equivariant", c.surface_equivariant},
                      {"z6_at_phi12", p.z6_at_phi12.to_string()}});
}

Outcome boundary_surface() {
  auto p = build_boundary_param();
  return verdict(p.binomials == std::array<long, 3>{55, 165, 462},
                 {{"coordinates", poly_texts(p.surface.coords, {"a", "b"})},
                  {"binomials", p.binomials},
                  {"diagonal", texts(p.diagonal)},
                  {"diagonal_factor", p.diagonal_factor.to_string()}});
}

Outcome unique_quadric() {
  auto u = unique_quadric_through_boundary(build_boundary_param());
  bool ok = u.kernel_dim == 1 && u.vanishes_on_surface && u.quadric == reference_mu_quadric();
  return verdict(ok, {{"quadric", to_string(u.quadric, z_names())},
                      {"source_dim", u.source_dim},
                      {"rank", u.rank},
                      {"kernel_dim", u.kernel_dim}});
}

Outcome sextic_image() {
  auto g = gamma_image_over_extension(build_boundary_param());
  Json forms = Json::array();
  for (const auto& f : g.curve.forms()) forms.push_back(f.to_string());
  return verdict(g.conic_residue_factors, {{"curve", forms},
                                           {"first_factor", g.first_factor.to_string()},
                                           {"second_factor", g.second_factor.to_string()},
                                           {"conic_residue_factors", g.conic_residue_factors}});
}

Outcome coordinate_change() {
  auto c = coordinate_change_from(gamma_image_over_extension(build_boundary_param()).curve);
  auto r = reference_coordinate_change();
  Json a = Json::array();
  for (const auto& x : c.c) a.push_back(x.to_string());
  return verdict(c.c == r.c, {{"c", a}});
}

Outcome pencil_parameter() {
  auto u = unique_quadric_through_boundary(build_boundary_param());
  auto change = coordinate_change_from(gamma_image_over_extension(build_boundary_param()).curve);
  auto id = identify_mu_quadric(u.quadric, change);
  bool ok = pencil_pair_text(id.param) == "(-1:4)" && id.vanishes_on_gamma;
  return verdict(ok, {{"pair", pencil_pair_text(id.param)},
                      {"u", pencil_affine_text(id.param)},
                      {"rational_quadric", to_string(id.rational_quadric, y_names())},
                      {"factor", id.factor.to_string()}});
}

Outcome singular_loci() {
  auto p = build_boundary_param();
  auto c = verify_boundary_singularities(p, gamma_image_over_extension(p), reference_quintic());
  Json loci = Json::array();
  for (const auto& l : c.loci) loci.push_back({{"locus", l.name}, {"singular", l.singular}, {"minors", l.minors_checked}});
  return verdict(c.ok(), {{"quintic_on_surface", c.quintic_on_surface},
                          {"quadric_on_surface", c.quadric_on_surface},
                          {"loci", loci},
                          {"diagonal_is_sextic", c.diagonal_is_sextic},
                          {"diagonal_factor", c.diagonal_factor.to_string()},
                          {"sample_point", texts(c.sample_point)},
                          {"sample_rank", c.sample_rank},
                          {"sample_minor", c.sample_minor}});
}

Outcome surface_quadrics() {
  auto c = verify_surface_F();
  return verdict(c.on_both_quadrics && c.sign_invariant,
                 {{"on_both_quadrics", c.on_both_quadrics}, {"sign_invariant", c.sign_invariant}});
}

Outcome surface_points() {
  auto c = verify_surface_F();
  return verdict(c.singular_points.size() == 4, {{"singular_points", c.singular_points}});
}

Outcome surface_lines() {
  auto c = verify_surface_F();
  return verdict(c.contained_lines.size() == 4, {{"lines", c.contained_lines}});
}

Outcome surface_tangency() {
  auto c = verify_surface_F();
  bool ok = c.gamma_through_p0_p6 && c.gamma_misses_p1_p5 && c.divisor_01 == "3*(1/1 : 0/1)" &&
            c.divisor_65 == "3*(0/1 : 1/1)";
  return verdict(ok, {{"sextic_through_p0_p6", c.gamma_through_p0_p6},
                      {"sextic_misses_p1_p5", c.gamma_misses_p1_p5},
                      {"divisor_p0_p1", c.divisor_01},
                      {"divisor_p6_p5", c.divisor_65}});
}

Outcome surface_degree() {
  auto c = verify_surface_F();
  bool ok = c.resultant_degree == 8 && c.resultant_squarefree && c.map_degree == 2 && c.degree == 4;
  return verdict(ok, {{"hyperplanes", c.hyperplanes},
                      {"draws", c.hyperplane_draws},
                      {"resultant_degree", c.resultant_degree},
                      {"resultant_squarefree", c.resultant_squarefree},
                      {"fiber_sizes", c.fiber_sizes},
                      {"map_degree", c.map_degree},
                      {"degree", c.degree}});
}

Outcome plane_member() {
  auto c = verify_plane_family();
  return verdict(c.q1_is_sum && c.vertex == "(0/1 : 0/1 : 1/1 : 0/1 : 0/1)" && c.vertex_off_F,
                 {{"member", c.q1}, {"vertex", c.vertex}, {"vertex_off_surface", c.vertex_off_F}});
}

Outcome plane_identity() {
  auto c = verify_plane_family();
  return verdict(c.plane_in_q1 && c.plane_pullback_identity && c.plane_contains_vertex,
                 {{"plane_in_member", c.plane_in_q1},
                  {"pullback_identity", c.plane_pullback_identity},
                  {"contains_vertex", c.plane_contains_vertex}});
}

Outcome plane_meets_sextic() {
  auto c = verify_plane_family();
  Json rows = Json::array();
  bool ok = c.samples.size() == 2;
  for (const auto& s : c.samples) {
    ok = ok && s.degree == 5 && s.squarefree;
    rows.push_back({{"lambda", s.lambda}, {"divisor", s.divisor}, {"degree", s.degree}, {"squarefree", s.squarefree}});
  }
  return verdict(ok, {{"samples", rows}});
}

Outcome plane_misses_lines() {
  auto c = verify_plane_family();
  Json rows = Json::array();
  bool ok = !c.samples.empty();
  for (const auto& s : c.samples) {
    ok = ok && s.misses_l01 && s.misses_l65;
    rows.push_back({{"lambda", s.lambda}, {"misses_p0_p1", s.misses_l01}, {"misses_p6_p5", s.misses_l65}});
  }
  return verdict(ok, {{"det_p0_p1", c.det_plane_l01}, {"det_p6_p5", c.det_plane_l65}, {"samples", rows}});
}

Outcome conic_orbit() {
  auto c = verify_conic_orbit();
  return verdict(c.ok(), {{"linear_relations", c.linear_relations},
                          {"quadric_relations", c.quadric_relations},
                          {"contains_z1z11_minus_zbar2", c.contains_expected_quadric},
                          {"z6_minus_11zbar", c.shifted_coordinate_vanishes}});
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> r{
      {"sextic.ideal", "Quadrics through the monomial sextic form the pencil spanned by Q0 and Qinf",
       "sextic-ideal", sextic_ideal},
      {"sextic.normality", "Exponents (0,1,3,5,6) give a quadratically normal sextic; (0,1,2,5,6) and (0,1,4,5,6) do not",
       "quadratic-normality", normality},
      {"pencil.discriminant", "Singular members of the pencil sit at u = inf, 0, 1 with coranks 2, 2, 1",
       "pencil-discriminant", discriminant},
      {"pencil.base-locus", "Sextic and quotient surface lie in the base locus of the pencil", "pencil-base-locus",
       base_locus},
      {"dims.h0-hx", "h0(X, H_X) = 14", "dims-imported",
       [] { return dimension("h0(X, H_X)", 14); }},
      {"dims.h0-conic-o2", "h0(C, O_C(2)) = 3", "dims-imported",
       [] { return dimension("h0(C, O_C(2))", 3); }},
      {"dims.h0-conormal", "h0(C, I_C/I_C^2(2)) = 6", "dims-imported",
       [] { return dimension("h0(C, I_C/I_C^2(2))", 6); }},
      {"dims.singular-sections", "Hyperplane sections singular along the conic form a system of dimension >= 4",
       "dims-singular-sections", [] { return dimension("dim |H'_X - 2E_C| lower bound", 4); }},
      {"dims.quadrics-through-sextic", "Quadrics through the sextic form a pencil", "dims-quadrics",
       [] { return dimension("dim |I_Gamma(2)|", 1); }},
      {"blowup.quadric-side", "(3H' - E)^2 (2H' - mE) = 24 - 20m on the quadric blown up along the sextic",
       "blowup-quadric-side", quadric_side},
      {"blowup.fano-side", "(H' - E)^2 E = 4 on the threefold blown up along the conic", "blowup-fano-side",
       fano_side},
      {"blowup.class-identity", "2(H' - 2E) - (2H' - 5E) = E", "blowup-class-identity", class_identity_check},
      {"weights.pencil-members", "Every pencil member has torus weight 6", "torus-weights", pencil_weights},
      {"weights.coordinate-swap", "Q0, Qinf and the sextic are fixed by reversing coordinates", "coordinate-swap",
       swap_symmetry},
      {"weights.boundary-coordinates", "Boundary coordinates have weights (-3,-2,0,2,3) and z6(phi12, 1) = 11",
       "boundary-weights", boundary_weights},
      {"mu.boundary-surface", "Boundary coordinates expand to the closed forms in (a, b)", "mu-boundary-surface",
       boundary_surface},
      {"mu.unique-quadric", "1764 z3 z9 - 784 z4 z8 + 125 z6^2 is the only quadric through the boundary surface",
       "mu-unique-quadric", unique_quadric},
      {"mu.sextic-image", "Both branches over Q(sqrt5) map onto the same sextic", "mu-sextic-image", sextic_image},
      {"mu.coordinate-change", "The sextic image matches the monomial sextic after z_i = c_i y_i",
       "mu-coordinate-change", coordinate_change},
      {"mu.pencil-parameter", "The transported quadric is the pencil member u = -1/4", "mu-pencil-parameter",
       pencil_parameter},
      {"mu.singular-loci", "Quadric and quintic cut the boundary with two lines and two sextics in the singular locus",
       "mu-singular-loci", singular_loci},
      {"surface-f.quadrics", "The quotient parametrization lies on both generators and is sign invariant",
       "surface-f", surface_quadrics},
      {"surface-f.singular-points", "P0, P1, P5, P6 are singular points of the base surface", "surface-f",
       surface_points},
      {"surface-f.lines", "The base surface contains the four lines P0P1, P1P6, P6P5, P5P0", "surface-f",
       surface_lines},
      {"surface-f.tangency", "Lines P0P1 and P6P5 are 3-tangent to the sextic", "surface-f", surface_tangency},
      {"surface-f.degree", "The base surface has degree 4", "surface-f-degree", surface_degree},
      {"plane-family.member", "Q0 + Qinf = y0 y6 - y1 y5 is a cone with vertex P3 off the base surface",
       "plane-family", plane_member},
      {"plane-family.plane", "The planes y5 = l y0, y6 = l y1 lie on Q0 + Qinf for all l", "plane-family",
       plane_identity},
      {"plane-family.meets-sextic", "Each plane meets the sextic in 5 distinct points", "plane-family",
       plane_meets_sextic},
      {"plane-family.misses-lines", "Each plane misses the lines P0P1 and P6P5", "plane-family", plane_misses_lines},
      {"conic.orbit", "The torus orbit (t0^2 : 11 t0 t1 : t1^2 : t0 t1) is a conic", "conic-orbit", conic_orbit},
  };
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return r;
}

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> r = build_registry();
  return r;
}

}  // namespace fanotk::report
