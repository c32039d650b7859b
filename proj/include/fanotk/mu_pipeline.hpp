#pragma once

#include <array>
#include <string>
#include <vector>

#include "fanotk/blowup.hpp"
#include "fanotk/graded_ideals.hpp"
#include "fanotk/quadric_pencil.hpp"

namespace fanotk::mu {

// Coordinates (y0, y1, y3, y5, y6) of the sextic's P^4 and (z3, z4, z6, z8, z9)
// of the boundary model.
const VarNames& y_names();
const VarNames& z_names();
const WeightVector& y_weights();
const WeightVector& z_weights();

MultiPoly<Rational> q0();
MultiPoly<Rational> qinf();
ParamCurve<Rational> gamma_curve();
QuadricPencil<Rational> gamma_pencil();
// (1, w1^2, w1 w2, w2^2, w1^2 w2^2)
ParamSurface<Rational> quotient_surface();

MultiPoly<Rational> reference_mu_quadric();
MultiPoly<Rational> reference_quintic();

// Scalar multiple with coprime integer coefficients and positive leading
// coefficient.
MultiPoly<Rational> primitive_integer(const MultiPoly<Rational>& p);

// Five coordinates z_i of the boundary surface in the affine parameters
// (a, b), read off from the expansion of (x + a y)(x + b y)^11.
struct BoundarySurfaceParam {
  ParamSurface<Rational> surface;
  std::array<long, 3> binomials{};   // C(11,2), C(11,3), C(11,5)
  Rational z6_at_phi12;              // coefficient of x^6 y^6 in phi12
  std::vector<Rational> diagonal;    // z_i at a = b = 1
  Rational diagonal_factor;          // diagonal / (20, 45, 84, 45, 20)
};

// Throws Error when the expansion disagrees with the closed forms.
BoundarySurfaceParam build_boundary_param();

struct UniqueQuadric {
  MultiPoly<Rational> quadric;
  std::size_t source_dim = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  bool vanishes_on_surface = false;
};

UniqueQuadric unique_quadric_through_boundary(const BoundarySurfaceParam& p);

struct GammaImage {
  ParamCurve<QuadExt> curve;
  // Substitution of (a, b) = (-phi^2 t, t) equals first_factor * t^3 * curve,
  // and (t, -phi^2 t) equals second_factor * t^3 * curve.
  QuadExt first_factor;
  QuadExt second_factor;
  bool conic_residue_factors = false;
};

// Throws Error on any non-proportionality.
GammaImage gamma_image_over_extension(const BoundarySurfaceParam& p);

// z_i = c_i y_i.
struct CoordinateChange {
  std::array<QuadExt, 5> c;
};

// Matches a curve (d_i t^(e_i)) against the sextic's monomial coordinates.
CoordinateChange coordinate_change_from(const ParamCurve<QuadExt>& image);
// Reference change (5(3-phi^2), 15(2-phi^2), 42(1-phi^2), 15(1-2phi^2), 5(1-3phi^2)).
CoordinateChange reference_coordinate_change();

struct MuIdentification {
  CoordinateChange change;
  MultiPoly<QuadExt> substituted;
  MultiPoly<Rational> rational_quadric;  // u0*Q0 + u1*Qinf with canonical pair
  QuadExt factor;                        // substituted = factor * rational_quadric
  ProjPoint<Rational> param;
  bool vanishes_on_gamma = false;
};

// Throws Error if the substitution is not a multiple of a rational member of
// the pencil.
MuIdentification identify_mu_quadric(const MultiPoly<Rational>& z_quadric, const CoordinateChange& change);

struct LocusCheck {
  std::string name;
  bool singular = false;
  std::size_t minors_checked = 0;
};

struct BoundarySingularityCertificate {
  bool quintic_on_surface = false;
  bool quadric_on_surface = false;
  std::vector<LocusCheck> loci;
  bool diagonal_is_sextic = false;
  Rational diagonal_factor;
  // Jacobian of (quadric, quintic) at the image of (a, b) = (1, 2).
  std::vector<Rational> sample_point;
  std::size_t sample_rank = 0;
  std::string sample_minor;

  bool ok() const;
};

BoundarySingularityCertificate verify_boundary_singularities(const BoundarySurfaceParam& p, const GammaImage& g,
                                      const MultiPoly<Rational>& quintic);

struct SurfaceFCertificate {
  bool on_both_quadrics = false;
  bool sign_invariant = false;
  std::vector<std::string> singular_points;
  std::vector<std::string> contained_lines;
  bool gamma_through_p0_p6 = false;
  bool gamma_misses_p1_p5 = false;
  std::string divisor_01;
  std::string divisor_65;
  // Degree by counting common zeros of two pulled-back (2,2)-forms.
  std::vector<std::string> hyperplanes;
  unsigned resultant_degree = 0;
  bool resultant_squarefree = false;
  unsigned hyperplane_draws = 0;
  std::vector<std::size_t> fiber_sizes;
  unsigned map_degree = 0;
  unsigned degree = 0;

  bool ok() const;
};

SurfaceFCertificate verify_surface_F();

struct PlaneFamilyCertificate {
  std::string q1;
  bool q1_is_sum = false;
  std::string vertex;
  bool vertex_off_F = false;
  bool plane_in_q1 = false;          // identity in lambda
  bool plane_pullback_identity = false;
  bool plane_contains_vertex = false;
  std::string det_plane_l01;         // determinant in lambda
  std::string det_plane_l65;
  struct Sample {
    long lambda = 0;
    std::string divisor;
    unsigned degree = 0;
    bool squarefree = false;
    bool misses_l01 = false;
    bool misses_l65 = false;
  };
  std::vector<Sample> samples;

  bool ok() const;
};

PlaneFamilyCertificate verify_plane_family();

struct ConicOrbitCertificate {
  std::size_t linear_relations = 0;
  std::size_t quadric_relations = 0;
  bool contains_expected_quadric = false;   // z1*z11 - zbar^2
  bool shifted_coordinate_vanishes = false; // z6 - 11*zbar
  bool ok() const;
};

// Torus orbit closure (t0^2 : 11 t0 t1 : t1^2 : t0 t1) in (z1, z6, z11, zbar).
ConicOrbitCertificate verify_conic_orbit();

struct WeightCertificate {
  std::vector<long> z_weights;    // i - 6 for the chosen coefficients
  long quadric_weight = 0;
  long quintic_weight = 0;
  bool surface_equivariant = false;
  bool ok() const;
};

WeightCertificate verify_weights(const BoundarySurfaceParam& p, const MultiPoly<Rational>& quadric);

}  // namespace fanotk::mu
