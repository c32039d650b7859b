#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fanotk/binary_form.hpp"
#include "fanotk/matrix.hpp"
#include "fanotk/multipoly.hpp"
#include "fanotk/projpoint.hpp"

namespace fanotk {

// P^n with labelled coordinates and a torus weight per coordinate.
struct WeightedProjSpace {
  VarNames labels;
  WeightVector weights;

  WeightedProjSpace(VarNames l, WeightVector w) : labels(std::move(l)), weights(std::move(w)) {
    if (labels.empty()) throw DegenerateInput("projective space needs coordinates");
    if (weights.size() != labels.size()) throw ArityMismatch("one weight per coordinate");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw DegenerateInput("coordinate labels must be distinct");
  }

  std::size_t dim() const { return labels.size() - 1; }
  std::size_t ncoords() const { return labels.size(); }
};

// Rational curve given by n+1 binary forms of one degree without a common
// factor.
template <Field F>
class ParamCurve {
 public:
  ParamCurve(WeightedProjSpace space, std::vector<BinaryForm<F>> forms)
      : space_(std::move(space)), forms_(std::move(forms)) {
    if (forms_.size() != space_.ncoords()) throw ArityMismatch("one form per coordinate");
    std::optional<unsigned> d;
    for (const auto& f : forms_) {
      if (f.is_zero()) continue;
      if (d && *d != f.degree()) throw DegenerateInput("curve forms must share a degree");
      d = f.degree();
    }
    if (!d) throw DegenerateInput("curve forms are all zero");
    degree_ = *d;
    for (auto& f : forms_) {
      if (f.is_zero()) f = BinaryForm<F>(MultiPoly<F>(2), degree_);
    }
    if (binary_gcd(forms_).degree() != 0) throw DegenerateInput("curve forms share a factor");
  }

  // Monomial curve (t0^(d-e) t1^e) for each exponent e, weights equal to the
  // exponents.
  static ParamCurve monomial(unsigned d, const std::vector<unsigned>& exponents,
                             const std::string& prefix = "y") {
    VarNames labels;
    WeightVector w;
    std::vector<BinaryForm<F>> forms;
    for (unsigned e : exponents) {
      labels.push_back(prefix + std::to_string(e));
      w.w.push_back(static_cast<long>(e));
      forms.push_back(BinaryForm<F>::monomial(d - e, e));
    }
    return ParamCurve(WeightedProjSpace(std::move(labels), std::move(w)), std::move(forms));
  }

  const WeightedProjSpace& space() const { return space_; }
  const std::vector<BinaryForm<F>>& forms() const { return forms_; }
  unsigned degree() const { return degree_; }

  std::vector<MultiPoly<F>> images() const {
    std::vector<MultiPoly<F>> out;
    for (const auto& f : forms_) out.push_back(f.poly());
    return out;
  }

  ProjPoint<F> point_at(const F& t0, const F& t1) const {
    std::vector<F> c;
    for (const auto& f : forms_) c.push_back(f.evaluate(t0, t1));
    return ProjPoint<F>(std::move(c));
  }

 private:
  WeightedProjSpace space_;
  std::vector<BinaryForm<F>> forms_;
  unsigned degree_ = 0;
};

// Surface given by n+1 polynomials in two affine parameters.
template <Field F>
struct ParamSurface {
  WeightedProjSpace space;
  VarNames params;
  std::vector<MultiPoly<F>> coords;

  ParamSurface(WeightedProjSpace s, VarNames p, std::vector<MultiPoly<F>> c)
      : space(std::move(s)), params(std::move(p)), coords(std::move(c)) {
    if (params.size() != 2) throw ArityMismatch("surface needs two parameters");
    if (coords.size() != space.ncoords()) throw ArityMismatch("one polynomial per coordinate");
    bool all_zero = true;
    for (const auto& c0 : coords) {
      if (c0.nvars() != 2) throw ArityMismatch("surface coordinates must be in two parameters");
      all_zero = all_zero && c0.is_zero();
    }
    if (all_zero) throw DegenerateInput("surface coordinates are all zero");
  }

  // Total-degree bound per coordinate.
  std::vector<unsigned> degree_bounds() const {
    std::vector<unsigned> out;
    for (const auto& c : coords) out.push_back(static_cast<unsigned>(std::max(0, c.total_degree())));
    return out;
  }
};

// Quadric hypersurface as a symmetric Gram matrix: q(v) = v M v^T.
template <Field F>
class QuadricForm {
 public:
  explicit QuadricForm(Matrix<F> gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric()) throw DegenerateInput("Gram matrix must be symmetric");
  }

  // Off-diagonal entries are half the mixed coefficients.
  static QuadricForm from_poly(const MultiPoly<F>& p) {
    const std::size_t n = p.nvars();
    if (!p.is_zero() && p.homogeneous_degree() != 2u) throw DegenerateInput("not a quadratic form");
    Matrix<F> m(n, n);
    const F half = F(1) / F(2);
    for (const auto& [e, c] : p.terms()) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        for (unsigned k = 0; k < e[i]; ++k) idx.push_back(i);
      }
      if (idx[0] == idx[1]) {
        m(idx[0], idx[0]) = c;
      } else {
        m(idx[0], idx[1]) = c * half;
        m(idx[1], idx[0]) = c * half;
      }
    }
    return QuadricForm(std::move(m));
  }

  MultiPoly<F> to_poly() const {
    const std::size_t n = gram_.rows();
    MultiPoly<F> p(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (gram_(i, j).is_zero()) continue;
        Exponents e(n, 0);
        e[i] += 1;
        e[j] += 1;
        p.add_term(std::move(e), i == j ? gram_(i, j) : gram_(i, j) * F(2));
      }
    }
    return p;
  }

  const Matrix<F>& gram() const { return gram_; }
  std::size_t ncoords() const { return gram_.rows(); }
  bool is_zero() const { return gram_.is_zero(); }

  friend bool operator==(const QuadricForm&, const QuadricForm&) = default;

 private:
  Matrix<F> gram_;
};

// Linear subspace of P^n, held both as a basis of spanning vectors and as a
// basis of cutting linear forms (coefficient vectors).
template <Field F>
class LinearSubspace {
 public:
  static LinearSubspace from_points(std::size_t ncoords, const std::vector<ProjPoint<F>>& pts) {
    std::vector<Vec<F>> rows;
    for (const auto& p : pts) {
      if (p.size() != ncoords) throw ArityMismatch("point has wrong number of coordinates");
      rows.push_back(p.coords());
    }
    return from_span_rows(ncoords, rows);
  }

  // Each equation is a linear form given by its coefficient vector.
  static LinearSubspace from_equations(std::size_t ncoords, const std::vector<Vec<F>>& eqs) {
    LinearSubspace s;
    s.ncoords_ = ncoords;
    Matrix<F> m = eqs.empty() ? Matrix<F>(0, ncoords) : Matrix<F>::from_rows(eqs);
    if (m.cols() != ncoords) throw ArityMismatch("equation has wrong number of coefficients");
    auto ker = kernel_basis(m);
    s.span_ = ker.empty() ? ker : row_basis(Matrix<F>::from_rows(ker));
    s.equations_ = row_basis(m);
    return s;
  }

  static LinearSubspace from_forms(const std::vector<MultiPoly<F>>& forms) {
    if (forms.empty()) throw DegenerateInput("no cutting forms");
    const std::size_t n = forms[0].nvars();
    std::vector<Vec<F>> eqs;
    for (const auto& f : forms) {
      if (!f.is_zero() && f.homogeneous_degree() != 1u) throw DegenerateInput("cutting form is not linear");
      Vec<F> row(n, F(0));
      for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
          if (e[i]) row[i] = c;
        }
      }
      eqs.push_back(std::move(row));
    }
    return from_equations(n, eqs);
  }

  // Projective dimension; -1 for the empty subspace.
  int dimension() const { return static_cast<int>(span_.size()) - 1; }
  bool is_empty() const { return span_.empty(); }
  std::size_t ncoords() const { return ncoords_; }

  std::vector<ProjPoint<F>> points() const {
    std::vector<ProjPoint<F>> out;
    for (const auto& v : span_) out.emplace_back(v);
    return out;
  }
  const std::vector<Vec<F>>& spanning_vectors() const { return span_; }
  const std::vector<Vec<F>>& equations() const { return equations_; }

  std::vector<MultiPoly<F>> cutting_forms() const {
    std::vector<MultiPoly<F>> out;
    for (const auto& eq : equations_) {
      MultiPoly<F> f(ncoords_);
      for (std::size_t i = 0; i < ncoords_; ++i) {
        Exponents e(ncoords_, 0);
        e[i] = 1;
        f.add_term(std::move(e), eq[i]);
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  bool contains(const ProjPoint<F>& p) const {
    for (const auto& eq : equations_) {
      F acc(0);
      for (std::size_t i = 0; i < ncoords_; ++i) acc += eq[i] * p[i];
      if (!acc.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.ncoords_ == b.ncoords_ && a.span_ == b.span_;
  }

 private:
  static std::vector<Vec<F>> row_basis(const Matrix<F>& m) {
    auto rr = rref(m);
    std::vector<Vec<F>> out;
    for (std::size_t i = 0; i < rr.rank; ++i) out.push_back(rr.reduced.row(i));
    return out;
  }

  static LinearSubspace from_span_rows(std::size_t ncoords, const std::vector<Vec<F>>& rows) {
    Matrix<F> m = rows.empty() ? Matrix<F>(0, ncoords) : Matrix<F>::from_rows(rows);
    LinearSubspace s;
    s.ncoords_ = ncoords;
    s.span_ = row_basis(m);
    s.equations_ = kernel_basis(m);
    return s;
  }

  std::size_t ncoords_ = 0;
  std::vector<Vec<F>> span_;
  std::vector<Vec<F>> equations_;
};

// Singular locus of the quadric: the projectivized kernel of its Gram matrix.
template <Field F>
LinearSubspace<F> quadric_singular_locus(const QuadricForm<F>& q) {
  if (q.is_zero()) throw DegenerateInput("singular locus of the zero quadric");
  const std::size_t n = q.ncoords();
  std::vector<Vec<F>> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(q.gram().row(i));
  return LinearSubspace<F>::from_equations(n, rows);
}

// Pulls each form back along the line s*p + t*q spanned by the first two
// spanning vectors of `line`.
template <Field F>
std::vector<BinaryForm<F>> restrict_to_line(const std::vector<MultiPoly<F>>& forms,
                                            const LinearSubspace<F>& line) {
  if (line.dimension() != 1) throw DegenerateInput("restriction needs a line spanned by two points");
  const auto& v = line.spanning_vectors();
  std::vector<MultiPoly<F>> images;
  for (std::size_t i = 0; i < line.ncoords(); ++i) {
    MultiPoly<F> img(2);
    img.add_term({1, 0}, v[0][i]);
    img.add_term({0, 1}, v[1][i]);
    images.push_back(std::move(img));
  }
  std::vector<BinaryForm<F>> out;
  for (const auto& f : forms) {
    auto d = f.homogeneous_degree();
    if (!d && !f.is_zero()) throw DegenerateInput("restricted form must be homogeneous");
    out.emplace_back(poly_substitute(f, images), d.value_or(0));
  }
  return out;
}

// Scheme-theoretic intersection of a parametrized curve with the zero set of
// `cut`, as the divisor of the gcd of the pulled-back forms.
template <Field F>
Result<P1Divisor<F>> intersection_divisor(const ParamCurve<F>& c, const std::vector<MultiPoly<F>>& cut) {
  std::vector<BinaryForm<F>> pulled;
  const auto imgs = c.images();
  for (const auto& f : cut) {
    auto g = poly_substitute(f, imgs);
    if (g.is_zero()) continue;
    pulled.push_back(BinaryForm<F>::from_poly(std::move(g)));
  }
  if (pulled.empty()) {
    return Result<P1Divisor<F>>::failure(ErrorKind::Contained, "curve is contained in the cut locus");
  }
  auto g = binary_gcd(pulled);
  if (g.degree() == 0) return P1Divisor<F>{};
  return squarefree_and_roots(g);
}

template <Field F>
struct SingularityCertificate {
  bool singular = false;
  // Set when some minor is nonzero: row and column indices of the minor and
  // its pulled-back value.
  std::vector<std::size_t> witness_rows;
  std::vector<std::size_t> witness_cols;
  std::optional<MultiPoly<F>> witness_minor;
  std::size_t minors_checked = 0;
};

namespace detail {

template <Field F>
MultiPoly<F> poly_det(const std::vector<std::vector<MultiPoly<F>>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly<F>::constant(nvars, F(1));
  if (n == 1) return m[0][0];
  MultiPoly<F> acc(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly<F>>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly<F>> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      sub.push_back(std::move(row));
    }
    auto term = m[0][j] * poly_det(sub, nvars);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

// True iff every codim x codim minor of the Jacobian of `equations`, pulled
// back along the family given by `images`, vanishes identically.
template <Field F>
SingularityCertificate<F> singular_on_family(const std::vector<MultiPoly<F>>& equations,
                                             const std::vector<MultiPoly<F>>& images,
                                             std::size_t codim) {
  if (equations.empty()) throw DegenerateInput("no equations");
  const std::size_t n = equations[0].nvars();
  if (images.size() != n) throw ArityMismatch("family does not map into the ambient space");
  if (codim == 0 || codim > equations.size() || codim > n) {
    throw ArityMismatch("codimension does not fit the Jacobian");
  }
  const std::size_t m = images[0].nvars();
  std::vector<std::vector<MultiPoly<F>>> jac;
  for (const auto& eq : equations) {
    if (eq.nvars() != n) throw ArityMismatch("equations live in different rings");
    std::vector<MultiPoly<F>> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(poly_substitute(eq.derivative(j), images));
    jac.push_back(std::move(row));
  }
  SingularityCertificate<F> cert;
  for (const auto& rs : detail::subsets(equations.size(), codim)) {
    for (const auto& cs : detail::subsets(n, codim)) {
      std::vector<std::vector<MultiPoly<F>>> sub;
      for (auto r : rs) {
        std::vector<MultiPoly<F>> row;
        for (auto c : cs) row.push_back(jac[r][c]);
        sub.push_back(std::move(row));
      }
      ++cert.minors_checked;
      auto minor = detail::poly_det(sub, m);
      if (!minor.is_zero()) {
        cert.witness_rows = rs;
        cert.witness_cols = cs;
        cert.witness_minor = std::move(minor);
        return cert;
      }
    }
  }
  cert.singular = true;
  return cert;
}

// Rank of the Jacobian of `equations` at a point.
template <Field F>
std::size_t jacobian_rank_at(const std::vector<MultiPoly<F>>& equations, const ProjPoint<F>& p) {
  std::vector<Vec<F>> rows;
  for (const auto& eq : equations) {
    Vec<F> row;
    for (std::size_t j = 0; j < eq.nvars(); ++j) row.push_back(eq.derivative(j).evaluate(p.coords()));
    rows.push_back(std::move(row));
  }
  return rank(Matrix<F>::from_rows(rows));
}

// Hypersurface view: all forms vanish at p.
template <Field F>
bool point_membership(const ProjPoint<F>& p, const std::vector<MultiPoly<F>>& forms) {
  return std::all_of(forms.begin(), forms.end(),
                     [&](const auto& f) { return f.evaluate(p.coords()).is_zero(); });
}

// Parametrized view: p lies on the curve iff the 2x2 minors
// f_i(t) p_j - f_j(t) p_i have a common zero on P^1.
template <Field F>
bool point_membership(const ProjPoint<F>& p, const ParamCurve<F>& c) {
  if (p.size() != c.forms().size()) throw ArityMismatch("point and curve live in different spaces");
  std::vector<BinaryForm<F>> minors;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      auto m = p[j] * c.forms()[i] - p[i] * c.forms()[j];
      if (!m.is_zero()) minors.push_back(m);
    }
  }
  if (minors.empty()) return true;
  return binary_gcd(minors).degree() >= 1;
}

// Renames variables: variable i becomes variable perm[i].
template <Field F>
MultiPoly<F> permute_variables(const MultiPoly<F>& p, const std::vector<std::size_t>& perm) {
  return p.embed(p.nvars(), perm);
}

// Coordinate reversal y_i <-> y_{n-i}. On the monomial curves with
// symmetric exponent sets this lifts the swap t0 <-> t1 of P^1.
template <Field F>
MultiPoly<F> reverse_coordinates(const MultiPoly<F>& p) {
  std::vector<std::size_t> perm(p.nvars());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
  return permute_variables(p, perm);
}

template <Field F>
ProjPoint<F> reverse_coordinates(const ProjPoint<F>& p) {
  std::vector<F> c(p.coords().rbegin(), p.coords().rend());
  return ProjPoint<F>(std::move(c));
}

template <Field F>
LinearSubspace<F> reverse_coordinates(const LinearSubspace<F>& s) {
  std::vector<MultiPoly<F>> forms;
  for (const auto& f : s.cutting_forms()) forms.push_back(reverse_coordinates(f));
  if (forms.empty()) return LinearSubspace<F>::from_equations(s.ncoords(), {});
  return LinearSubspace<F>::from_forms(forms);
}

// Reverses the coordinates and swaps t0 <-> t1 in every form.
template <Field F>
ParamCurve<F> reverse_coordinates(const ParamCurve<F>& c) {
  std::vector<BinaryForm<F>> forms;
  const std::vector<std::size_t> swap{1, 0};
  for (auto it = c.forms().rbegin(); it != c.forms().rend(); ++it) {
    forms.emplace_back(permute_variables(it->poly(), swap), it->degree());
  }
  return ParamCurve<F>(c.space(), std::move(forms));
}

}  // namespace fanotk
