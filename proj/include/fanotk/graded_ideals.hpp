#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "fanotk/projective.hpp"

namespace fanotk {

// All exponent vectors of total degree d in n variables, in descending
// lexicographic order.
inline std::vector<Exponents> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Exponents> out;
  if (n == 0) return out;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

// Exponent vectors of total degree <= d in n variables, by degree then
// descending lex.
inline std::vector<Exponents> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Exponents> out;
  for (unsigned k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Restriction of degree-d forms to a parametrization: column j is the image
// of source[j] written in the target basis.
template <Field F>
struct EvaluationMap {
  std::vector<Exponents> source;
  std::vector<Exponents> target;
  Matrix<F> matrix;

  std::size_t rank() const { return fanotk::rank(matrix); }
};

namespace detail {

template <Field F>
EvaluationMap<F> build_evaluation(const std::vector<MultiPoly<F>>& images, unsigned d,
                                  std::vector<Exponents> target) {
  EvaluationMap<F> ev;
  ev.source = monomials_of_degree(images.size(), d);
  ev.target = std::move(target);
  std::map<Exponents, std::size_t> row_of;
  for (std::size_t r = 0; r < ev.target.size(); ++r) row_of.emplace(ev.target[r], r);
  ev.matrix = Matrix<F>(ev.target.size(), ev.source.size());

  const std::size_t m = images.empty() ? 0 : images[0].nvars();
  std::vector<std::vector<MultiPoly<F>>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(MultiPoly<F>::constant(m, F(1)));
    for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  for (std::size_t j = 0; j < ev.source.size(); ++j) {
    MultiPoly<F> img = MultiPoly<F>::constant(m, F(1));
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (ev.source[j][i]) img *= powers[i][ev.source[j][i]];
    }
    for (const auto& [e, c] : img.terms()) {
      auto it = row_of.find(e);
      if (it == row_of.end()) throw Error("image monomial outside the target basis");
      ev.matrix(it->second, j) = c;
    }
  }
  return ev;
}

template <Field F>
std::vector<MultiPoly<F>> kernel_forms(const EvaluationMap<F>& ev) {
  const std::size_t n = ev.source.empty() ? 0 : ev.source[0].size();
  auto ker = kernel_basis(ev.matrix);
  std::vector<MultiPoly<F>> out;
  if (ker.empty()) return out;
  auto rr = rref(Matrix<F>::from_rows(ker));
  for (std::size_t r = 0; r < rr.rank; ++r) {
    MultiPoly<F> f(n);
    for (std::size_t j = 0; j < ev.source.size(); ++j) f.add_term(ev.source[j], rr.reduced(r, j));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detail

template <Field F>
EvaluationMap<F> curve_evaluation_map(const ParamCurve<F>& c, unsigned d) {
  return detail::build_evaluation(c.images(), d, monomials_of_degree(2, d * c.degree()));
}

// Parameter monomials of total degree up to d times the largest coordinate
// degree.
template <Field F>
EvaluationMap<F> surface_evaluation_map(const ParamSurface<F>& s, unsigned d) {
  auto bounds = s.degree_bounds();
  unsigned top = *std::max_element(bounds.begin(), bounds.end());
  return detail::build_evaluation(s.coords, d, monomials_up_to(2, d * top));
}

// Echelon basis of the degree-d forms vanishing on the curve.
template <Field F>
std::vector<MultiPoly<F>> forms_through_curve(const ParamCurve<F>& c, unsigned d) {
  if (d < 1) throw DegenerateInput("degree must be positive");
  return detail::kernel_forms(curve_evaluation_map(c, d));
}

template <Field F>
std::vector<MultiPoly<F>> forms_through_surface(const ParamSurface<F>& s, unsigned d) {
  if (d < 1) throw DegenerateInput("degree must be positive");
  return detail::kernel_forms(surface_evaluation_map(s, d));
}

struct NormalityCertificate {
  bool normal = false;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t target_dim = 0;
};

// Surjectivity of the restriction of quadrics to the curve.
template <Field F>
NormalityCertificate is_quadratically_normal(const ParamCurve<F>& c) {
  auto ev = curve_evaluation_map(c, 2);
  NormalityCertificate cert;
  cert.rank = ev.rank();
  cert.kernel_dim = ev.source.size() - cert.rank;
  cert.target_dim = ev.target.size();
  cert.normal = cert.rank == cert.target_dim;
  return cert;
}

template <Field F>
Result<unsigned> multisecant_degree(const ParamCurve<F>& c, const LinearSubspace<F>& line) {
  if (line.dimension() != 1) throw DegenerateInput("multisecant test needs a line");
  auto d = intersection_divisor(c, line.cutting_forms());
  if (!d.ok()) return Result<unsigned>::failure(d.error().kind, d.error().message);
  return d->degree();
}

struct CoordinateLineSecancy {
  std::size_t i = 0;
  std::size_t j = 0;
  unsigned degree = 0;
};

// Secancy of the curve with every coordinate line <P_i, P_j>, i < j, in
// lexicographic order of (i, j). Lines contained in the curve are skipped.
template <Field F>
std::vector<CoordinateLineSecancy> coordinate_line_secancy(const ParamCurve<F>& c) {
  std::vector<CoordinateLineSecancy> out;
  const std::size_t n = c.forms().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto line = LinearSubspace<F>::from_points(
          n, {ProjPoint<F>::basis(n - 1, i), ProjPoint<F>::basis(n - 1, j)});
      auto d = multisecant_degree(c, line);
      if (d.ok()) out.push_back({i, j, *d});
    }
  }
  return out;
}

// True iff every form in `a` lies in the span of `b`.
template <Field F>
bool in_span(const std::vector<MultiPoly<F>>& a, const std::vector<MultiPoly<F>>& b) {
  std::map<Exponents, std::size_t, std::greater<>> col;
  for (const auto* list : {&a, &b}) {
    for (const auto& f : *list) {
      for (const auto& [e, c] : f.terms()) col.emplace(e, 0);
    }
  }
  if (col.empty()) return true;
  std::size_t k = 0;
  for (auto& [e, idx] : col) idx = k++;
  auto to_row = [&](const MultiPoly<F>& f) {
    Vec<F> v(col.size(), F(0));
    for (const auto& [e, c] : f.terms()) v[col.at(e)] = c;
    return v;
  };
  std::vector<Vec<F>> rows;
  for (const auto& f : b) rows.push_back(to_row(f));
  const std::size_t rb = rows.empty() ? 0 : rank(Matrix<F>::from_rows(rows));
  for (const auto& f : a) {
    if (f.is_zero()) continue;
    rows.push_back(to_row(f));
    if (rank(Matrix<F>::from_rows(rows)) != rb) return false;
    rows.pop_back();
  }
  return true;
}

}  // namespace fanotk
