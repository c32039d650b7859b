#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanotk/error.hpp"
#include "fanotk/field.hpp"

namespace fanotk {

template <Field F>
using Vec = std::vector<F>;

// Dense row-major matrix over an exact field.
template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<F>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw ArityMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<F> row(std::size_t i) const {
    return Vec<F>(a_.begin() + static_cast<long>(i * cols_),
                  a_.begin() + static_cast<long>((i + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  bool is_zero() const {
    for (const auto& v : a_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if (!((*this)(i, j) == (*this)(j, i))) return false;
      }
    }
    return true;
  }

  Vec<F> apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw ArityMismatch("matrix-vector size mismatch");
    Vec<F> out(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const F& x = (*this)(i, j);
        if (!x.is_zero() && !v[j].is_zero()) out[i] += x * v[j];
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ArityMismatch("matrix product size mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ArityMismatch("matrix sum size mismatch");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& v : a.a_) v *= s;
    return a;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

template <Field F>
struct RrefResult {
  Matrix<F> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form. Pivots are the first nonzero entry in column
// order; each pivot row is scaled to a unit pivot and cleared above and below.
template <Field F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(r, j).is_zero()) support.push_back(j);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const F f = m(i, c);
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

// Basis of the right null space: one vector per free column, with a 1 in
// that column and zeros in the other free columns.
template <Field F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m v = b, with free variables set to zero; empty when the
// system is inconsistent.
template <Field F>
std::optional<Vec<F>> solve_linear(const Matrix<F>& m, const Vec<F>& b) {
  if (b.size() != m.rows()) throw ArityMismatch("right-hand side has wrong length");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto rr = rref(std::move(aug));
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vec<F> x(m.cols(), F(0));
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.reduced(i, m.cols());
  return x;
}

// Determinant by Gaussian elimination.
template <Field F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw ArityMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const F inv = F(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace fanotk
