#pragma once

// Dense exact linear algebra over any coefficient field.
//
// Pivoting is always "first nonzero entry in the current column", so ranks,
// kernels and echelon forms are reproducible across runs.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/scalars.hpp"

namespace waring {

template <Scalar F>
class Matrix {
 public:
  using Context = context_t<F>;

  Matrix() = default;
  Matrix(Context ctx, std::size_t rows, std::size_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, ctx_.zero()) {}
  Matrix(Context ctx, const std::vector<std::vector<F>>& rows) : ctx_(std::move(ctx)), rows_(rows.size()) {
    cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(ErrorKind::ArityMismatch, "ragged matrix rows");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }
  static Matrix identity(const Context& ctx, std::size_t n) {
    Matrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
    return m;
  }
  static Matrix column(const Context& ctx, const std::vector<F>& v) {
    Matrix m(ctx, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  const Context& context() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::vector<F> row(std::size_t i) const { return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_}; }

  Matrix transpose() const {
    Matrix t(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::ArityMismatch, "matrix product dimension mismatch");
    Matrix r(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }
  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) fail(ErrorKind::ArityMismatch, "vector length does not match column count");
    std::vector<F> r(rows_, ctx_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }
  friend Matrix operator*(Matrix m, const F& s) {
    for (auto& x : m.a_) x *= s;
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  bool is_square() const { return rows_ == cols_; }

  /// Deletes row i and column j.
  Matrix minor_matrix(std::size_t i, std::size_t j) const {
    Matrix m(ctx_, rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == j) continue;
        m(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return m;
  }

 private:
  Context ctx_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

template <Scalar F>
struct Echelon {
  Matrix<F> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <Scalar F>
Echelon<F> rref(Matrix<F> m) {
  const auto& ctx = m.context();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = ctx.one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <Scalar F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

/// Basis of the right null space, one vector per free column, with a 1 in
/// that column and zeros in the other free columns.
template <Scalar F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  const auto& ctx = m.context();
  Echelon<F> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), ctx.zero());
    v[free] = ctx.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Fraction-free (Bareiss) determinant.
template <Scalar F>
F determinant(Matrix<F> m) {
  if (!m.is_square()) fail(ErrorKind::ArityMismatch, "determinant of a non-square matrix");
  const auto& ctx = m.context();
  const std::size_t n = m.rows();
  if (n == 0) return ctx.one();
  F prev = ctx.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return ctx.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = ctx.zero();
    }
    prev = m(k, k);
  }
  F d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/// Inverse by Gauss-Jordan; throws Singular.
template <Scalar F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) fail(ErrorKind::ArityMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(m.context(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.context().one();
  }
  Echelon<F> e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) fail(ErrorKind::Singular, "matrix is singular");
  Matrix<F> inv(m.context(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Classical adjoint, defined for singular matrices too: M * adj(M) = det(M) I.
template <Scalar F>
Matrix<F> adjugate(const Matrix<F>& m) {
  if (!m.is_square()) fail(ErrorKind::ArityMismatch, "adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  const auto& ctx = m.context();
  if (n == 1) return Matrix<F>::identity(ctx, 1);
  const std::size_t r = rank(m);
  if (r == n) return inverse(m) * determinant(m);
  Matrix<F> adj(ctx, n, n);
  if (r + 1 < n) return adj;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      F c = determinant(m.minor_matrix(j, i));
      adj(i, j) = (i + j) % 2 == 0 ? c : -c;
    }
  return adj;
}

/// One solution of M x = b (free variables set to zero); throws Inconsistent.
template <Scalar F>
std::vector<F> solve(const Matrix<F>& m, const std::vector<F>& b) {
  if (b.size() != m.rows()) fail(ErrorKind::ArityMismatch, "right-hand side length mismatch");
  Matrix<F> aug(m.context(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon<F> e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) fail(ErrorKind::Inconsistent, "linear system has no solution");
  std::vector<F> x(m.cols(), m.context().zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

}  // namespace waring
