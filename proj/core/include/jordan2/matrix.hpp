#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jordan2/errors.hpp"
#include "jordan2/scalar.hpp"

namespace jordan2 {

template <class T>
using Vec = std::vector<T>;

/// Row-major dense matrix over any of the scalar types. Sizes here are tiny
/// (at most a few dozen rows), so no attempt is made at blocking.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
      }
    return out;
  }

  Vec<T> operator*(const Vec<T>& v) const {
    if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  double max_magnitude() const {
    double m = 0.0;
    for (const T& x : data_) m = std::max(m, magnitude(x));
    return m;
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class To, class From>
Matrix<To> matrix_cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = scalar_cast<To>(m(i, j));
  return out;
}

template <class T>
struct RowEchelon {
  Matrix<T> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Exact over Rational; over floating types uses
/// partial pivoting and treats |pivot| <= tol * max(1, max|entry|) as zero.
template <class T>
RowEchelon<T> row_reduce(Matrix<T> m, double tol = kDefaultTolerance) {
  const double scale = m.max_magnitude();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = row;
    if constexpr (is_exact_v<T>) {
      while (best < m.rows() && sgn(m(best, col)) == 0) ++best;
      if (best == m.rows()) continue;
    } else {
      for (std::size_t r = row + 1; r < m.rows(); ++r)
        if (magnitude(m(r, col)) > magnitude(m(best, col))) best = r;
      if (is_zero(m(best, col), tol, scale)) {
        for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = T(0);
        continue;
      }
    }
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
    const T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const T factor = m(r, col);
      if constexpr (is_exact_v<T>) {
        if (sgn(factor) == 0) continue;
      }
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m, double tol = kDefaultTolerance) {
  return row_reduce(m, tol).pivots.size();
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
template <class T>
std::vector<Vec<T>> kernel_basis(const Matrix<T>& m, double tol = kDefaultTolerance) {
  const RowEchelon<T> e = row_reduce(m, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

enum class SolveStatus { Inconsistent, Unique, Underdetermined };

template <class T>
struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  Vec<T> x;  // a particular solution when consistent
};

/// Solves a x = b by elimination on the augmented matrix.
template <class T>
SolveResult<T> solve(const Matrix<T>& a, const Vec<T>& b, double tol = kDefaultTolerance) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon<T> e = row_reduce(aug, tol);
  SolveResult<T> out;
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return out;
  out.x.assign(a.cols(), T(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.x[e.pivots[r]] = e.reduced(r, a.cols());
  out.status = e.pivots.size() == a.cols() ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return out;
}

template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if constexpr (is_exact_v<T>) {
        if (sgn(m(best, col)) != 0) break;
        best = r;
      } else {
        if (magnitude(m(r, col)) > magnitude(m(best, col))) best = r;
      }
    }
    if constexpr (is_exact_v<T>) {
      if (sgn(m(best, col)) == 0) return T(0);
    } else {
      if (magnitude(m(best, col)) == 0.0) return T(0);
    }
    if (best != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(best, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const T factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m, double tol = kDefaultTolerance) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  const RowEchelon<T> e = row_reduce(aug, tol);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  return out;
}

}  // namespace jordan2
