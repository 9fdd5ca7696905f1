#pragma once

#include <initializer_list>
#include <optional>

#include "jordan2/matrix.hpp"

namespace jordan2 {

/// Endomorphism of R^n (or C^n). Column j holds the coordinates of f(e_j).
template <class T>
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix<T> m, double tolerance = kDefaultTolerance) : m_(std::move(m)), tolerance_(tolerance) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("linear map must be square");
  }

  static LinearMap identity(std::size_t n) { return LinearMap(Matrix<T>::identity(n)); }

  static LinearMap diagonal(std::initializer_list<T> entries) {
    Matrix<T> m(entries.size(), entries.size());
    std::size_t i = 0;
    for (const T& e : entries) {
      m(i, i) = e;
      ++i;
    }
    return LinearMap(std::move(m));
  }

  /// f(e_j) = images[j].
  static LinearMap from_images(const std::vector<Vec<T>>& images) {
    const std::size_t n = images.size();
    Matrix<T> m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      if (images[j].size() != n) throw DimensionMismatch("image vector length");
      for (std::size_t i = 0; i < n; ++i) m(i, j) = images[j][i];
    }
    return LinearMap(std::move(m));
  }

  std::size_t dim() const { return m_.rows(); }
  const Matrix<T>& matrix() const { return m_; }
  double tolerance() const { return tolerance_; }

  const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  Vec<T> apply(const Vec<T>& v) const { return m_ * v; }

  LinearMap compose(const LinearMap& after_this) const {
    return LinearMap(after_this.m_ * m_, tolerance_);
  }

  T det() const { return determinant(m_); }

  bool invertible() const {
    if constexpr (is_exact_v<T>) {
      return sgn(det()) != 0;
    } else {
      double scale = 1.0;
      for (std::size_t i = 0; i < dim(); ++i) scale *= std::max(1.0, column_norm(i));
      return magnitude(det()) > tolerance_ * scale;
    }
  }

  /// Throws SingularMap when f is not invertible.
  LinearMap inverse() const {
    if (!invertible()) throw SingularMap("linear map is singular");
    auto inv = jordan2::inverse(m_, tolerance_);
    if (!inv) throw SingularMap("linear map is singular");
    return LinearMap(std::move(*inv), tolerance_);
  }

  template <class U>
  LinearMap<U> cast(double tolerance = kDefaultTolerance) const {
    return LinearMap<U>(matrix_cast<U>(m_), tolerance);
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.m_ == b.m_; }

 private:
  double column_norm(std::size_t j) const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) s += magnitude(m_(i, j)) * magnitude(m_(i, j));
    return std::sqrt(s);
  }

  Matrix<T> m_;
  double tolerance_ = kDefaultTolerance;
};

}  // namespace jordan2
