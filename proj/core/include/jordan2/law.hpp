#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "jordan2/errors.hpp"
#include "jordan2/matrix.hpp"
#include "jordan2/scalar.hpp"

namespace jordan2 {

/// 3x2 coefficient matrix of a law on R^2, rows (e1∘e1, e2∘e2, e1∘e2),
/// columns (e1, e2) coordinates: ((a1 a2) (b1 b2) (c1 c2)).
template <class T>
using CoeffMatrix = std::array<std::array<T, 2>, 3>;

/// Symmetric bilinear map R^n x R^n -> R^n stored as structure constants
/// c[k][i][j], the k-th coordinate of e_i ∘ e_j (0-based indices).
///
/// The same type carries Jordan laws and arbitrary symmetric bilinear maps
/// (tangent directions, cocycles); whether the Jordan identity holds is a
/// query, not an invariant of the type. Symmetry in (i, j) is enforced by
/// every mutator.
template <class T>
class Law {
 public:
  Law() = default;
  explicit Law(std::size_t dim, double tolerance = kDefaultTolerance)
      : dim_(dim), tolerance_(tolerance), c_(dim * dim * dim, T(0)) {
    if (dim == 0) throw PreconditionError("law dimension must be positive");
  }

  /// Builds a dimension-2 law from its 3x2 coefficient matrix.
  static Law from_matrix(const CoeffMatrix<T>& m, double tolerance = kDefaultTolerance) {
    Law law(2, tolerance);
    for (std::size_t k = 0; k < 2; ++k) {
      law.set(k, 0, 0, m[0][k]);
      law.set(k, 1, 1, m[1][k]);
      law.set(k, 0, 1, m[2][k]);
    }
    return law;
  }

  /// Builds a law from a full tensor c[k][i][j]; throws if it is not symmetric.
  static Law from_tensor(const std::vector<std::vector<std::vector<T>>>& t,
                         double tolerance = kDefaultTolerance) {
    const std::size_t n = t.size();
    Law law(n, tolerance);
    for (std::size_t k = 0; k < n; ++k) {
      if (t[k].size() != n) throw DimensionMismatch("tensor slice has wrong size");
      for (std::size_t i = 0; i < n; ++i) {
        if (t[k][i].size() != n) throw DimensionMismatch("tensor row has wrong size");
        for (std::size_t j = 0; j < n; ++j) law.c_[law.index(k, i, j)] = t[k][i][j];
      }
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!(law(k, i, j) == law(k, j, i)))
            throw PreconditionError("tensor is not symmetric in its lower indices");
    return law;
  }

  CoeffMatrix<T> to_matrix() const {
    if (dim_ != 2) throw DimensionMismatch("coefficient matrix requires dim = 2");
    CoeffMatrix<T> m;
    for (std::size_t k = 0; k < 2; ++k) {
      m[0][k] = (*this)(k, 0, 0);
      m[1][k] = (*this)(k, 1, 1);
      m[2][k] = (*this)(k, 0, 1);
    }
    return m;
  }

  std::size_t dim() const { return dim_; }
  double tolerance() const { return tolerance_; }
  ScalarMode mode() const { return {ScalarTraits<T>::kind, is_exact_v<T> ? 0.0 : tolerance_}; }

  Law with_tolerance(double tol) const {
    Law out = *this;
    out.tolerance_ = tol;
    return out;
  }

  const T& operator()(std::size_t k, std::size_t i, std::size_t j) const { return c_[index(k, i, j)]; }

  void set(std::size_t k, std::size_t i, std::size_t j, const T& v) {
    c_[index(k, i, j)] = v;
    c_[index(k, j, i)] = v;
  }

  /// Number of independent entries, n^2 (n + 1) / 2.
  std::size_t sym_size() const { return dim_ * dim_ * (dim_ + 1) / 2; }

  /// Coordinates in the basis E_{k,(i<=j)} of symmetric maps, ordered by k,
  /// then i, then j. For dim 2 this is (a1, c1, b1, a2, c2, b2).
  Vec<T> sym_coords() const {
    Vec<T> out;
    out.reserve(sym_size());
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) out.push_back((*this)(k, i, j));
    return out;
  }

  static Law from_sym_coords(std::size_t dim, const Vec<T>& v, double tolerance = kDefaultTolerance) {
    Law law(dim, tolerance);
    if (v.size() != law.sym_size()) throw DimensionMismatch("symmetric coordinate vector length");
    std::size_t at = 0;
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) law.set(k, i, j, v[at++]);
    return law;
  }

  bool is_zero() const {
    for (const T& x : c_)
      if (!jordan2::is_zero(x, tolerance_)) return false;
    return true;
  }

  /// Largest entry magnitude.
  double norm() const {
    double m = 0.0;
    for (const T& x : c_) m = std::max(m, magnitude(x));
    return m;
  }

  Law& operator+=(const Law& o) {
    check_same_dim(o);
    for (std::size_t a = 0; a < c_.size(); ++a) c_[a] += o.c_[a];
    return *this;
  }
  Law& operator-=(const Law& o) {
    check_same_dim(o);
    for (std::size_t a = 0; a < c_.size(); ++a) c_[a] -= o.c_[a];
    return *this;
  }
  Law& operator*=(const T& s) {
    for (T& x : c_) x *= s;
    return *this;
  }
  friend Law operator+(Law a, const Law& b) { return a += b; }
  friend Law operator-(Law a, const Law& b) { return a -= b; }
  friend Law operator*(const T& s, Law a) { return a *= s; }

  /// Exact equality of dimension and entries (tolerance is not compared).
  friend bool operator==(const Law& a, const Law& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

  /// Equality under the mode's comparison rule.
  bool approx_equal(const Law& o) const {
    if (dim_ != o.dim_) return false;
    if constexpr (is_exact_v<T>) {
      return c_ == o.c_;
    } else {
      const double scale = std::max({1.0, norm(), o.norm()});
      for (std::size_t a = 0; a < c_.size(); ++a)
        if (magnitude(T(c_[a] - o.c_[a])) > tolerance_ * scale) return false;
      return true;
    }
  }

  template <class U>
  Law<U> cast(double tolerance) const {
    Law<U> out(dim_, tolerance);
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) out.set(k, i, j, scalar_cast<U>((*this)(k, i, j)));
    return out;
  }

 private:
  std::size_t index(std::size_t k, std::size_t i, std::size_t j) const { return (k * dim_ + i) * dim_ + j; }
  void check_same_dim(const Law& o) const {
    if (o.dim_ != dim_) throw DimensionMismatch("laws of different dimensions");
  }

  std::size_t dim_ = 0;
  double tolerance_ = kDefaultTolerance;
  std::vector<T> c_;
};

/// Directions, cocycles and perturbation terms: same representation as a
/// law, with no Jordan-identity expectation.
template <class T>
using BilinearSym = Law<T>;

template <class T>
Vec<T> basis_vector(std::size_t n, std::size_t i) {
  Vec<T> v(n, T(0));
  v.at(i) = T(1);
  return v;
}

}  // namespace jordan2
