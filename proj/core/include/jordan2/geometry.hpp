#pragma once

// Linear geometry of the variety at a point: the endomorphism cocycle and
// orbit tangent space, the bilinear-pair operator δ_{φi}φj and the triple
// products, the space G(φ0), the plane criterion and the first-order check
// on one-parameter curves.

#include <map>
#include <vector>

#include "jordan2/identities.hpp"

namespace jordan2 {

/// Exponent vectors of the monomials of total degree <= max_degree in n
/// variables, graded: degree ascending, and lexicographic with
/// v1 > v2 > ... inside a degree (so x1² precedes x1x2 precedes x2²).
std::vector<std::vector<int>> graded_monomials(std::size_t n, int max_degree);

/// Coefficients of a vector-valued polynomial map in (x, y) of bidegree at
/// most (3, 1). Flat index (k · |X| + a) · |Y| + b for output coordinate k,
/// x-monomial a of graded_monomials(n, 3) and y-monomial b of
/// graded_monomials(n, 1).
template <class T>
class PolyMapCoeffs {
 public:
  PolyMapCoeffs() = default;
  explicit PolyMapCoeffs(std::size_t n)
      : n_(n), xs_(graded_monomials(n, 3)), ys_(graded_monomials(n, 1)), c_(n * xs_.size() * ys_.size(), T(0)) {}

  std::size_t dim() const { return n_; }
  const std::vector<std::vector<int>>& x_monomials() const { return xs_; }
  const std::vector<std::vector<int>>& y_monomials() const { return ys_; }
  const std::vector<T>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  std::size_t index(std::size_t k, std::size_t a, std::size_t b) const { return (k * xs_.size() + a) * ys_.size() + b; }
  T& at(std::size_t k, std::size_t a, std::size_t b) { return c_[index(k, a, b)]; }
  const T& at(std::size_t k, std::size_t a, std::size_t b) const { return c_[index(k, a, b)]; }

  bool is_zero(double tol = kDefaultTolerance) const {
    for (const T& v : c_)
      if (!jordan2::is_zero(v, tol)) return false;
    return true;
  }

  Vec<T> evaluate(const Vec<T>& x, const Vec<T>& y) const {
    Vec<T> out(n_, T(0));
    for (std::size_t a = 0; a < xs_.size(); ++a) {
      const T xa = power_product(xs_[a], x);
      for (std::size_t b = 0; b < ys_.size(); ++b) {
        const T m = xa * power_product(ys_[b], y);
        for (std::size_t k = 0; k < n_; ++k) out[k] += at(k, a, b) * m;
      }
    }
    return out;
  }

  PolyMapCoeffs& operator+=(const PolyMapCoeffs& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  PolyMapCoeffs& operator-=(const PolyMapCoeffs& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  PolyMapCoeffs& operator*=(const T& s) {
    for (T& v : c_) v *= s;
    return *this;
  }
  friend PolyMapCoeffs operator+(PolyMapCoeffs a, const PolyMapCoeffs& b) { return a += b; }
  friend PolyMapCoeffs operator-(PolyMapCoeffs a, const PolyMapCoeffs& b) { return a -= b; }
  friend bool operator==(const PolyMapCoeffs& a, const PolyMapCoeffs& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  static T power_product(const std::vector<int>& e, const Vec<T>& v) {
    T p(1);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int r = 0; r < e[i]; ++r) p *= v[i];
    return p;
  }

  std::size_t n_ = 0;
  std::vector<std::vector<int>> xs_;
  std::vector<std::vector<int>> ys_;
  std::vector<T> c_;
};

namespace detail {

// Sparse polynomial in (x1..xn, y1..yn); keys are exponent vectors of
// length 2n.
template <class T>
using Poly = std::map<std::vector<int>, T>;

template <class T>
using VecPoly = std::vector<Poly<T>>;

template <class T>
void add_term(Poly<T>& p, const std::vector<int>& e, const T& c) {
  if constexpr (is_exact_v<T>) {
    if (sgn(c) == 0) return;
  }
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if constexpr (is_exact_v<T>) {
      if (sgn(it->second) == 0) p.erase(it);
    }
  }
}

template <class T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, T(ca * cb));
    }
  return out;
}

// The identity vectors X and Y as polynomial maps.
template <class T>
VecPoly<T> variable_vector(std::size_t n, bool y) {
  VecPoly<T> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(2 * n, 0);
    e[(y ? n : 0) + i] = 1;
    out[i][e] = T(1);
  }
  return out;
}

// φ(P, Q)_k = Σ_{i,j} c[k][i][j] P_i Q_j.
template <class T>
VecPoly<T> apply(const BilinearSym<T>& phi, const VecPoly<T>& p, const VecPoly<T>& q) {
  const std::size_t n = phi.dim();
  VecPoly<T> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (p[i].empty() || q[j].empty()) continue;
      const Poly<T> prod = poly_mul(p[i], q[j]);
      for (std::size_t k = 0; k < n; ++k) {
        const T& c = phi(k, i, j);
        if constexpr (is_exact_v<T>) {
          if (sgn(c) == 0) continue;
        }
        for (const auto& [e, v] : prod) add_term(out[k], e, T(c * v));
      }
    }
  return out;
}

template <class T>
void accumulate(VecPoly<T>& into, const VecPoly<T>& p, const T& sign) {
  for (std::size_t k = 0; k < into.size(); ++k)
    for (const auto& [e, v] : p[k]) add_term(into[k], e, T(sign * v));
}

template <class T>
PolyMapCoeffs<T> to_coeffs(const VecPoly<T>& p) {
  const std::size_t n = p.size();
  PolyMapCoeffs<T> out(n);
  const auto& xs = out.x_monomials();
  const auto& ys = out.y_monomials();
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [e, v] : p[k]) {
      const std::vector<int> ex(e.begin(), e.begin() + n);
      const std::vector<int> ey(e.begin() + n, e.end());
      const auto a = std::find(xs.begin(), xs.end(), ex);
      const auto b = std::find(ys.begin(), ys.end(), ey);
      if (a == xs.end() || b == ys.end()) throw PreconditionError("polynomial map exceeds bidegree (3, 1)");
      out.at(k, a - xs.begin(), b - ys.begin()) += v;
    }
  return out;
}

template <class T>
void check_same_dim(const BilinearSym<T>& a, const BilinearSym<T>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("bilinear maps of different dimensions");
}

}  // namespace detail

/// δ_{φ0} f (x, y) = φ0(f x, y) + φ0(x, f y) - f(φ0(x, y)).
template <class T>
BilinearSym<T> cocycle_endo(const Law<T>& law, const LinearMap<T>& f) {
  const std::size_t n = law.dim();
  if (f.dim() != n) throw DimensionMismatch("cocycle_endo: map and law dimensions differ");
  BilinearSym<T> out(n, law.tolerance());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        T v(0);
        for (std::size_t p = 0; p < n; ++p) v += law(k, p, j) * f(p, i) + law(k, i, p) * f(p, j);
        for (std::size_t m = 0; m < n; ++m) v -= f(k, m) * law(m, i, j);
        out.set(k, i, j, v);
      }
  return out;
}

/// φi(φj(X,X), φk(X,Y)) - φi(X, φj(φk(X,X), Y)).
template <class T>
PolyMapCoeffs<T> triple_compose(const BilinearSym<T>& pi, const BilinearSym<T>& pj, const BilinearSym<T>& pk) {
  detail::check_same_dim(pi, pj);
  detail::check_same_dim(pi, pk);
  using namespace detail;
  const std::size_t n = pi.dim();
  const VecPoly<T> x = variable_vector<T>(n, false);
  const VecPoly<T> y = variable_vector<T>(n, true);
  VecPoly<T> out = apply(pi, apply(pj, x, x), apply(pk, x, y));
  accumulate(out, apply(pi, x, apply(pj, apply(pk, x, x), y)), T(-1));
  return to_coeffs(out);
}

/// Sum of triple_compose over the six orderings of the arguments.
template <class T>
PolyMapCoeffs<T> sym_triple(const BilinearSym<T>& a, const BilinearSym<T>& b, const BilinearSym<T>& c) {
  PolyMapCoeffs<T> out = triple_compose(a, b, c);
  out += triple_compose(a, c, b);
  out += triple_compose(b, a, c);
  out += triple_compose(b, c, a);
  out += triple_compose(c, a, b);
  out += triple_compose(c, b, a);
  return out;
}

/// δ_{φi}φj: the derivative of the Jordan residual at φi in the direction
/// φj (six terms, linear in φj).
template <class T>
PolyMapCoeffs<T> delta_bilinear(const BilinearSym<T>& pi, const BilinearSym<T>& pj) {
  detail::check_same_dim(pi, pj);
  using namespace detail;
  const std::size_t n = pi.dim();
  const VecPoly<T> x = variable_vector<T>(n, false);
  const VecPoly<T> y = variable_vector<T>(n, true);
  const VecPoly<T> ixx = apply(pi, x, x);
  const VecPoly<T> jxx = apply(pj, x, x);
  const VecPoly<T> ixy = apply(pi, x, y);
  const VecPoly<T> jxy = apply(pj, x, y);
  VecPoly<T> out = apply(pi, ixx, jxy);
  accumulate(out, apply(pi, jxx, ixy), T(1));
  accumulate(out, apply(pj, ixx, ixy), T(1));
  accumulate(out, apply(pj, x, apply(pi, ixx, y)), T(-1));
  accumulate(out, apply(pi, x, apply(pj, ixx, y)), T(-1));
  accumulate(out, apply(pi, x, apply(pi, jxx, y)), T(-1));
  return to_coeffs(out);
}

template <class T>
struct TangentReport {
  int orbit_dim = 0;
  std::vector<BilinearSym<T>> tangent_basis;
  int g_dim = 0;
  std::vector<BilinearSym<T>> g_basis;
};

/// Elementary endomorphism E_{pq}: e_q ↦ e_p.
template <class T>
LinearMap<T> elementary_map(std::size_t n, std::size_t p, std::size_t q) {
  Matrix<T> m(n, n);
  m(p, q) = T(1);
  return LinearMap<T>(std::move(m));
}

/// Rank of f ↦ δ_{φ} f and a basis of its image (the orbit tangent space).
/// Exact over Rational.
template <class T>
std::pair<int, std::vector<BilinearSym<T>>> orbit_tangent(const Law<T>& law) {
  const std::size_t n = law.dim();
  std::vector<BilinearSym<T>> images;
  Matrix<T> m(law.sym_size(), n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      images.push_back(cocycle_endo(law, elementary_map<T>(n, p, q)));
      const Vec<T> col = images.back().sym_coords();
      for (std::size_t r = 0; r < col.size(); ++r) m(r, p * n + q) = col[r];
    }
  const RowEchelon<T> e = row_reduce(m, law.tolerance());
  std::vector<BilinearSym<T>> basis;
  for (std::size_t c : e.pivots) basis.push_back(images[c]);
  return {static_cast<int>(basis.size()), std::move(basis)};
}

template <class T>
int orbit_dim(const Law<T>& law) {
  return orbit_tangent(law).first;
}

/// Kernel of φ ↦ δ_{law} φ on symmetric bilinear maps: dimension and basis.
template <class T>
std::pair<int, std::vector<BilinearSym<T>>> g_space(const Law<T>& law) {
  const std::size_t n = law.dim();
  const std::size_t s = law.sym_size();
  Matrix<T> m;
  for (std::size_t c = 0; c < s; ++c) {
    Vec<T> coords(s, T(0));
    coords[c] = T(1);
    const PolyMapCoeffs<T> img = delta_bilinear(law, BilinearSym<T>::from_sym_coords(n, coords));
    if (c == 0) m = Matrix<T>(img.size(), s);
    for (std::size_t r = 0; r < img.size(); ++r) m(r, c) = img.coeffs()[r];
  }
  std::vector<BilinearSym<T>> basis;
  for (const Vec<T>& v : kernel_basis(m, law.tolerance()))
    basis.push_back(BilinearSym<T>::from_sym_coords(n, v, law.tolerance()));
  return {static_cast<int>(basis.size()), std::move(basis)};
}

template <class T>
TangentReport<T> tangent_report(const Law<T>& law) {
  TangentReport<T> r;
  std::tie(r.orbit_dim, r.tangent_basis) = orbit_tangent(law);
  std::tie(r.g_dim, r.g_basis) = g_space(law);
  return r;
}

/// The plane spanned by 0, p1, p2 lies in the variety iff δ_{p1}p2 and
/// δ_{p2}p1 both vanish. Throws PreconditionError unless both are Jordan.
template <class T>
bool plane_in_variety(const BilinearSym<T>& p1, const BilinearSym<T>& p2) {
  if (!is_jordan(p1) || !is_jordan(p2)) throw PreconditionError("plane_in_variety needs two Jordan laws");
  return delta_bilinear(p1, p2).is_zero(p1.tolerance()) && delta_bilinear(p2, p1).is_zero(p1.tolerance());
}

/// Curve t ↦ Σ_k t^k coeffs[k] with coeffs[0] the base point.
template <class T>
struct PolynomialCurve {
  std::vector<BilinearSym<T>> coeffs;
};

/// Leading direction φ1 of curve - base lies in G(base). True for a constant
/// curve. Throws PreconditionError unless curve(0) = base.
template <class T>
bool first_order_check(const Law<T>& base, const PolynomialCurve<T>& curve) {
  if (curve.coeffs.empty() || !curve.coeffs.front().approx_equal(base))
    throw PreconditionError("curve does not pass through the base law at t = 0");
  for (std::size_t k = 1; k < curve.coeffs.size(); ++k) {
    if (curve.coeffs[k].is_zero()) continue;
    return delta_bilinear(base, curve.coeffs[k]).is_zero(base.tolerance());
  }
  return true;
}

}  // namespace jordan2
