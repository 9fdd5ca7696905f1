#pragma once

// Evaluation of the Jordan identity and the dimension-2 invariants used by
// the classifier: unit element, isotropic directions, one-dimensional
// ideals and simplicity. Everything here is a pure function of its
// arguments.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "jordan2/law.hpp"
#include "jordan2/linear_map.hpp"
#include "jordan2/projective.hpp"
#include "jordan2/sj_system.hpp"

namespace jordan2 {

namespace detail {

template <class T>
void check_len(const Law<T>& law, const Vec<T>& v) {
  if (v.size() != law.dim()) throw DimensionMismatch("vector length does not match law dimension");
}

template <class T>
void require_dim2(const Law<T>& law, const char* what) {
  if (law.dim() != 2) throw DimensionMismatch(std::string(what) + " requires dim = 2");
}

template <class T>
double vec_norm(const Vec<T>& v) {
  double m = 0.0;
  for (const T& x : v) m = std::max(m, magnitude(x));
  return m;
}

}  // namespace detail

/// φ(x, y) = Σ x_i y_j c[·][i][j].
template <class T>
Vec<T> mul(const Law<T>& law, const Vec<T>& x, const Vec<T>& y) {
  detail::check_len(law, x);
  detail::check_len(law, y);
  const std::size_t n = law.dim();
  Vec<T> out(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    if constexpr (is_exact_v<T>) {
      if (sgn(x[i]) == 0) continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const T xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += xy * law(k, i, j);
    }
  }
  return out;
}

/// The two sides of the Jordan identity, φ(φ(x,x),φ(x,y)) and φ(x,φ(φ(x,x),y)).
template <class T>
std::pair<Vec<T>, Vec<T>> jordan_sides(const Law<T>& law, const Vec<T>& x, const Vec<T>& y) {
  const Vec<T> xx = mul(law, x, x);
  return {mul(law, xx, mul(law, x, y)), mul(law, x, mul(law, xx, y))};
}

template <class T>
Vec<T> jordan_residual(const Law<T>& law, const Vec<T>& x, const Vec<T>& y) {
  auto [lhs, rhs] = jordan_sides(law, x, y);
  for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= rhs[k];
  return lhs;
}

/// Decides the Jordan identity.
///
/// The residual is a polynomial of degree at most 3 in each x-coordinate and
/// at most 1 in each y-coordinate, so it vanishes identically iff it
/// vanishes on the grid x ∈ {0,1,2,3}^n, y ∈ {0,1}^n. Over Rational this is an
/// exact decision; in approximate modes each grid residual must be within
/// tolerance of zero relative to |c|³|x|³|y|.
template <class T>
bool is_jordan(const Law<T>& law) {
  const std::size_t n = law.dim();
  const double law_scale = std::pow(law.norm(), 3);
  std::vector<int> xs(n, 0), ys(n, 0);
  const auto advance = [](std::vector<int>& digits, int base) {
    for (int& d : digits) {
      if (++d < base) return true;
      d = 0;
    }
    return false;
  };
  do {
    Vec<T> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = from_int<T>(xs[i]);
    std::fill(ys.begin(), ys.end(), 0);
    do {
      Vec<T> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = from_int<T>(ys[i]);
      const auto [lhs, rhs] = jordan_sides(law, x, y);
      // Both sides are sums of products of three structure constants, so the
      // rounding scale is |c|³ |x|³ |y| rather than the (possibly cancelled)
      // size of either side.
      const double scale = std::max({detail::vec_norm(lhs), detail::vec_norm(rhs),
                                     law_scale * std::pow(detail::vec_norm(x), 3) * detail::vec_norm(y)});
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(T(lhs[k] - rhs[k]), law.tolerance(), scale)) return false;
    } while (advance(ys, 2));
  } while (advance(xs, 4));
  return true;
}

/// The twelve defining residuals in their fixed order, each (left side) - (right side).
template <class T>
std::array<T, 12> sj_residuals(const Law<T>& law) {
  detail::require_dim2(law, "sj_residuals");
  const std::array<T, 6> x = law_coords(law);
  std::array<T, 12> out;
  const auto& polys = sj_polynomials();
  for (std::size_t e = 0; e < 12; ++e) out[e] = evaluate(polys[e], x);
  return out;
}

/// Indexed coefficient system of the Jordan identity.
///
/// Writing x∘x = x_i x_p a_{ip}^h e_h, the identity is
///   Σ_{h,l} a_{ip}^h a_{kj}^l a_{hl}^r - a_{ip}^h a_{hj}^l a_{kl}^r = 0
/// after symmetrizing over the three x-indices (i, p, k). One value is
/// returned per x-index multiset i <= p <= k, y-index j and output index r,
/// in that nesting order; each is the sum over the six orderings of (i,p,k).
template <class T>
std::vector<T> j2_residuals(const Law<T>& law) {
  const std::size_t n = law.dim();
  std::vector<T> out;
  const auto term = [&](std::size_t i, std::size_t p, std::size_t k, std::size_t j, std::size_t r) {
    T v(0);
    for (std::size_t h = 0; h < n; ++h) {
      const T& a = law(h, i, p);
      if constexpr (is_exact_v<T>) {
        if (sgn(a) == 0) continue;
      }
      for (std::size_t l = 0; l < n; ++l) v += a * (law(l, k, j) * law(r, h, l) - law(l, h, j) * law(r, k, l));
    }
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = i; p < n; ++p)
      for (std::size_t k = p; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t r = 0; r < n; ++r) {
            const std::array<std::array<std::size_t, 3>, 6> perms = {{{i, p, k}, {i, k, p}, {p, i, k},
                                                                     {p, k, i}, {k, i, p}, {k, p, i}}};
            T v(0);
            for (const auto& s : perms) v += term(s[0], s[1], s[2], j, r);
            out.push_back(v);
          }
  return out;
}

/// Agreement of the three independent decision routes for a dim-2 law.
struct IdentityConsistency {
  bool grid = false;  // is_jordan
  bool sj = false;    // all defining residuals vanish
  bool j2 = false;    // all indexed residuals vanish
  bool agree() const { return grid == sj && sj == j2; }
};

template <class T>
IdentityConsistency identity_consistency(const Law<T>& law) {
  IdentityConsistency c;
  c.grid = is_jordan(law);
  const double scale = std::pow(std::max(1.0, law.norm()), 3);
  c.sj = true;
  for (const T& v : sj_residuals(law)) c.sj = c.sj && is_zero(v, law.tolerance(), scale);
  c.j2 = true;
  for (const T& v : j2_residuals(law)) c.j2 = c.j2 && is_zero(v, law.tolerance(), scale);
  return c;
}

/// GL-action (φ, f) = f⁻¹ ∘ φ ∘ (f, f): the structure constants of φ in the
/// basis {f(e_1), ..., f(e_n)}. Throws SingularMap for singular f.
template <class T>
Law<T> act(const Law<T>& law, const LinearMap<T>& f) {
  const std::size_t n = law.dim();
  if (f.dim() != n) throw DimensionMismatch("act: map and law dimensions differ");
  const LinearMap<T> inv = f.inverse();
  Law<T> out(n, law.tolerance());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec<T> fi(n), fj(n);
      for (std::size_t r = 0; r < n; ++r) {
        fi[r] = f(r, i);
        fj[r] = f(r, j);
      }
      const Vec<T> image = inv.apply(mul(law, fi, fj));
      for (std::size_t k = 0; k < n; ++k) out.set(k, i, j, image[k]);
    }
  return out;
}

/// Linear system φ(u, e_j) = e_j for all j: n² equations in the n unknowns u.
template <class T>
std::pair<Matrix<T>, Vec<T>> unit_system(const Law<T>& law) {
  const std::size_t n = law.dim();
  Matrix<T> a(n * n, n);
  Vec<T> b(n * n, T(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = k * n + j;
      for (std::size_t i = 0; i < n; ++i) a(row, i) = law(k, i, j);
      if (k == j) b[row] = T(1);
    }
  return {std::move(a), std::move(b)};
}

/// Least-squares fit of the unit system in approximate modes.
template <class T>
struct UnitFit {
  Vec<T> u;
  double residual = 0.0;  // max-norm of A u - b
  double scale = 1.0;     // max(1, |A| |u|), the backward-error scale
  bool full_rank = true;
};

template <class T>
UnitFit<T> fit_unit(const Law<T>& law) {
  static_assert(!is_exact_v<T>, "fit_unit is for approximate modes");
  const auto [a, b] = unit_system(law);
  UnitFit<T> fit;
  const Matrix<T> at = a.transpose();
  const Matrix<T> normal = at * a;
  const Vec<T> rhs = at * b;
  const SolveResult<T> s = solve(normal, rhs, law.tolerance() * law.tolerance());
  fit.full_rank = s.status == SolveStatus::Unique;
  fit.u = s.x.empty() ? Vec<T>(law.dim(), T(0)) : s.x;
  Vec<T> r = a * fit.u;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  fit.residual = detail::vec_norm(r);
  fit.scale = std::max(1.0, a.max_magnitude() * detail::vec_norm(fit.u));
  return fit;
}

/// The unit element, if any. Throws AmbiguousUnit if the unit system is
/// consistent but underdetermined (a second solution u' would make u - u' a
/// nonzero annihilator with u ∘ (u - u') = u - u', so this is unreachable for
/// commutative laws; the check stays as a guard).
template <class T>
std::optional<Vec<T>> find_unit(const Law<T>& law) {
  if constexpr (is_exact_v<T>) {
    const auto [a, b] = unit_system(law);
    const SolveResult<T> s = solve(a, b);
    switch (s.status) {
      case SolveStatus::Inconsistent:
        return std::nullopt;
      case SolveStatus::Underdetermined:
        throw AmbiguousUnit("unit system has multiple solutions");
      case SolveStatus::Unique:
        return s.x;
    }
    return std::nullopt;
  } else {
    const UnitFit<T> fit = fit_unit(law);
    if (fit.residual > law.tolerance() * fit.scale) return std::nullopt;
    if (!fit.full_rank) throw AmbiguousUnit("unit system has multiple solutions");
    return fit.u;
  }
}

/// The two coordinate quadratics of x ↦ φ(x, x) for a dim-2 law.
template <class T>
std::array<BinaryQuadratic<T>, 2> square_quadratics(const Law<T>& law) {
  detail::require_dim2(law, "square_quadratics");
  std::array<BinaryQuadratic<T>, 2> q;
  for (std::size_t k = 0; k < 2; ++k) q[k] = {law(k, 0, 0), T(2) * law(k, 0, 1), law(k, 1, 1)};
  return q;
}

/// Real directions [x1:x2] with φ(x, x) = 0. The zero law yields the
/// all-directions marker.
template <class T>
DirectionSet<T> isotropic_directions(const Law<T>& law) {
  detail::require_dim2(law, "isotropic_directions");
  const auto q = square_quadratics(law);
  if constexpr (is_exact_v<T>) {
    return common_real_projective_roots(q[0], q[1]);
  } else {
    return common_real_projective_roots(q[0], q[1], law.tolerance());
  }
}

/// Directions v spanning a one-dimensional ideal: φ(v, e_1) ∥ v and
/// φ(v, e_2) ∥ v. Each parallelism condition det[v, φ(v, e_j)] = 0 is a
/// binary quadratic in v.
template <class T>
DirectionSet<T> find_ideals_1d(const Law<T>& law) {
  detail::require_dim2(law, "find_ideals_1d");
  std::array<BinaryQuadratic<T>, 2> q;
  for (std::size_t j = 0; j < 2; ++j) q[j] = {law(1, 0, j), T(law(1, 1, j) - law(0, 0, j)), T(-law(0, 1, j))};
  if constexpr (is_exact_v<T>) {
    return common_real_projective_roots(q[0], q[1]);
  } else {
    return common_real_projective_roots(q[0], q[1], law.tolerance());
  }
}

/// In dimension 2 proper nonzero ideals are lines, so simplicity means no
/// isotropic direction and no invariant line.
template <class T>
bool is_simple(const Law<T>& law) {
  detail::require_dim2(law, "is_simple");
  return isotropic_directions(law).empty() && find_ideals_1d(law).empty();
}

}  // namespace jordan2
