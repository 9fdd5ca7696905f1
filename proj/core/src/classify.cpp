#include "jordan2/classify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <Eigen/SVD>

namespace jordan2 {

std::string to_string(CanonicalClass c) {
  switch (c) {
    case CanonicalClass::Psi0:
      return "Psi0";
    case CanonicalClass::Psi1:
      return "Psi1";
    case CanonicalClass::Psi2:
      return "Psi2";
    case CanonicalClass::Psi3:
      return "Psi3";
    case CanonicalClass::Psi4:
      return "Psi4";
    case CanonicalClass::Psi5:
      return "Psi5";
    case CanonicalClass::Abelian:
      return "Abelian";
  }
  return "?";
}

std::string node_name(CanonicalClass c) {
  std::string s = to_string(c);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

CanonicalClass parse_class(const std::string& text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  for (CanonicalClass c : kAllClasses)
    if (node_name(c) == s) return c;
  if (s == "zero") return CanonicalClass::Abelian;
  throw ParseError("unknown class '" + text + "'");
}

Law<Rational> canonical_law(CanonicalClass c) {
  using R = Rational;
  const R half(1, 2);
  switch (c) {
    case CanonicalClass::Psi0:
      return Law<R>::from_matrix({{{R(1), R(0)}, {R(1), R(0)}, {R(0), R(1)}}});
    case CanonicalClass::Psi1:
      return Law<R>::from_matrix({{{R(1), R(0)}, {R(0), R(0)}, {R(0), R(1)}}});
    case CanonicalClass::Psi2:
      return Law<R>::from_matrix({{{R(0), R(0)}, {R(0), R(1)}, {R(0), R(0)}}});
    case CanonicalClass::Psi3:
      return Law<R>::from_matrix({{{R(0), R(1)}, {R(0), R(0)}, {R(0), R(0)}}});
    case CanonicalClass::Psi4:
      return Law<R>::from_matrix({{{R(1), R(0)}, {R(0), R(0)}, {R(0), half}}});
    case CanonicalClass::Psi5:
      return Law<R>::from_matrix({{{R(1), R(0)}, {R(-1), R(0)}, {R(0), R(1)}}});
    case CanonicalClass::Abelian:
      return Law<R>(2);
  }
  return Law<R>(2);
}

LinearMap<double> to_real(const AnyMap& f) {
  if (const auto* exact = std::get_if<LinearMap<Rational>>(&f)) return exact->cast<double>();
  return std::get<LinearMap<double>>(f);
}

bool is_exact(const AnyMap& f) { return std::holds_alternative<LinearMap<Rational>>(f); }

namespace {

enum class Decision { Zero, Nonzero };

// Exact mode: sign test. Approximate mode: the two-band rule documented on
// classify().
template <class T>
Decision decide(const T& q, double tol, double scale, const char* what) {
  if constexpr (is_exact_v<T>) {
    return sgn(q) == 0 ? Decision::Zero : Decision::Nonzero;
  } else {
    const double m = magnitude(q);
    const double s = std::max(1e-300, scale);
    if (m <= tol * s) return Decision::Zero;
    if (m > std::sqrt(tol) * s) return Decision::Nonzero;
    throw Indeterminate(std::string("classification quantity '") + what + "' is within tolerance of zero");
  }
}

template <class T>
Vec<T> scaled(const Vec<T>& v, const T& s) {
  Vec<T> out = v;
  for (T& x : out) x *= s;
  return out;
}

template <class T>
Vec<T> axpy(const Vec<T>& x, const T& a, const Vec<T>& y) {  // x + a y
  Vec<T> out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * y[i];
  return out;
}

template <class T>
T cross(const Vec<T>& a, const Vec<T>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

// First standard basis vector not parallel to u (u nonzero).
template <class T>
Vec<T> complement(const Vec<T>& u) {
  // e1 is parallel to u iff u2 = 0; exact test in rational mode, relative
  // test otherwise (the larger coordinate decides).
  if constexpr (is_exact_v<T>) {
    return sgn(u[1]) != 0 ? basis_vector<T>(2, 0) : basis_vector<T>(2, 1);
  } else {
    return std::fabs(u[1]) >= std::fabs(u[0]) ? basis_vector<T>(2, 0) : basis_vector<T>(2, 1);
  }
}

template <class T>
LinearMap<T> columns(const Vec<T>& c0, const Vec<T>& c1, double tol) {
  Matrix<T> m(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    m(i, 0) = c0[i];
    m(i, 1) = c1[i];
  }
  return LinearMap<T>(std::move(m), tol);
}

template <class T>
Vec<double> to_double_vec(const Vec<T>& v) {
  Vec<double> out;
  for (const T& x : v) out.push_back(scalar_cast<double>(x));
  return out;
}

// Parameters (a, b) of v ∘ v = a u + b v, by Cramer's rule on [u | v].
template <class T>
std::pair<T, T> unit_basis_params(const Law<T>& law, const Vec<T>& u, const Vec<T>& v) {
  const Vec<T> vv = mul(law, v, v);
  const T det = cross(u, v);
  return {T(cross(vv, v) / det), T(cross(u, vv) / det)};
}

template <class T>
void require_unit(const Law<T>& law, const Vec<T>& u) {
  const auto [a, b] = unit_system(law);
  Vec<T> r = a * u;
  const double scale = std::max(1.0, law.norm() * detail::vec_norm(u));
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!is_zero(T(r[i] - b[i]), std::sqrt(law.tolerance()), scale))
      throw PreconditionError("vector is not the unit of the law");
}

// Witness for the unital isotropy-free case: e2' = (v - (b/2) u) / sqrt(|D|/4).
template <class T>
AnyMap unital_witness(const Vec<T>& u, const Vec<T>& v, const T& b, const T& d, double tol) {
  const Vec<T> vp = axpy(v, T(-b / T(2)), u);
  if constexpr (is_exact_v<T>) {
    Rational root;
    if (exact_sqrt(Rational(abs(d) / 4), root)) return columns(u, scaled(vp, Rational(1 / root)), tol);
    const double r = std::sqrt(std::fabs(d.get_d()) / 4.0);
    return columns(to_double_vec(u), scaled(to_double_vec(vp), 1.0 / r), tol);
  } else {
    return columns(u, scaled(vp, 1.0 / std::sqrt(std::fabs(d) / 4.0)), tol);
  }
}

// Image of φ as an n × 3 matrix with columns φ(e_i, e_j), i <= j.
template <class T>
Matrix<T> image_matrix(const Law<T>& law) {
  Matrix<T> m(2, 3);
  std::size_t col = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = i; j < 2; ++j, ++col)
      for (std::size_t k = 0; k < 2; ++k) m(k, col) = law(k, i, j);
  return m;
}

template <class T>
Vec<T> vec_of(const Eigen::VectorXd& v) {
  Vec<T> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(T(v(i)));
  return out;
}

Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

template <class T>
ClassificationReport<T> classify_unital(const Law<T>& law, const Vec<T>& u) {
  ClassificationReport<T> r;
  r.unit = u;
  r.isotropy = isotropic_directions(law);
  r.image_rank = 2;
  const Vec<T> v = complement(u);
  const auto [a, b] = unit_basis_params(law, u, v);
  const T d = b * b + T(4) * a;
  const double s = std::max(1.0, std::max(magnitude(a), magnitude(b)));
  if (decide(d, law.tolerance(), s * s, "discriminant") == Decision::Zero) {
    r.cls = CanonicalClass::Psi1;
    r.witness = columns(u, axpy(v, T(-b / T(2)), u), law.tolerance());
    return r;
  }
  const bool positive = [&] {
    if constexpr (is_exact_v<T>) return sgn(d) > 0;
    else return d > 0;
  }();
  r.discriminant_sign = positive ? Sign::Positive : Sign::Negative;
  r.cls = positive ? CanonicalClass::Psi0 : CanonicalClass::Psi5;
  r.witness = unital_witness(u, v, b, d, law.tolerance());
  return r;
}

template <class T>
ClassificationReport<T> classify_nonunital(const Law<T>& law) {
  ClassificationReport<T> r;
  r.isotropy = isotropic_directions(law);
  const double tol = law.tolerance();
  const Matrix<T> img = image_matrix(law);

  int rank = 0;
  Vec<T> generator;
  if constexpr (is_exact_v<T>) {
    rank = static_cast<int>(jordan2::rank(img));
    for (std::size_t c = 0; c < 3 && generator.empty(); ++c)
      if (sgn(img(0, c)) != 0 || sgn(img(1, c)) != 0) generator = {img(0, c), img(1, c)};
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(img), Eigen::ComputeFullU);
    const auto sv = svd.singularValues();
    rank = decide(sv(1), tol, sv(0), "second singular value of the image") == Decision::Zero ? 1 : 2;
    generator = vec_of<T>(svd.matrixU().col(0));
  }
  r.image_rank = rank;

  if (rank == 2) {
    r.cls = CanonicalClass::Psi4;
    if (r.isotropy.is_all() || r.isotropy.directions.size() != 1)
      throw Indeterminate("non-unital rank-2 law without a unique isotropic direction");
    Vec<T> iso;
    if constexpr (is_exact_v<T>) {
      iso = direction_vector(r.isotropy.directions.front());
    } else {
      iso = direction_vector(r.isotropy.directions.front());
    }
    const Vec<T> w = complement(iso);
    const Vec<T> ww = mul(law, w, w);
    // w ∘ w = p w for the chosen complement; p is read off the larger
    // coordinate of w.
    const std::size_t at = magnitude(w[0]) >= magnitude(w[1]) ? 0 : 1;
    const T p = ww[at] / w[at];
    r.witness = columns(scaled(w, T(T(1) / p)), iso, tol);
    return r;
  }

  const Vec<T> ww = mul(law, generator, generator);
  const double s = law.norm() * std::pow(std::max({magnitude(generator[0]), magnitude(generator[1])}), 2);
  const T ww_size = magnitude(ww[0]) >= magnitude(ww[1]) ? ww[0] : ww[1];
  if (decide(ww_size, tol, s, "square of the image generator") == Decision::Nonzero) {
    r.cls = CanonicalClass::Psi2;
    // Annihilator = kernel of the unit-system matrix.
    const auto [a, rhs] = unit_system(law);
    Vec<T> ann;
    if constexpr (is_exact_v<T>) {
      const auto kernel = kernel_basis(a);
      if (kernel.size() != 1) throw PreconditionError("rank-1 law without a one-dimensional annihilator");
      ann = kernel.front();
    } else {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a), Eigen::ComputeFullV);
      ann = vec_of<T>(svd.matrixV().col(1));
    }
    const std::size_t at = magnitude(generator[0]) >= magnitude(generator[1]) ? 0 : 1;
    const T c = ww[at] / generator[at];
    r.witness = columns(ann, scaled(generator, T(T(1) / c)), tol);
    return r;
  }

  r.cls = CanonicalClass::Psi3;
  const std::array<Vec<T>, 3> candidates = {basis_vector<T>(2, 0), basis_vector<T>(2, 1), Vec<T>{T(1), T(1)}};
  std::size_t best = 0;
  double best_norm = -1.0;
  for (std::size_t c = 0; c < 3; ++c) {
    const Vec<T> sq = mul(law, candidates[c], candidates[c]);
    const double nrm = std::max(magnitude(sq[0]), magnitude(sq[1]));
    if constexpr (is_exact_v<T>) {
      if (sgn(sq[0]) != 0 || sgn(sq[1]) != 0) {
        best = c;
        break;
      }
    } else {
      if (nrm > best_norm) {
        best = c;
        best_norm = nrm;
      }
    }
  }
  r.witness = columns(candidates[best], mul(law, candidates[best], candidates[best]), tol);
  return r;
}

template <class T>
void check_dim2(const Law<T>& law) {
  if (law.dim() != 2) throw DimensionMismatch("classification requires dim = 2");
}

}  // namespace

template <class T>
T discriminant_in_unit_basis(const Law<T>& law, const Vec<T>& unit) {
  check_dim2(law);
  detail::check_len(law, unit);
  require_unit(law, unit);
  const auto [a, b] = unit_basis_params(law, unit, complement(unit));
  return b * b + T(4) * a;
}

template <class T>
ClassificationReport<T> classify(const Law<T>& law) {
  check_dim2(law);
  if (!is_jordan(law)) throw NotJordan("law does not satisfy the Jordan identity");

  const bool zero = [&] {
    if constexpr (is_exact_v<T>) return law.is_zero();
    else return decide(law.norm(), law.tolerance(), 1.0, "law norm") == Decision::Zero;
  }();
  if (zero) {
    ClassificationReport<T> r;
    r.cls = CanonicalClass::Abelian;
    r.isotropy = DirectionSet<T>::all();
    r.witness = LinearMap<T>::identity(2);
    return r;
  }

  if constexpr (is_exact_v<T>) {
    if (auto u = find_unit(law)) return classify_unital(law, *u);
  } else {
    const UnitFit<T> fit = fit_unit(law);
    if (decide(fit.residual, law.tolerance(), fit.scale, "unit residual") == Decision::Zero)
      return classify_unital(law, fit.u);
  }
  return classify_nonunital(law);
}

namespace {

template <class T>
bool verify_any(const Law<T>& a, CanonicalClass c, const AnyMap& f, double tol) {
  if constexpr (is_exact_v<T>) {
    if (const auto* exact = std::get_if<LinearMap<Rational>>(&f)) return act(a, *exact) == canonical_law(c);
  }
  const Law<double> real = a.template cast<double>(tol);
  LinearMap<double> g = to_real(f);
  g = LinearMap<double>(g.matrix(), tol);
  return act(real, g).approx_equal(canonical_law(c).cast<double>(tol));
}

}  // namespace

bool verify_witness(const Law<Rational>& a, CanonicalClass c, const AnyMap& f, double tol) {
  return verify_any(a, c, f, tol);
}

bool verify_witness(const Law<double>& a, CanonicalClass c, const AnyMap& f, double tol) {
  return verify_any(a, c, f, tol);
}

template Rational discriminant_in_unit_basis(const Law<Rational>&, const Vec<Rational>&);
template double discriminant_in_unit_basis(const Law<double>&, const Vec<double>&);
template ClassificationReport<Rational> classify(const Law<Rational>&);
template ClassificationReport<double> classify(const Law<double>&);

}  // namespace jordan2
