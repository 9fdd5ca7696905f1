#pragma once

#include <array>
#include <string>
#include <vector>

#include "jordan2/matrix.hpp"
#include "jordan2/scalar.hpp"

namespace jordan2 {

/// Exact real quadratic irrational rational + coeff * sqrt(radicand).
/// coeff == 0 means the value is rational; otherwise radicand > 0 is not the
/// square of a rational.
struct Surd {
  Rational rational;
  Rational coeff;
  Rational radicand;

  Surd() = default;
  Surd(Rational r) : rational(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Surd(Rational r, Rational c, Rational d);

  bool is_rational() const { return sgn(coeff) == 0; }
  bool is_zero() const { return is_rational() && sgn(rational) == 0; }
  double to_double() const;
  Surd reciprocal() const;
  std::string to_string() const;

  friend bool operator==(const Surd& a, const Surd& b);
};

template <class T>
struct DirectionCoord {
  using type = T;
};
template <>
struct DirectionCoord<Rational> {
  using type = Surd;
};

/// Point [x1 : x2] of the real projective line, normalized so the first
/// nonzero coordinate is exactly 1.
template <class T>
struct ProjectiveDirection {
  using Coord = typename DirectionCoord<T>::type;
  Coord x1;
  Coord x2;

  std::array<double, 2> to_double() const;
  friend bool operator==(const ProjectiveDirection&, const ProjectiveDirection&) = default;
};

using ExactDirection = ProjectiveDirection<Rational>;
using RealDirection = ProjectiveDirection<double>;

ExactDirection normalized_direction(const Surd& x1, const Surd& x2);
RealDirection normalized_direction(double x1, double x2, double tol);

/// Representative vector of a rational exact direction; throws if irrational.
Vec<Rational> direction_vector(const ExactDirection& d);
Vec<double> direction_vector(const RealDirection& d);

enum class DirectionSetKind { Finite, AllDirections };

/// Result of a projective root computation. The whole projective line is an
/// explicit variant, never an enumerated list.
template <class T>
struct DirectionSet {
  DirectionSetKind kind = DirectionSetKind::Finite;
  std::vector<ProjectiveDirection<T>> directions;

  static DirectionSet all() { return {DirectionSetKind::AllDirections, {}}; }
  bool is_all() const { return kind == DirectionSetKind::AllDirections; }
  bool empty() const { return kind == DirectionSetKind::Finite && directions.empty(); }
  bool contains(const ProjectiveDirection<T>& d) const;
};

/// Homogeneous quadratic xx*x1^2 + xy*x1*x2 + yy*x2^2.
template <class T>
struct BinaryQuadratic {
  T xx{0};
  T xy{0};
  T yy{0};

  T operator()(const T& x1, const T& x2) const { return xx * x1 * x1 + xy * x1 * x2 + yy * x2 * x2; }
  double scale() const { return std::max({magnitude(xx), magnitude(xy), magnitude(yy)}); }
};

/// Common real projective roots of two binary quadratics. Exact over
/// Rational (gcd on the chart x2 = 1 plus a direct check of [1:0]; real
/// roots by exact discriminant tests); tolerance-based over double.
DirectionSet<Rational> common_real_projective_roots(const BinaryQuadratic<Rational>& q1,
                                                    const BinaryQuadratic<Rational>& q2);
DirectionSet<double> common_real_projective_roots(const BinaryQuadratic<double>& q1,
                                                  const BinaryQuadratic<double>& q2,
                                                  double tol = kDefaultTolerance);

std::string to_string(const ExactDirection& d);
std::string to_string(const RealDirection& d);

}  // namespace jordan2
