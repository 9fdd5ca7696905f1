#include "jordan2/projective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jordan2/errors.hpp"

namespace jordan2 {

Surd::Surd(Rational r, Rational c, Rational d) : rational(std::move(r)), coeff(std::move(c)), radicand(std::move(d)) {
  if (sgn(radicand) < 0) throw PreconditionError("negative radicand");
  Rational root;
  if (sgn(coeff) == 0 || sgn(radicand) == 0) {
    coeff = 0;
    radicand = 0;
  } else if (exact_sqrt(radicand, root)) {
    rational += coeff * root;
    coeff = 0;
    radicand = 0;
  }
}

double Surd::to_double() const {
  return rational.get_d() + coeff.get_d() * std::sqrt(radicand.get_d());
}

Surd Surd::reciprocal() const {
  if (is_zero()) throw PreconditionError("reciprocal of zero");
  if (is_rational()) return Surd(Rational(1 / rational));
  // 1 / (r + c sqrt d) = (r - c sqrt d) / (r^2 - c^2 d); the norm is nonzero
  // because sqrt d is irrational.
  const Rational norm = rational * rational - coeff * coeff * radicand;
  return Surd(Rational(rational / norm), Rational(-coeff / norm), radicand);
}

std::string Surd::to_string() const {
  if (is_rational()) return format_rational(rational);
  std::string s = format_rational(rational);
  s += sgn(coeff) < 0 ? " - " : " + ";
  s += format_rational(abs(coeff)) + "*sqrt(" + format_rational(radicand) + ")";
  return s;
}

bool operator==(const Surd& a, const Surd& b) {
  if (a.rational != b.rational) return false;
  if (a.is_rational() || b.is_rational()) return a.is_rational() && b.is_rational();
  return sgn(a.coeff) == sgn(b.coeff) && a.coeff * a.coeff * a.radicand == b.coeff * b.coeff * b.radicand;
}

template <>
std::array<double, 2> ProjectiveDirection<Rational>::to_double() const {
  return {x1.to_double(), x2.to_double()};
}

template <>
std::array<double, 2> ProjectiveDirection<double>::to_double() const {
  return {x1, x2};
}

ExactDirection normalized_direction(const Surd& x1, const Surd& x2) {
  if (x1.is_zero()) {
    if (x2.is_zero()) throw PreconditionError("projective direction [0:0]");
    return {Surd(Rational(0)), Surd(Rational(1))};
  }
  const Surd inv = x1.reciprocal();
  // x2 / x1 stays inside Q(sqrt d) only when at most one of them is
  // irrational, which is all this module ever produces.
  if (!x1.is_rational() && !x2.is_rational()) throw PreconditionError("direction with two irrational coordinates");
  Surd ratio;
  if (x2.is_rational()) {
    ratio = Surd(Rational(x2.rational * inv.rational), Rational(x2.rational * inv.coeff), inv.radicand);
  } else {
    ratio = Surd(Rational(x2.rational * inv.rational), Rational(x2.coeff * inv.rational), x2.radicand);
  }
  return {Surd(Rational(1)), ratio};
}

RealDirection normalized_direction(double x1, double x2, double tol) {
  const double n = std::hypot(x1, x2);
  if (n == 0.0) throw PreconditionError("projective direction [0:0]");
  if (std::fabs(x1) / n <= tol) return {0.0, 1.0};
  return {1.0, x2 / x1};
}

Vec<Rational> direction_vector(const ExactDirection& d) {
  if (!d.x1.is_rational() || !d.x2.is_rational())
    throw PreconditionError("direction is irrational; no rational representative");
  return {d.x1.rational, d.x2.rational};
}

Vec<double> direction_vector(const RealDirection& d) { return {d.x1, d.x2}; }

template <class T>
bool DirectionSet<T>::contains(const ProjectiveDirection<T>& d) const {
  if (is_all()) return true;
  return std::find(directions.begin(), directions.end(), d) != directions.end();
}

template struct DirectionSet<Rational>;
template struct DirectionSet<double>;

namespace {

// Univariate polynomials over Q, coefficients from low to high degree.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly poly_mod(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

UPoly poly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Real roots of a nonzero polynomial of degree <= 2 as exact surds.
std::vector<Surd> real_roots(UPoly p) {
  trim(p);
  std::vector<Surd> roots;
  if (p.size() <= 1) return roots;
  if (p.size() == 2) {
    roots.emplace_back(Rational(-p[0] / p[1]));
    return roots;
  }
  const Rational& a = p[2];
  const Rational& b = p[1];
  const Rational& c = p[0];
  const Rational disc = b * b - 4 * a * c;
  if (sgn(disc) < 0) return roots;
  const Rational center = -b / (2 * a);
  if (sgn(disc) == 0) {
    roots.emplace_back(center);
    return roots;
  }
  const Rational half = 1 / (2 * a);
  roots.emplace_back(center, Rational(-abs(half)), disc);
  roots.emplace_back(center, Rational(abs(half)), disc);
  return roots;
}

UPoly chart_poly(const BinaryQuadratic<Rational>& q) { return {q.yy, q.xy, q.xx}; }

bool is_zero_quadratic(const BinaryQuadratic<Rational>& q) {
  return sgn(q.xx) == 0 && sgn(q.xy) == 0 && sgn(q.yy) == 0;
}

void push_unique(std::vector<ExactDirection>& out, const ExactDirection& d) {
  if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
}

std::vector<ExactDirection> affine_directions(const UPoly& p) {
  std::vector<ExactDirection> out;
  for (const Surd& z : real_roots(p)) push_unique(out, normalized_direction(z, Surd(Rational(1))));
  return out;
}

}  // namespace

DirectionSet<Rational> common_real_projective_roots(const BinaryQuadratic<Rational>& q1,
                                                    const BinaryQuadratic<Rational>& q2) {
  const bool z1 = is_zero_quadratic(q1);
  const bool z2 = is_zero_quadratic(q2);
  if (z1 && z2) return DirectionSet<Rational>::all();

  DirectionSet<Rational> out;
  const ExactDirection infinity{Surd(Rational(1)), Surd(Rational(0))};
  if (z1 || z2) {
    const BinaryQuadratic<Rational>& q = z1 ? q2 : q1;
    if (sgn(q.xx) == 0) push_unique(out.directions, infinity);
    for (const auto& d : affine_directions(chart_poly(q))) push_unique(out.directions, d);
    return out;
  }
  if (sgn(q1.xx) == 0 && sgn(q2.xx) == 0) push_unique(out.directions, infinity);
  const UPoly g = poly_gcd(chart_poly(q1), chart_poly(q2));
  for (const auto& d : affine_directions(g)) push_unique(out.directions, d);
  return out;
}

namespace {

struct UnitDir {
  double x1;
  double x2;
};

UnitDir unit(double x1, double x2) {
  const double n = std::hypot(x1, x2);
  // Canonical half of the circle so antipodal duplicates collapse.
  if (x1 < 0 || (x1 == 0 && x2 < 0)) return {-x1 / n, -x2 / n};
  return {x1 / n, x2 / n};
}

void candidate_roots(const BinaryQuadratic<double>& q, double tol, double scale, std::vector<UnitDir>& out) {
  const double s = tol * std::max(1.0, scale);
  if (std::fabs(q.xx) <= s) out.push_back({1.0, 0.0});
  if (std::fabs(q.xx) <= s) {
    if (std::fabs(q.xy) > s) out.push_back(unit(-q.yy / q.xy, 1.0));
    return;
  }
  const double disc = q.xy * q.xy - 4.0 * q.xx * q.yy;
  const double disc_tol = tol * std::max(1.0, scale * scale);
  if (disc < -disc_tol) return;
  if (disc <= disc_tol) {
    out.push_back(unit(-q.xy / (2.0 * q.xx), 1.0));
    return;
  }
  const double sq = std::sqrt(disc);
  const double t = -0.5 * (q.xy + std::copysign(sq, q.xy));
  // Roots t / xx and yy / t, in the numerically stable arrangement.
  out.push_back(unit(t / q.xx, 1.0));
  if (t != 0.0) out.push_back(unit(q.yy / t, 1.0));
}

}  // namespace

DirectionSet<double> common_real_projective_roots(const BinaryQuadratic<double>& q1,
                                                  const BinaryQuadratic<double>& q2, double tol) {
  const double scale = std::max(q1.scale(), q2.scale());
  const double s = tol * std::max(1.0, scale);
  const bool z1 = q1.scale() <= s;
  const bool z2 = q2.scale() <= s;
  if (z1 && z2) return DirectionSet<double>::all();

  std::vector<UnitDir> candidates;
  if (!z1) candidate_roots(q1, tol, scale, candidates);
  if (!z2) candidate_roots(q2, tol, scale, candidates);

  DirectionSet<double> out;
  std::vector<UnitDir> accepted;
  for (const UnitDir& c : candidates) {
    if (std::fabs(q1(c.x1, c.x2)) > s || std::fabs(q2(c.x1, c.x2)) > s) continue;
    const bool dup = std::any_of(accepted.begin(), accepted.end(), [&](const UnitDir& a) {
      return std::fabs(a.x1 * c.x2 - a.x2 * c.x1) <= 1e-6;
    });
    if (dup) continue;
    accepted.push_back(c);
    out.directions.push_back(normalized_direction(c.x1, c.x2, tol));
  }
  return out;
}

std::string to_string(const ExactDirection& d) { return "[" + d.x1.to_string() + " : " + d.x2.to_string() + "]"; }

std::string to_string(const RealDirection& d) {
  return "[" + format_real(d.x1) + " : " + format_real(d.x2) + "]";
}

}  // namespace jordan2
