#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

namespace jordan2 {

/// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Relative tolerance used by approximate modes unless the caller overrides it.
inline constexpr double kDefaultTolerance = 1e-9;

enum class ScalarKind { ExactRational, ApproxReal, ApproxComplex };

/// Arithmetic mode attached to laws and maps. The tolerance is ignored in
/// exact mode.
struct ScalarMode {
  ScalarKind kind = ScalarKind::ExactRational;
  double tolerance = 0.0;

  bool exact() const { return kind == ScalarKind::ExactRational; }
  friend bool operator==(const ScalarMode&, const ScalarMode&) = default;
};

std::string to_string(ScalarKind kind);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr ScalarKind kind = ScalarKind::ExactRational;
  static constexpr bool exact = true;
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
};

template <>
struct ScalarTraits<double> {
  static constexpr ScalarKind kind = ScalarKind::ApproxReal;
  static constexpr bool exact = false;
  static double magnitude(double x) { return std::fabs(x); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr ScalarKind kind = ScalarKind::ApproxComplex;
  static constexpr bool exact = false;
  static double magnitude(const Complex& x) { return std::abs(x); }
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <class T>
double magnitude(const T& x) {
  return ScalarTraits<T>::magnitude(x);
}

/// Zero test: exact in rational mode, |x| <= tol * max(1, scale) otherwise.
template <class T>
bool is_zero(const T& x, double tol, double scale = 1.0) {
  if constexpr (is_exact_v<T>) {
    return sgn(x) == 0;
  } else {
    return magnitude(x) <= tol * std::max(1.0, scale);
  }
}

/// Equality under the mode's comparison rule:
/// |a - b| <= tol * max(1, |a|, |b|) in approximate modes.
template <class T>
bool scalar_equal(const T& a, const T& b, double tol) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    const double scale = std::max({1.0, magnitude(a), magnitude(b)});
    return magnitude(T(a - b)) <= tol * scale;
  }
}

template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<From, Rational>) {
    return To(x.get_d());
  } else if constexpr (std::is_same_v<To, Rational>) {
    static_assert(std::is_same_v<From, double>, "only real values convert to Rational");
    return Rational(x);  // exact binary value of the double
  } else {
    return To(x);
  }
}

template <class T>
T from_int(long v) {
  return T(static_cast<double>(v));
}

template <>
inline Rational from_int<Rational>(long v) {
  return Rational(v);
}

/// Parses "p/q" (or a bare integer "p"). Throws ParseError on malformed or
/// unreduced input.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" text, including "0/1" and "n/1".
std::string format_rational(const Rational& x);

/// %.17g rendering used for all real output.
std::string format_real(double x);

/// Exact square root of a nonnegative rational, if it is a perfect square.
bool exact_sqrt(const Rational& x, Rational& root);

}  // namespace jordan2
