#pragma once

#include <array>
#include <vector>

#include "jordan2/law.hpp"

namespace jordan2 {

/// Coordinate order of the dimension-2 variety: (a1, a2, b1, b2, c1, c2).
using Coords6 = std::array<double, 6>;

/// Monomial coeff * a1^e0 a2^e1 b1^e2 b2^e3 c1^e4 c2^e5.
struct SjTerm {
  int coeff;
  std::array<unsigned char, 6> exps;
};

using SjPolynomial = std::vector<SjTerm>;

/// The twelve cubic polynomials cutting out J^2 in R^6, each written as
/// (left side) - (right side) of its equation, in the fixed published order.
const std::array<SjPolynomial, 12>& sj_polynomials();

template <class T>
std::array<T, 6> law_coords(const Law<T>& law) {
  const CoeffMatrix<T> m = law.to_matrix();
  return {m[0][0], m[0][1], m[1][0], m[1][1], m[2][0], m[2][1]};
}

template <class T>
Law<T> law_from_coords(const std::array<T, 6>& x, double tolerance = kDefaultTolerance) {
  return Law<T>::from_matrix({{{x[0], x[1]}, {x[2], x[3]}, {x[4], x[5]}}}, tolerance);
}

template <class T>
T evaluate(const SjPolynomial& p, const std::array<T, 6>& x) {
  T total(0);
  for (const SjTerm& term : p) {
    T mono(term.coeff);
    for (std::size_t v = 0; v < 6; ++v)
      for (unsigned char e = 0; e < term.exps[v]; ++e) mono *= x[v];
    total += mono;
  }
  return total;
}

/// Partial derivative of p with respect to variable v, as a polynomial.
SjPolynomial differentiate(const SjPolynomial& p, std::size_t v);

}  // namespace jordan2
