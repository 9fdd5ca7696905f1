#pragma once

#include <random>

#include "jordan2/classify.hpp"
#include "jordan2/sj_system.hpp"

namespace jordan2::test {

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

inline Law<Rational> qlaw(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2,
                          const Rational& c1, const Rational& c2) {
  return Law<Rational>::from_matrix({{{a1, a2}, {b1, b2}, {c1, c2}}});
}

inline Law<Rational> psi(CanonicalClass c) { return canonical_law(c); }

inline Vec<Rational> e(std::size_t i) { return basis_vector<Rational>(2, i); }

/// Small rationals p/d with |p| <= range and 1 <= d <= 3.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed, int range = 3) : gen_(seed), num_(-range, range), den_(1, 3) {}

  Rational next() { return q(num_(gen_), den_(gen_)); }
  double uniform() { return std::uniform_real_distribution<double>(-1.0, 1.0)(gen_); }

  Law<Rational> law() {
    Law<Rational> out(2);
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = i; j < 2; ++j) out.set(k, i, j, next());
    return out;
  }

  LinearMap<Rational> invertible_map() {
    for (;;) {
      Matrix<Rational> m(2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = next();
      LinearMap<Rational> f(std::move(m));
      if (f.invertible()) return f;
    }
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::uniform_int_distribution<int> num_;
  std::uniform_int_distribution<int> den_;
};

}  // namespace jordan2::test
