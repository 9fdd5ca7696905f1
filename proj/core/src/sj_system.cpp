#include "jordan2/sj_system.hpp"

namespace jordan2 {

namespace {

// Exponent vector over (a1, a2, b1, b2, c1, c2).
constexpr std::array<unsigned char, 6> E(int a1, int a2, int b1, int b2, int c1, int c2) {
  return {static_cast<unsigned char>(a1), static_cast<unsigned char>(a2), static_cast<unsigned char>(b1),
          static_cast<unsigned char>(b2), static_cast<unsigned char>(c1), static_cast<unsigned char>(c2)};
}

std::array<SjPolynomial, 12> build() {
  return {{
      // a2 c1 c2 = a2 a2 b1
      {{1, E(0, 1, 0, 0, 1, 1)}, {-1, E(0, 2, 1, 0, 0, 0)}},
      // b1 c1 c2 = b1 a2 b1
      {{1, E(0, 0, 1, 0, 1, 1)}, {-1, E(0, 1, 2, 0, 0, 0)}},
      // a2 (a1 b1 + b2 c1) = a2 (b1 c2 + c1^2)
      {{1, E(1, 1, 1, 0, 0, 0)}, {1, E(0, 1, 0, 1, 1, 0)}, {-1, E(0, 1, 1, 0, 0, 1)}, {-1, E(0, 1, 0, 0, 2, 0)}},
      // b1 (a1 b1 + b2 c1) = b1 (b1 c2 + c1^2)
      {{1, E(1, 0, 2, 0, 0, 0)}, {1, E(0, 0, 1, 1, 1, 0)}, {-1, E(0, 0, 2, 0, 0, 1)}, {-1, E(0, 0, 1, 0, 2, 0)}},
      // a2 (a2 c1 + c2^2) = a2 (a1 c2 + a2 b2)
      {{1, E(0, 2, 0, 0, 1, 0)}, {1, E(0, 1, 0, 0, 0, 2)}, {-1, E(1, 1, 0, 0, 0, 1)}, {-1, E(0, 2, 0, 1, 0, 0)}},
      // b1 (a2 c1 + c2^2) = b1 (a1 c2 + a2 b2)
      {{1, E(0, 1, 1, 0, 1, 0)}, {1, E(0, 0, 1, 0, 0, 2)}, {-1, E(1, 0, 1, 0, 0, 1)}, {-1, E(0, 1, 1, 1, 0, 0)}},
      // a1 c1 c2 + 2 a2 b1 c2 = 2 c1 c2^2 + a1 a2 b1
      {{1, E(1, 0, 0, 0, 1, 1)}, {2, E(0, 1, 1, 0, 0, 1)}, {-2, E(0, 0, 0, 0, 1, 2)}, {-1, E(1, 1, 1, 0, 0, 0)}},
      // a1 a2 c1 + 3 a1 c2^2 + 2 a2 b2 c2 = 2 a2 c1 c2 + 2 c2^3 + a1^2 c2 + a1 a2 b2
      {{1, E(1, 1, 0, 0, 1, 0)},
       {3, E(1, 0, 0, 0, 0, 2)},
       {2, E(0, 1, 0, 1, 0, 1)},
       {-2, E(0, 1, 0, 0, 1, 1)},
       {-2, E(0, 0, 0, 0, 0, 3)},
       {-1, E(2, 0, 0, 0, 0, 1)},
       {-1, E(1, 1, 0, 1, 0, 0)}},
      // 2 c1^2 c2 + 2 b1 c2^2 + a1^2 b1 + a1 b2 c1 = 3 a1 b1 c2 + 2 b2 c1 c2 + a1 c1^2
      {{2, E(0, 0, 0, 0, 2, 1)},
       {2, E(0, 0, 1, 0, 0, 2)},
       {1, E(2, 0, 1, 0, 0, 0)},
       {1, E(1, 0, 0, 1, 1, 0)},
       {-3, E(1, 0, 1, 0, 0, 1)},
       {-2, E(0, 0, 0, 1, 1, 1)},
       {-1, E(1, 0, 0, 0, 2, 0)}},
      // 2 c1 c2^2 + 2 a2 c1^2 + a1 b2 c2 + a2 b2^2 = b2 c2^2 + 2 a1 c1 c2 + 3 a2 b2 c1
      {{2, E(0, 0, 0, 0, 1, 2)},
       {2, E(0, 1, 0, 0, 2, 0)},
       {1, E(1, 0, 0, 1, 0, 1)},
       {1, E(0, 1, 0, 2, 0, 0)},
       {-1, E(0, 0, 0, 1, 0, 2)},
       {-2, E(1, 0, 0, 0, 1, 1)},
       {-3, E(0, 1, 0, 1, 1, 0)}},
      // 2 a1 b1 c1 + 3 b2 c1^2 + b1 b2 c2 = a1 b1 b2 + b2^2 c1 + 2 c1^3 + 2 b1 c1 c2
      {{2, E(1, 0, 1, 0, 1, 0)},
       {3, E(0, 0, 0, 1, 2, 0)},
       {1, E(0, 0, 1, 1, 0, 1)},
       {-1, E(1, 0, 1, 1, 0, 0)},
       {-1, E(0, 0, 0, 2, 1, 0)},
       {-2, E(0, 0, 0, 0, 3, 0)},
       {-2, E(0, 0, 1, 0, 1, 1)}},
      // 2 a2 b1 c1 + b2 c1 c2 = a2 b1 b2 + 2 c1^2 c2
      {{2, E(0, 1, 1, 0, 1, 0)}, {1, E(0, 0, 0, 1, 1, 1)}, {-1, E(0, 1, 1, 1, 0, 0)}, {-2, E(0, 0, 0, 0, 2, 1)}},
  }};
}

}  // namespace

const std::array<SjPolynomial, 12>& sj_polynomials() {
  static const std::array<SjPolynomial, 12> table = build();
  return table;
}

SjPolynomial differentiate(const SjPolynomial& p, std::size_t v) {
  SjPolynomial out;
  for (const SjTerm& t : p) {
    if (t.exps[v] == 0) continue;
    SjTerm d = t;
    d.coeff *= t.exps[v];
    d.exps[v] -= 1;
    out.push_back(d);
  }
  return out;
}

}  // namespace jordan2
