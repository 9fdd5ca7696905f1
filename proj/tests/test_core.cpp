#include <gtest/gtest.h>

#include "jordan2/identities.hpp"
#include "test_support.hpp"

namespace jordan2 {
namespace {

using test::e;
using test::psi;
using test::q;
using test::qlaw;
using C = CanonicalClass;

ExactDirection dir(long x1, long x2) { return {Surd(q(x1)), Surd(q(x2))}; }

// e1∘e1 = e2, e2∘e2 = e1, e1∘e2 = 0.
Law<Rational> swap_law() { return qlaw(q(0), q(1), q(1), q(0), q(0), q(0)); }

TEST(Scalar, ParseRational) {
  EXPECT_EQ(parse_rational("3/4"), q(3, 4));
  EXPECT_EQ(parse_rational("-7"), q(-7));
  EXPECT_EQ(parse_rational("+2/3"), q(2, 3));
  EXPECT_THROW(parse_rational("2/4"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Scalar, Formatting) {
  EXPECT_EQ(format_rational(q(0)), "0/1");
  EXPECT_EQ(format_rational(q(-6, 4)), "-3/2");
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  Rational r;
  EXPECT_TRUE(exact_sqrt(q(9, 4), r));
  EXPECT_EQ(r, q(3, 2));
  EXPECT_FALSE(exact_sqrt(q(2), r));
}

TEST(Scalar, ApproximateEquality) {
  EXPECT_TRUE(scalar_equal(1.0, 1.0 + 1e-12, 1e-9));
  EXPECT_FALSE(scalar_equal(1.0, 1.0 + 1e-6, 1e-9));
  EXPECT_TRUE(scalar_equal(1e6, 1e6 + 1e-4, 1e-9));
}

TEST(Law, MatrixRoundTrip) {
  test::RationalSource src(11);
  for (int k = 0; k < 50; ++k) {
    const Law<Rational> law = src.law();
    EXPECT_EQ(Law<Rational>::from_matrix(law.to_matrix()), law);
    EXPECT_EQ(Law<Rational>::from_sym_coords(2, law.sym_coords()), law);
  }
}

TEST(Law, TensorSymmetryIsValidated) {
  using T3 = std::vector<std::vector<std::vector<Rational>>>;
  const T3 ok = {{{q(1), q(2)}, {q(2), q(0)}}, {{q(0), q(1)}, {q(1), q(3)}}};
  EXPECT_NO_THROW(Law<Rational>::from_tensor(ok));
  const T3 bad = {{{q(1), q(2)}, {q(5), q(0)}}, {{q(0), q(1)}, {q(1), q(3)}}};
  EXPECT_THROW(Law<Rational>::from_tensor(bad), PreconditionError);
}

TEST(Law, SymCoordsOrder) {
  const Law<Rational> law = qlaw(q(1), q(2), q(3), q(4), q(5), q(6));
  const Vec<Rational> expected = {q(1), q(5), q(3), q(2), q(6), q(4)};
  EXPECT_EQ(law.sym_coords(), expected);
}

TEST(Mul, Examples) {
  EXPECT_EQ(mul(psi(C::Psi0), e(1), e(1)), e(0));
  EXPECT_EQ(mul(swap_law(), e(0), Vec<Rational>{q(0), q(0)}), (Vec<Rational>{q(0), q(0)}));
  EXPECT_EQ(mul(psi(C::Psi4), e(0), e(1)), (Vec<Rational>{q(0), q(1, 2)}));
  EXPECT_THROW(mul(psi(C::Psi0), Vec<Rational>{q(1)}, e(0)), DimensionMismatch);
}

TEST(Mul, Symmetric) {
  test::RationalSource src(3);
  for (int k = 0; k < 20; ++k) {
    const Law<Rational> law = src.law();
    const Vec<Rational> x = {src.next(), src.next()}, y = {src.next(), src.next()};
    EXPECT_EQ(mul(law, x, y), mul(law, y, x));
  }
}

TEST(JordanResidual, Examples) {
  const Vec<Rational> zero = {q(0), q(0)};
  EXPECT_EQ(jordan_residual(psi(C::Psi3), e(0), e(1)), zero);
  EXPECT_EQ(jordan_residual(swap_law(), zero, e(1)), zero);
  EXPECT_EQ(jordan_residual(swap_law(), e(0), e(1)), (Vec<Rational>{q(0), q(-1)}));
}

TEST(JordanResidual, Homogeneity) {
  test::RationalSource src(5);
  for (int k = 0; k < 30; ++k) {
    const Law<Rational> law = src.law();
    const Vec<Rational> x = {src.next(), src.next()}, y = {src.next(), src.next()};
    const Rational lam = src.next(), mu = src.next();
    const Vec<Rational> base = jordan_residual(law, x, y);
    const Vec<Rational> scaled = jordan_residual(law, Vec<Rational>{lam * x[0], lam * x[1]},
                                                 Vec<Rational>{mu * y[0], mu * y[1]});
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(scaled[i], lam * lam * lam * mu * base[i]);
  }
}

TEST(IsJordan, Examples) {
  EXPECT_TRUE(is_jordan(psi(C::Psi5)));
  EXPECT_TRUE(is_jordan(psi(C::Abelian)));
  EXPECT_FALSE(is_jordan(swap_law()));
}

TEST(IsJordan, AllCanonicalLawsInAllModes) {
  for (C c : kAllClasses) {
    EXPECT_TRUE(is_jordan(psi(c))) << to_string(c);
    EXPECT_TRUE(is_jordan(psi(c).cast<double>(1e-9))) << to_string(c);
    EXPECT_TRUE(is_jordan(psi(c).cast<Complex>(1e-9))) << to_string(c);
  }
}

TEST(IsJordan, GridDecidesHigherDimensionalLaws) {
  // The 3-dimensional direct sum R ⊕ R ⊕ R is Jordan; the swap law plus a
  // zero third coordinate is not.
  Law<Rational> sum(3);
  for (std::size_t i = 0; i < 3; ++i) sum.set(i, i, i, q(1));
  EXPECT_TRUE(is_jordan(sum));
  Law<Rational> bad(3);
  bad.set(1, 0, 0, q(1));
  bad.set(0, 1, 1, q(1));
  EXPECT_FALSE(is_jordan(bad));
}

TEST(SjResiduals, Examples) {
  for (C c : kAllClasses)
    for (const Rational& r : sj_residuals(psi(c))) EXPECT_EQ(r, 0) << to_string(c);
  const Law<Rational> law = qlaw(q(0), q(1), q(1), q(0), q(0), q(0));
  EXPECT_EQ(sj_residuals(law)[0], q(-1));
  EXPECT_THROW(sj_residuals(Law<Rational>(3)), DimensionMismatch);
}

TEST(J2Residuals, Examples) {
  for (const Rational& r : j2_residuals(psi(C::Psi1))) EXPECT_EQ(r, 0);
  for (const Rational& r : j2_residuals(psi(C::Abelian))) EXPECT_EQ(r, 0);
  const auto res = j2_residuals(swap_law());
  EXPECT_TRUE(std::any_of(res.begin(), res.end(), [](const Rational& r) { return r != 0; }));
}

TEST(IdentityConsistency, ThreeRoutesAgreeOnCanonicalLaws) {
  for (C c : kAllClasses) {
    const IdentityConsistency ic = identity_consistency(psi(c));
    EXPECT_TRUE(ic.grid && ic.sj && ic.j2) << to_string(c);
  }
}

TEST(IdentityConsistency, ThreeRoutesAgreeOnRandomLaws) {
  test::RationalSource src(2024);
  int jordan = 0, other = 0;
  for (int k = 0; k < 1000; ++k) {
    // Half are raw random tensors (almost never Jordan), half are basis
    // changes of canonical laws (always Jordan).
    const Law<Rational> law =
        k % 2 == 0 ? src.law() : act(psi(kAllClasses[static_cast<std::size_t>(k / 2) % 7]), src.invertible_map());
    const IdentityConsistency ic = identity_consistency(law);
    ASSERT_TRUE(ic.agree()) << "law " << k << " grid=" << ic.grid << " sj=" << ic.sj << " j2=" << ic.j2;
    (ic.grid ? jordan : other)++;
  }
  EXPECT_GE(jordan, 500);
  EXPECT_GT(other, 0);
}

TEST(Act, Examples) {
  const Law<Rational> p0 = psi(C::Psi0);
  EXPECT_EQ(act(p0, LinearMap<Rational>::identity(2)), p0);
  EXPECT_EQ(act(p0, LinearMap<Rational>::diagonal({q(1), q(-1)})), p0);
  EXPECT_THROW(act(p0, LinearMap<Rational>::diagonal({q(1), q(0)})), SingularMap);
}

TEST(Act, ComplexWitnessMapsPsi5ToPsi0) {
  const Law<Complex> p5 = psi(C::Psi5).cast<Complex>(1e-9);
  const Law<Complex> p0 = psi(C::Psi0).cast<Complex>(1e-9);
  const LinearMap<Complex> f = LinearMap<Complex>::diagonal({Complex(1, 0), Complex(0, 1)});
  EXPECT_TRUE(act(p5, f).approx_equal(p0));
}

TEST(Act, PreservesJordanIdentity) {
  test::RationalSource src(77);
  for (int k = 0; k < 100; ++k) {
    const Law<Rational> law = k % 2 ? src.law() : psi(kAllClasses[static_cast<std::size_t>(k) % 7]);
    EXPECT_EQ(is_jordan(act(law, src.invertible_map())), is_jordan(law));
  }
}

TEST(FindUnit, Examples) {
  EXPECT_EQ(find_unit(psi(C::Psi0)), std::optional<Vec<Rational>>(e(0)));
  EXPECT_FALSE(find_unit(psi(C::Abelian)).has_value());
  EXPECT_FALSE(find_unit(psi(C::Psi4)).has_value());
}

TEST(FindUnit, TransportsUnderBasisChange) {
  test::RationalSource src(8);
  for (C c : {C::Psi0, C::Psi1, C::Psi5}) {
    for (int k = 0; k < 30; ++k) {
      const LinearMap<Rational> f = src.invertible_map();
      const auto u = find_unit(act(psi(c), f));
      ASSERT_TRUE(u.has_value());
      EXPECT_EQ(*u, f.inverse().apply(e(0)));
    }
  }
  for (C c : {C::Psi2, C::Psi3, C::Psi4, C::Abelian})
    EXPECT_FALSE(find_unit(act(psi(c), src.invertible_map())).has_value()) << to_string(c);
}

TEST(FindUnit, ApproximateMode) {
  const auto u = find_unit(psi(C::Psi5).cast<double>(1e-9));
  ASSERT_TRUE(u.has_value());
  EXPECT_NEAR((*u)[0], 1.0, 1e-12);
  EXPECT_NEAR((*u)[1], 0.0, 1e-12);
}

TEST(CommonRoots, Examples) {
  const BinaryQuadratic<Rational> x1sq{q(1), q(0), q(0)}, x1x2{q(0), q(1), q(0)}, zero{};
  const auto r = common_real_projective_roots(x1sq, x1x2);
  ASSERT_EQ(r.directions.size(), 1u);
  EXPECT_EQ(r.directions[0], dir(0, 1));
  EXPECT_TRUE(common_real_projective_roots(zero, zero).is_all());
  const BinaryQuadratic<Rational> definite{q(1), q(0), q(1)}, other{q(2), q(-3), q(1)};
  EXPECT_TRUE(common_real_projective_roots(definite, other).empty());
  EXPECT_TRUE(common_real_projective_roots(definite, zero).empty());
}

TEST(CommonRoots, IrrationalRootsAreExactSurds) {
  // x1² - 2 x2² has roots [1 : ±1/sqrt(2)]; the zero quadratic adds nothing.
  const BinaryQuadratic<Rational> q1{q(1), q(0), q(-2)}, zero{};
  const auto r = common_real_projective_roots(q1, zero);
  ASSERT_EQ(r.directions.size(), 2u);
  for (const auto& d : r.directions) {
    EXPECT_FALSE(d.x2.is_rational());
    EXPECT_NEAR(d.x2.to_double() * d.x2.to_double(), 0.5, 1e-15);
  }
}

TEST(CommonRoots, ApproximateModeMatchesExact) {
  const BinaryQuadratic<double> a{1.0, 0.0, 0.0}, b{0.0, 1.0, 0.0};
  const auto r = common_real_projective_roots(a, b, 1e-9);
  ASSERT_EQ(r.directions.size(), 1u);
  EXPECT_EQ(r.directions[0].x1, 0.0);
  EXPECT_EQ(r.directions[0].x2, 1.0);
}

TEST(Isotropy, Examples) {
  EXPECT_EQ(isotropic_directions(psi(C::Psi1)).directions, std::vector<ExactDirection>{dir(0, 1)});
  EXPECT_TRUE(isotropic_directions(psi(C::Psi5)).empty());
  EXPECT_EQ(isotropic_directions(psi(C::Psi3)).directions, std::vector<ExactDirection>{dir(0, 1)});
  EXPECT_TRUE(isotropic_directions(psi(C::Abelian)).is_all());
  EXPECT_THROW(isotropic_directions(Law<Rational>(3)), DimensionMismatch);
}

TEST(Ideals, Examples) {
  EXPECT_TRUE(find_ideals_1d(psi(C::Psi5)).empty());
  const auto p2 = find_ideals_1d(psi(C::Psi2));
  EXPECT_EQ(p2.directions.size(), 2u);
  EXPECT_TRUE(p2.contains(dir(1, 0)));
  EXPECT_TRUE(p2.contains(dir(0, 1)));
  EXPECT_EQ(find_ideals_1d(psi(C::Psi1)).directions, std::vector<ExactDirection>{dir(0, 1)});
  EXPECT_TRUE(find_ideals_1d(psi(C::Psi0)).contains(dir(1, 1)));
}

TEST(IsSimple, Examples) {
  EXPECT_TRUE(is_simple(psi(C::Psi5)));
  EXPECT_FALSE(is_simple(psi(C::Psi0)));
  EXPECT_FALSE(is_simple(psi(C::Abelian)));
  for (C c : {C::Psi1, C::Psi2, C::Psi3, C::Psi4}) EXPECT_FALSE(is_simple(psi(c))) << to_string(c);
}

TEST(IsSimple, InvariantUnderBasisChange) {
  test::RationalSource src(19);
  for (C c : kAllClasses)
    for (int k = 0; k < 20; ++k) {
      const Law<Rational> law = act(psi(c), src.invertible_map());
      EXPECT_EQ(is_simple(law), c == C::Psi5);
      EXPECT_EQ(isotropic_directions(law).empty(), c == C::Psi0 || c == C::Psi5);
    }
}

TEST(LinearMap, InverseAndCompose) {
  test::RationalSource src(4);
  for (int k = 0; k < 20; ++k) {
    const LinearMap<Rational> f = src.invertible_map();
    EXPECT_EQ(f.compose(f.inverse()), LinearMap<Rational>::identity(2));
  }
  EXPECT_THROW(LinearMap<Rational>::diagonal({q(1), q(0)}).inverse(), SingularMap);
}

}  // namespace
}  // namespace jordan2
