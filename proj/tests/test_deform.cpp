#include <gtest/gtest.h>

#include <cmath>

#include "jordan2/deform.hpp"
#include "test_support.hpp"

namespace jordan2 {
namespace {

using test::psi;
using test::q;
using test::qlaw;
using C = CanonicalClass;

Coords6 coords_of(C c) { return law_coords(psi(c).cast<double>(kDefaultTolerance)); }

std::array<double, 12> residuals_at(const Coords6& x) { return sj_residuals(law_from_coords<double>(x)); }

double distance(const Coords6& a, const Coords6& b) {
  double s = 0.0;
  for (int i = 0; i < 6; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

TEST(SjJacobian, ZeroAtTheZeroLaw) {
  const Matrix<double> j = sj_jacobian(Coords6{});
  ASSERT_EQ(j.rows(), 12u);
  ASSERT_EQ(j.cols(), 6u);
  for (std::size_t r = 0; r < 12; ++r)
    for (std::size_t c = 0; c < 6; ++c) EXPECT_EQ(j(r, c), 0.0);
}

TEST(SjJacobian, FirstRowAtUnitA2) {
  const Matrix<double> j = sj_jacobian(Coords6{0, 1, 0, 0, 0, 0});
  EXPECT_EQ(j(0, 2), -1.0);
}

TEST(SjJacobian, MatchesCentralDifferences) {
  test::RationalSource src(77);
  std::vector<Coords6> points;
  for (C c : kAllClasses) points.push_back(coords_of(c));
  for (int k = 0; k < 100; ++k) {
    Coords6 x;
    for (double& v : x) v = src.uniform();
    points.push_back(x);
  }
  const double h = 1e-6;
  for (const Coords6& x : points) {
    const Matrix<double> j = sj_jacobian(x);
    for (std::size_t c = 0; c < 6; ++c) {
      Coords6 up = x, down = x;
      up[c] += h;
      down[c] -= h;
      const auto ru = residuals_at(up), rd = residuals_at(down);
      for (std::size_t r = 0; r < 12; ++r) {
        const double fd = (ru[r] - rd[r]) / (2 * h);
        EXPECT_NEAR(j(r, c), fd, 1e-6 * std::max(1.0, std::fabs(fd)));
      }
    }
  }
}

TEST(NewtonProject, OnVarietyStartIsUnchanged) {
  for (C c : kAllClasses) {
    const VarietyPoint p = newton_project(coords_of(c));
    EXPECT_EQ(p.iterations, 0);
    EXPECT_EQ(p.coords, coords_of(c));
    EXPECT_TRUE(p.on_variety());
  }
}

TEST(NewtonProject, PerturbedPsi0ClassifiesPsi0) {
  Coords6 start = coords_of(C::Psi0);
  start[2] += 1e-3;
  const VarietyPoint p = newton_project(start);
  EXPECT_LE(p.residual_norm, 1e-12);
  EXPECT_EQ(p.residual_norm, sj_residual_norm(p.coords));
  EXPECT_EQ(classify_point(p), std::optional<C>(C::Psi0));
}

TEST(NewtonProject, NonConvergenceAtTheSwapLaw) {
  // (0 1; 1 0; 0 0) is a critical point of the residual on its sphere.
  try {
    newton_project(Coords6{0, 1, 1, 0, 0, 0});
    FAIL() << "expected NonConvergence";
  } catch (const NonConvergence& e) {
    EXPECT_NEAR(e.final_residual(), std::sqrt(2.0), 1e-12);
    EXPECT_GE(e.iterations(), 0);
  }
  EXPECT_THROW(newton_project(Coords6{3e8, -2e8, 1e8, 4e8, -1e8, 2e8}), NonConvergence);
}

TEST(NewtonProject, Preconditions) {
  EXPECT_THROW(newton_project(Coords6{}, 0.0), PreconditionError);
  EXPECT_THROW(newton_project(Coords6{}, -1.0), PreconditionError);
}

TEST(NewtonProject, Idempotent) {
  test::RationalSource src(3);
  for (int k = 0; k < 200; ++k) {
    Coords6 x;
    for (double& v : x) v = src.uniform();
    VarietyPoint p;
    try {
      p = newton_project(x);
    } catch (const NonConvergence&) {
      continue;
    }
    const VarietyPoint again = newton_project(p.coords);
    EXPECT_LE(distance(again.coords, p.coords), 1e-12 * std::max(1.0, distance(p.coords, Coords6{})));
  }
}

TEST(NewtonProject, DoesNotCollapseTowardZero) {
  test::RationalSource src(555);
  for (int k = 0; k < 200; ++k) {
    Coords6 x;
    for (double& v : x) v = src.uniform();
    const double n0 = distance(x, Coords6{});
    try {
      EXPECT_GT(distance(newton_project(x).coords, Coords6{}), 0.1 * n0);
    } catch (const NonConvergence&) {
    }
  }
}

TEST(CounterUniform, PureAndInRange) {
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const double u = counter_uniform(42, k, k % 6);
    EXPECT_GE(u, -1.0);
    EXPECT_LT(u, 1.0);
    EXPECT_EQ(u, counter_uniform(42, k, k % 6));
  }
  EXPECT_NE(counter_uniform(1, 0, 0), counter_uniform(2, 0, 0));
  EXPECT_NE(counter_uniform(1, 0, 0), counter_uniform(1, 1, 0));
  EXPECT_NE(counter_uniform(1, 0, 0), counter_uniform(1, 0, 1));
}

TEST(SamplePerturbations, Psi0AmbientAllClassifyPsi0) {
  const auto samples = sample_perturbations(C::Psi0, 1e-3, 100, 42, SampleMode::Ambient);
  ASSERT_EQ(samples.size(), 100u);
  for (const Sample& s : samples) {
    ASSERT_TRUE(s.point.has_value()) << s.error;
    EXPECT_TRUE(s.point->on_variety());
    EXPECT_NEAR(distance(s.start, coords_of(C::Psi0)), 1e-3, 1e-15);
    EXPECT_EQ(classify_point(*s.point), std::optional<C>(C::Psi0));
  }
}

TEST(SamplePerturbations, TangentModeStaysOnTheVariety) {
  for (C c : kAllClasses) {
    const auto samples = sample_perturbations(c, 1e-3, 50, 9, SampleMode::Tangent);
    const auto g = g_space(psi(c).cast<double>(kDefaultTolerance));
    for (const Sample& s : samples) {
      ASSERT_TRUE(s.point.has_value()) << s.error;
      EXPECT_TRUE(s.point->on_variety());
      // The offset lies in G(base) before projection.
      Coords6 d = s.start;
      const Coords6 base = coords_of(c);
      for (int i = 0; i < 6; ++i) d[i] -= base[i];
      EXPECT_TRUE(delta_bilinear(psi(c).cast<double>(kDefaultTolerance), law_from_coords<double>(d)).is_zero(1e-12));
    }
  }
}

TEST(SamplePerturbations, Preconditions) {
  EXPECT_THROW(sample_perturbations(C::Abelian, 0.0, 10, 1, SampleMode::Ambient), PreconditionError);
  EXPECT_THROW(sample_perturbations(C::Psi0, 1e-3, 0, 1, SampleMode::Ambient), PreconditionError);
}

TEST(SamplePerturbations, Psi2NeverReachesPsi5) {
  const RigidityReport r = rigidity_probe(C::Psi2, 1e-3, 1000, 7);
  EXPECT_GT(r.class_histogram.count(C::Psi0), 0u);
  EXPECT_EQ(r.class_histogram.count(C::Psi5), 0u);
}

TEST(SamplePerturbations, ThreadsDoNotChangeResults) {
  const auto a = sample_perturbations(C::Psi3, 1e-3, 200, 5, SampleMode::Ambient, 1);
  const auto b = sample_perturbations(C::Psi3, 1e-3, 200, 5, SampleMode::Ambient, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].index, b[k].index);
    EXPECT_EQ(a[k].start, b[k].start);
    ASSERT_EQ(a[k].point.has_value(), b[k].point.has_value());
    if (a[k].point) {
      EXPECT_EQ(a[k].point->coords, b[k].point->coords);
    }
  }
}

void expect_reports_equal(const RigidityReport& a, const RigidityReport& b) {
  EXPECT_EQ(a.class_histogram, b.class_histogram);
  EXPECT_EQ(a.indeterminate_count, b.indeterminate_count);
  EXPECT_EQ(a.nonconverged_count, b.nonconverged_count);
  EXPECT_EQ(a.verdict(), b.verdict());
}

TEST(RigidityProbe, Deterministic) {
  expect_reports_equal(rigidity_probe(C::Psi1, 1e-3, 300, 11), rigidity_probe(C::Psi1, 1e-3, 300, 11));
  expect_reports_equal(rigidity_probe(C::Psi1, 1e-3, 300, 11, 1), rigidity_probe(C::Psi1, 1e-3, 300, 11, 3));
}

TEST(RigidityProbe, RigidClassesStay) {
  for (C c : {C::Psi0, C::Psi4, C::Psi5})
    for (double eps : {1e-4, 1e-3}) {
      const RigidityReport r = rigidity_probe(c, eps, 500, 2024);
      EXPECT_TRUE(r.empirically_rigid()) << to_string(c) << " " << eps;
      EXPECT_EQ(r.class_histogram.size(), 1u);
      EXPECT_EQ(r.class_histogram.begin()->first, c);
      EXPECT_EQ(r.classified(), r.class_histogram.begin()->second);
      EXPECT_NE(r.verdict().find("empirically rigid at radius"), std::string::npos);
    }
  const RigidityReport p4 = rigidity_probe(C::Psi4, 1e-3, 500, 1);
  EXPECT_EQ(p4.class_histogram.at(C::Psi4), 500);
  const RigidityReport p5 = rigidity_probe(C::Psi5, 1e-3, 500, 1);
  EXPECT_EQ(p5.class_histogram.at(C::Psi5), 500);
}

TEST(RigidityProbe, NonRigidClassesLeave) {
  for (C c : {C::Psi1, C::Psi2, C::Psi3, C::Abelian}) {
    const RigidityReport r = rigidity_probe(c, 1e-3, 500, 3);
    EXPECT_FALSE(r.empirically_rigid()) << to_string(c);
    bool other = false;
    for (const auto& [k, n] : r.class_histogram) other = other || (k != c && n > 0);
    EXPECT_TRUE(other) << to_string(c);
    EXPECT_EQ(r.verdict().find("empirically rigid"), std::string::npos);
  }
}

TEST(RigidityProbe, CountsAddUp) {
  for (C c : kAllClasses) {
    const RigidityReport r = rigidity_probe(c, 1e-2, 200, 6);
    int total = r.indeterminate_count;
    for (const auto& [k, n] : r.class_histogram) total += n;
    EXPECT_EQ(total, r.samples);
    EXPECT_LE(r.nonconverged_count, r.indeterminate_count);
    EXPECT_EQ(r.outcomes.size(), static_cast<std::size_t>(r.samples));
  }
}

TEST(RigidityProbe, ExplicitNonRigidityWitnesses) {
  const Rational e = q(1, 1000);
  const std::vector<std::tuple<C, Law<Rational>, C>> witnesses{
      {C::Psi1, qlaw(q(1), q(0), e, q(0), q(0), q(1)), C::Psi0},
      {C::Psi2, qlaw(e, q(0), q(0), q(1), q(0), q(0)), C::Psi0},
      {C::Psi3, qlaw(e, q(1), q(0), q(0), q(0), q(0)), C::Psi2},
  };
  for (const auto& [base, law, target] : witnesses) {
    for (const Rational& r : sj_residuals(law)) EXPECT_EQ(r, 0);
    EXPECT_TRUE(is_jordan(law));
    EXPECT_EQ(classify(law).cls, target);
    EXPECT_NE(target, base);
  }
  EXPECT_EQ(classify(qlaw(q(1), q(0), e, q(0), q(0), q(1)).cast<double>(1e-9)).cls, C::Psi0);
  EXPECT_EQ(classify(qlaw(e, q(0), q(0), q(1), q(0), q(0)).cast<double>(1e-9)).cls, C::Psi0);
  // The image generator w of the third witness squares to ε² w, which sits
  // inside the real-mode band at ε = 1e-3.
  EXPECT_THROW(classify(qlaw(e, q(1), q(0), q(0), q(0), q(0)).cast<double>(1e-9)), Indeterminate);
  EXPECT_EQ(classify(qlaw(q(1, 10), q(1), q(0), q(0), q(0), q(0)).cast<double>(1e-9)).cls, C::Psi2);
}

TEST(RigidityProbe, OrbitDimensionIsSemicontinuous) {
  for (C c : kAllClasses) {
    const int base = orbit_dim(psi(c));
    for (const Sample& s : sample_perturbations(c, 1e-3, 100, 13, SampleMode::Ambient)) {
      if (!s.point) continue;
      EXPECT_GE(orbit_dim(law_from_coords<double>(s.point->coords, 1e-9)), base) << to_string(c);
    }
  }
}

TEST(Psi0Constraint, ExactPsi0) {
  const Psi0Offsets o = psi0_offsets(coords_of(C::Psi0));
  EXPECT_EQ(o.eps1, 0.0);
  EXPECT_EQ(o.eps2, 0.0);
  EXPECT_EQ(o.eps3, 0.0);
  EXPECT_EQ(o.eps5, 0.0);
  EXPECT_TRUE(example1_constraint_check(coords_of(C::Psi0)));
}

TEST(Psi0Constraint, ProjectedSamplesSatisfyTheConstraint) {
  int checked = 0;
  for (const Sample& s : sample_perturbations(C::Psi0, 1e-3, 100, 42, SampleMode::Ambient)) {
    ASSERT_TRUE(s.point.has_value());
    EXPECT_TRUE(example1_constraint_check(s.point->coords)) << psi0_offsets(s.point->coords).defect;
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(Psi0Constraint, OffVarietyPointFails) {
  Coords6 x = coords_of(C::Psi0);
  x[4] += 1e-3;
  EXPECT_FALSE(example1_constraint_check(x));
  Coords6 bad = coords_of(C::Psi0);
  bad[5] = 0.0;
  EXPECT_THROW(psi0_offsets(bad), PreconditionError);
}

TEST(Forbidden, Passes) {
  for (double eps : {1e-3, 1e-2}) {
    const ForbiddenReport r = forbidden_degeneration_check(eps, 1000, 17);
    EXPECT_TRUE(r.pass()) << eps;
    EXPECT_EQ(r.psi5_count, 0);
    EXPECT_EQ(r.slice_samples, 1000);
    EXPECT_EQ(r.slice_with_ideal, 1000);
    EXPECT_EQ(r.slice_simple, 0);
  }
}

TEST(Forbidden, EmptyCallPasses) {
  const ForbiddenReport r = forbidden_degeneration_check(1e-3, 0, 1);
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(r.class_histogram.empty());
}

TEST(Forbidden, SliceLawsAreJordanWithAnIdeal) {
  test::RationalSource src(19);
  for (int k = 0; k < 100; ++k) {
    const Law<Rational> law = psi2_slice_law(src.next() / 100, src.next() / 100);
    EXPECT_TRUE(is_jordan(law));
    EXPECT_FALSE(is_simple(law));
    EXPECT_NE(classify(law).cls, C::Psi5);
  }
}

TEST(CounterRational, WithinRadius) {
  const Rational eps = q(1, 1000);
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Rational r = counter_rational(3, k, 0, eps);
    EXPECT_LE(abs(r), eps);
    EXPECT_EQ(r, counter_rational(3, k, 0, eps));
  }
}

}  // namespace
}  // namespace jordan2
