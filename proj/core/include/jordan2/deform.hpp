#pragma once

// Numerical deformation theory on the variety of two-dimensional Jordan
// laws: Gauss-Newton projection, counter-based perturbation sampling,
// rigidity probes and the two structural checks built on them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jordan2/classify.hpp"
#include "jordan2/geometry.hpp"

namespace jordan2 {

inline constexpr double kVarietyTolerance = 1e-12;
inline constexpr int kDefaultMaxIter = 50;

/// Analytic 12 x 6 Jacobian of the twelve defining polynomials at coords
/// (a1, a2, b1, b2, c1, c2).
Matrix<double> sj_jacobian(const Coords6& coords);

double sj_residual_norm(const Coords6& coords);

struct VarietyPoint {
  Coords6 coords{};
  double residual_norm = 0.0;
  int iterations = 0;

  /// residual_norm <= 1e-12 · max(1, |coords|).
  bool on_variety() const;
};

/// Gauss-Newton on ‖sj_residuals‖ with steps restricted to the orthogonal
/// complement of x: each step solves the projected normal equations by a
/// truncated eigen-decomposition (eigenvalues below 1e-4 of the largest are
/// dropped), halving the step up to 20 times while the residual does not
/// decrease. Stops once the residual is at most tol · max(1, |x|). Throws
/// NonConvergence when no halving reduces the residual or after max_iter
/// steps.
VarietyPoint newton_project(const Coords6& start, double tol = kVarietyTolerance, int max_iter = kDefaultMaxIter);

/// Counter-based generator: a SplitMix64 finalizer applied to a mix of
/// (seed, index, component), so every draw is a pure function of its
/// counters. Returns a uniform double in [-1, 1).
double counter_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t component);

enum class SampleMode { Ambient, Tangent };

std::string to_string(SampleMode m);

struct Sample {
  std::uint64_t index = 0;
  Coords6 start{};
  std::optional<VarietyPoint> point;  // absent when projection failed
  std::string error;                  // NonConvergence message, if any
};

/// Perturbation k starts at base + eps · d_k where d_k has components drawn
/// from counter_uniform(seed, k, ·) and unit Euclidean norm. Ambient mode
/// draws all six coordinates; tangent mode draws coefficients on the basis
/// of G(base). Each start is Newton-projected. `threads` only changes
/// scheduling, never the result. Throws PreconditionError for eps <= 0 or
/// count < 1.
std::vector<Sample> sample_perturbations(CanonicalClass base, double eps, int count, std::uint64_t seed,
                                         SampleMode mode, int threads = 1);

/// Classification of a projected point in real mode with the default
/// tolerance; absent when classification is Indeterminate or the point is
/// not a law.
std::optional<CanonicalClass> classify_point(const VarietyPoint& p);

struct SampleOutcome {
  Sample sample;
  std::optional<CanonicalClass> cls;
  std::string failure;  // "nonconvergence", "indeterminate" or empty
};

struct RigidityReport {
  CanonicalClass base_class = CanonicalClass::Abelian;
  double epsilon = 0.0;
  int samples = 0;
  std::map<CanonicalClass, int> class_histogram;
  int indeterminate_count = 0;  // every sample without a class
  int nonconverged_count = 0;   // the part of indeterminate_count that failed to project
  std::uint64_t seed = 0;
  std::vector<SampleOutcome> outcomes;

  int classified() const { return samples - indeterminate_count; }
  /// All classified samples have the base class (and at least one was).
  bool empirically_rigid() const;
  std::string verdict() const;
};

RigidityReport rigidity_probe(CanonicalClass base, double eps, int count, std::uint64_t seed, int threads = 1);

/// Offsets of a point near ψ0 after rescaling e1 so that the c2 entry is 1.
struct Psi0Offsets {
  double eps1 = 0, eps2 = 0, eps3 = 0, eps4 = 0, eps5 = 0;
  double defect = 0;  // eps5 - eps2 (1 + eps3)
};

/// Throws PreconditionError when c2 = 0.
Psi0Offsets psi0_offsets(const Coords6& coords);

/// |ε5 - ε2(1 + ε3)| <= 1e-9 after the c2 normalization.
bool example1_constraint_check(const Coords6& coords);

struct ForbiddenReport {
  double epsilon = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::map<CanonicalClass, int> class_histogram;
  int indeterminate_count = 0;
  int psi5_count = 0;
  // Exact laws (ε1 ε2; 0 1; 0 ε6) on the variety: the slice where the
  // e1-coefficient of e2∘e2 vanishes after the first normalization.
  int slice_samples = 0;
  int slice_with_ideal = 0;
  int slice_simple = 0;
  bool pass() const { return psi5_count == 0 && slice_with_ideal == slice_samples && slice_simple == 0; }
};

/// Samples `count` ambient perturbations of ψ2 and as many exact slice laws;
/// count = 0 gives an empty, passing report.
ForbiddenReport forbidden_degeneration_check(double eps, int count, std::uint64_t seed, int threads = 1);

/// Exact slice law (ε1 ε2; 0 1; 0 ε6) with ε2 = ε6(ε6 - ε1), the solution of
/// the defining system on that slice.
Law<Rational> psi2_slice_law(const Rational& eps1, const Rational& eps6);

/// A rational in [-eps, eps] drawn from the counter generator (denominator
/// 2^20 before scaling by the rational approximation of eps).
Rational counter_rational(std::uint64_t seed, std::uint64_t index, std::uint64_t component, const Rational& eps);

}  // namespace jordan2
