#include "jordan2/deform.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <Eigen/Dense>

namespace jordan2 {

namespace {

// The residual is homogeneous cubic, so J(x)·(-x/3) = -r(x): wherever J has
// full rank the least-squares step is purely radial and only shrinks the law
// toward zero. Steps are therefore taken orthogonally to x, and eigenvalues
// of the projected normal matrix below this fraction of the largest are
// dropped.
constexpr double kNormalCutoff = 1e-4;

double norm2(const Coords6& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

Eigen::VectorXd residual_vector(const Coords6& x) {
  const auto& polys = sj_polynomials();
  Eigen::VectorXd r(12);
  for (std::size_t e = 0; e < 12; ++e) r(e) = evaluate(polys[e], x);
  return r;
}

const std::array<std::array<SjPolynomial, 6>, 12>& jacobian_table() {
  static const auto table = [] {
    std::array<std::array<SjPolynomial, 6>, 12> t;
    const auto& polys = sj_polynomials();
    for (std::size_t e = 0; e < 12; ++e)
      for (std::size_t v = 0; v < 6; ++v) t[e][v] = differentiate(polys[e], v);
    return t;
  }();
  return table;
}

Coords6 to_coords(const Law<Rational>& law) {
  const auto c = law_coords(law);
  Coords6 out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = c[i].get_d();
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t index, std::uint64_t component) {
  std::uint64_t z = splitmix64(seed);
  z = splitmix64(z ^ splitmix64(index));
  return splitmix64(z ^ splitmix64(component ^ 0x632be59bd9b4e019ULL));
}

// Runs body(i) for i in [0, count) on `threads` workers with a static
// stride partition; each index writes only its own slot.
template <class Body>
void parallel_for(int count, int threads, Body body) {
  const int workers = std::max(1, std::min(threads, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

Rational rationalize(double eps) {
  Rational r(static_cast<long>(std::llround(eps * 1e12)), 1000000000000L);
  r.canonicalize();
  return r;
}

}  // namespace

Matrix<double> sj_jacobian(const Coords6& coords) {
  const auto& table = jacobian_table();
  Matrix<double> j(12, 6);
  for (std::size_t e = 0; e < 12; ++e)
    for (std::size_t v = 0; v < 6; ++v) j(e, v) = evaluate(table[e][v], coords);
  return j;
}

double sj_residual_norm(const Coords6& coords) { return residual_vector(coords).norm(); }

bool VarietyPoint::on_variety() const { return residual_norm <= kVarietyTolerance * std::max(1.0, norm2(coords)); }

VarietyPoint newton_project(const Coords6& start, double tol, int max_iter) {
  if (!(tol > 0.0)) throw PreconditionError("newton_project: tolerance must be positive");
  VarietyPoint p{start, sj_residual_norm(start), 0};
  const auto done = [&] { return p.residual_norm <= tol * std::max(1.0, norm2(p.coords)); };
  while (!done()) {
    if (p.iterations >= max_iter)
      throw NonConvergence("Gauss-Newton did not converge", p.residual_norm, p.iterations);
    const Matrix<double> jm = sj_jacobian(p.coords);
    Eigen::Matrix<double, 12, 6> j;
    for (int e = 0; e < 12; ++e)
      for (int v = 0; v < 6; ++v) j(e, v) = jm(e, v);
    const Eigen::VectorXd r = residual_vector(p.coords);
    Eigen::Matrix<double, 6, 1> x;
    for (int v = 0; v < 6; ++v) x(v) = p.coords[v];
    Eigen::Matrix<double, 6, 6> proj = Eigen::Matrix<double, 6, 6>::Identity();
    if (x.norm() > 0.0) proj -= x * x.transpose() / x.squaredNorm();
    const Eigen::Matrix<double, 12, 6> jp = j * proj;
    const Eigen::Matrix<double, 6, 6> normal = jp.transpose() * jp;
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> eig(normal);
    const Eigen::VectorXd rhs = eig.eigenvectors().transpose() * (-jp.transpose() * r);
    const double cutoff = kNormalCutoff * eig.eigenvalues().maxCoeff();
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(6);
    for (int k = 0; k < 6; ++k)
      if (eig.eigenvalues()(k) > cutoff) coeffs(k) = rhs(k) / eig.eigenvalues()(k);
    const Eigen::VectorXd step = proj * (eig.eigenvectors() * coeffs);

    double scale = 1.0;
    bool improved = false;
    for (int halving = 0; halving <= 20; ++halving, scale *= 0.5) {
      Coords6 trial = p.coords;
      for (int v = 0; v < 6; ++v) trial[v] += scale * step(v);
      const double res = sj_residual_norm(trial);
      if (res < p.residual_norm) {
        p.coords = trial;
        p.residual_norm = res;
        improved = true;
        break;
      }
    }
    ++p.iterations;
    if (!improved) throw NonConvergence("Gauss-Newton step failed to reduce the residual", p.residual_norm, p.iterations);
  }
  return p;
}

double counter_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t component) {
  const std::uint64_t bits = counter_bits(seed, index, component);
  return static_cast<double>(bits >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

Rational counter_rational(std::uint64_t seed, std::uint64_t index, std::uint64_t component, const Rational& eps) {
  const std::uint64_t u = counter_bits(seed, index, component) >> 44;  // 20 bits
  Rational r(static_cast<long>(2 * u) - (1L << 20), 1L << 20);
  r.canonicalize();
  return r * eps;
}

std::string to_string(SampleMode m) { return m == SampleMode::Ambient ? "ambient" : "tangent"; }

std::vector<Sample> sample_perturbations(CanonicalClass base, double eps, int count, std::uint64_t seed,
                                         SampleMode mode, int threads) {
  if (!(eps > 0.0)) throw PreconditionError("sampling radius must be positive");
  if (count < 1) throw PreconditionError("sample count must be at least 1");

  const Law<Rational> base_law = canonical_law(base);
  const Coords6 origin = to_coords(base_law);
  std::vector<Coords6> directions;
  if (mode == SampleMode::Ambient) {
    for (std::size_t v = 0; v < 6; ++v) {
      Coords6 d{};
      d[v] = 1.0;
      directions.push_back(d);
    }
  } else {
    for (const auto& b : g_space(base_law).second) directions.push_back(to_coords(b));
  }

  std::vector<Sample> out(count);
  parallel_for(count, threads, [&](int i) {
    Sample& s = out[i];
    s.index = static_cast<std::uint64_t>(i);
    Coords6 d{};
    for (std::size_t b = 0; b < directions.size(); ++b) {
      const double w = counter_uniform(seed, s.index, b);
      for (std::size_t v = 0; v < 6; ++v) d[v] += w * directions[b][v];
    }
    const double n = norm2(d);
    for (std::size_t v = 0; v < 6; ++v) s.start[v] = origin[v] + (n > 0.0 ? eps * d[v] / n : 0.0);
    try {
      s.point = newton_project(s.start);
    } catch (const NonConvergence& e) {
      s.error = e.what();
    }
  });
  return out;
}

std::optional<CanonicalClass> classify_point(const VarietyPoint& p) {
  try {
    return classify(law_from_coords<double>(p.coords, kDefaultTolerance)).cls;
  } catch (const Indeterminate&) {
    return std::nullopt;
  } catch (const NotJordan&) {
    return std::nullopt;
  }
}

namespace {

std::vector<SampleOutcome> classify_samples(std::vector<Sample> samples, int threads) {
  std::vector<SampleOutcome> out(samples.size());
  parallel_for(static_cast<int>(samples.size()), threads, [&](int i) {
    SampleOutcome& o = out[i];
    o.sample = std::move(samples[i]);
    if (!o.sample.point) {
      o.failure = "nonconvergence";
      return;
    }
    o.cls = classify_point(*o.sample.point);
    if (!o.cls) o.failure = "indeterminate";
  });
  return out;
}

}  // namespace

bool RigidityReport::empirically_rigid() const {
  if (classified() == 0) return false;
  for (const auto& [cls, n] : class_histogram)
    if (cls != base_class && n > 0) return false;
  return true;
}

std::string RigidityReport::verdict() const {
  const std::string radius = format_real(epsilon);
  if (classified() == 0) return "inconclusive at radius " + radius;
  if (empirically_rigid()) return "empirically rigid at radius " + radius;
  return "not rigid: perturbations at radius " + radius + " leave the orbit";
}

RigidityReport rigidity_probe(CanonicalClass base, double eps, int count, std::uint64_t seed, int threads) {
  RigidityReport r;
  r.base_class = base;
  r.epsilon = eps;
  r.samples = count;
  r.seed = seed;
  r.outcomes = classify_samples(sample_perturbations(base, eps, count, seed, SampleMode::Ambient, threads), threads);
  for (const SampleOutcome& o : r.outcomes) {
    if (o.cls) {
      ++r.class_histogram[*o.cls];
    } else {
      ++r.indeterminate_count;
      if (o.failure == "nonconvergence") ++r.nonconverged_count;
    }
  }
  return r;
}

Psi0Offsets psi0_offsets(const Coords6& x) {
  const double a1 = x[0], a2 = x[1], b1 = x[2], b2 = x[3], c1 = x[4], c2 = x[5];
  if (c2 == 0.0) throw PreconditionError("c2 = 0: the normalization e1' = e1 / c2 is undefined");
  Psi0Offsets o;
  o.eps1 = a1 / c2 - 1.0;
  o.eps2 = a2 / (c2 * c2);
  o.eps3 = b1 * c2 - 1.0;
  o.eps4 = b2;
  o.eps5 = c1;
  o.defect = o.eps5 - o.eps2 * (1.0 + o.eps3);
  return o;
}

bool example1_constraint_check(const Coords6& coords) { return std::fabs(psi0_offsets(coords).defect) <= 1e-9; }

Law<Rational> psi2_slice_law(const Rational& eps1, const Rational& eps6) {
  const Rational eps2 = eps6 * (eps6 - eps1);
  return Law<Rational>::from_matrix({{{eps1, eps2}, {Rational(0), Rational(1)}, {Rational(0), eps6}}});
}

ForbiddenReport forbidden_degeneration_check(double eps, int count, std::uint64_t seed, int threads) {
  ForbiddenReport r;
  r.epsilon = eps;
  r.samples = count;
  r.seed = seed;
  if (count == 0) return r;

  for (const SampleOutcome& o :
       classify_samples(sample_perturbations(CanonicalClass::Psi2, eps, count, seed, SampleMode::Ambient, threads),
                        threads)) {
    if (o.cls) {
      ++r.class_histogram[*o.cls];
    } else {
      ++r.indeterminate_count;
    }
  }
  r.psi5_count = r.class_histogram.count(CanonicalClass::Psi5) ? r.class_histogram[CanonicalClass::Psi5] : 0;

  const Rational e = rationalize(eps);
  const ExactDirection e2{Surd(Rational(0)), Surd(Rational(1))};
  for (int k = 0; k < count; ++k) {
    const auto idx = static_cast<std::uint64_t>(k);
    const Law<Rational> law =
        psi2_slice_law(counter_rational(seed, idx, 100, e), counter_rational(seed, idx, 101, e));
    ++r.slice_samples;
    if (!is_jordan(law)) continue;
    if (find_ideals_1d(law).contains(e2)) ++r.slice_with_ideal;
    if (is_simple(law)) ++r.slice_simple;
  }
  return r;
}

}  // namespace jordan2
