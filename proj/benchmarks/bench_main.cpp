#include <benchmark/benchmark.h>

#include "jordan2/contract.hpp"
#include "jordan2/deform.hpp"

namespace jordan2 {
namespace {

Law<Rational> basis_changed(CanonicalClass c) {
  const auto f = LinearMap<Rational>::from_images({{Rational(2), Rational(-1, 3)}, {Rational(5, 2), Rational(1)}});
  return act(canonical_law(c), f);
}

void BM_IsJordanExact(benchmark::State& state) {
  const Law<Rational> law = basis_changed(static_cast<CanonicalClass>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_jordan(law));
}
BENCHMARK(BM_IsJordanExact)->DenseRange(0, 6);

void BM_ClassifyExact(benchmark::State& state) {
  const Law<Rational> law = basis_changed(static_cast<CanonicalClass>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(law).cls);
}
BENCHMARK(BM_ClassifyExact)->DenseRange(0, 6);

void BM_ClassifyReal(benchmark::State& state) {
  const Law<double> law = basis_changed(static_cast<CanonicalClass>(state.range(0))).cast<double>(1e-9);
  for (auto _ : state) benchmark::DoNotOptimize(classify(law).cls);
}
BENCHMARK(BM_ClassifyReal)->DenseRange(0, 6);

void BM_OrbitAndGSpace(benchmark::State& state) {
  const Law<Rational> law = basis_changed(CanonicalClass::Psi0);
  for (auto _ : state) benchmark::DoNotOptimize(tangent_report(law).g_dim);
}
BENCHMARK(BM_OrbitAndGSpace);

void BM_NewtonProject(benchmark::State& state) {
  Coords6 start = law_coords(canonical_law(CanonicalClass::Psi1).cast<double>(1e-9));
  start[2] += 1e-3;
  start[4] -= 2e-3;
  for (auto _ : state) benchmark::DoNotOptimize(newton_project(start).residual_norm);
}
BENCHMARK(BM_NewtonProject);

void BM_RigidityProbe(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rigidity_probe(CanonicalClass::Psi3, 1e-3, 500, 1, threads).samples);
}
BENCHMARK(BM_RigidityProbe)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Contract(benchmark::State& state) {
  const auto& kc = known_contractions();
  for (auto _ : state)
    for (const KnownContraction& c : kc) benchmark::DoNotOptimize(contract(canonical_law(c.source), c.family).outcome);
}
BENCHMARK(BM_Contract);

void BM_DegenerationGraph(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(emit_dot(degeneration_graph()).size());
}
BENCHMARK(BM_DegenerationGraph);

}  // namespace
}  // namespace jordan2

BENCHMARK_MAIN();
