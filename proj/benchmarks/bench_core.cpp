#include <benchmark/benchmark.h>

#include <vector>

#include "antwalk/conductance.hpp"
#include "antwalk/counterexample.hpp"
#include "antwalk/geodesic.hpp"
#include "antwalk/losange.hpp"
#include "antwalk/process.hpp"
#include "antwalk/sp_expression.hpp"
#include "antwalk/standard_graphs.hpp"
#include "antwalk/walk.hpp"

using namespace antwalk;

namespace {

void BM_SampleWalkSierpinski(benchmark::State& state) {
  const Graph g = double_sierpinski(static_cast<std::uint32_t>(state.range(0)));
  const WeightState w(g.edge_count());
  RandomStream rng(1, 0);
  std::size_t steps = 0;
  for (auto _ : state) {
    const auto t = sample_walk(g, w, 1.0, rng);
    steps += t.edges.size();
    benchmark::DoNotOptimize(t.edges.data());
  }
  state.counters["edges/walk"] = benchmark::Counter(static_cast<double>(steps),
                                                    benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_SampleWalkSierpinski)->DenseRange(1, 4);

void BM_ProcessStep(benchmark::State& state) {
  const Graph g = losange();
  const auto variant = static_cast<RuleVariant>(state.range(0));
  RandomStream rng(2, 0);
  WeightState w(g.edge_count());
  for (auto _ : state) run_process(g, {variant, 1.0}, 1, rng, {}, w);
  state.SetLabel(std::string(to_string(variant)));
}
BENCHMARK(BM_ProcessStep)
    ->Arg(static_cast<int>(RuleVariant::LoopErased))
    ->Arg(static_cast<int>(RuleVariant::UniformGeodesic));

void BM_GeodesicDag(benchmark::State& state) {
  const Graph g = double_sierpinski(static_cast<std::uint32_t>(state.range(0)));
  RandomStream rng(3, 0);
  for (auto _ : state) {
    const auto dag = geodesic_dag(g);
    benchmark::DoNotOptimize(sample_geodesic(g, *dag, rng));
  }
}
BENCHMARK(BM_GeodesicDag)->DenseRange(2, 6, 2);

void BM_LaplacianConductance(benchmark::State& state) {
  const Graph g = double_sierpinski(static_cast<std::uint32_t>(state.range(0)));
  const std::vector<double> w(g.edge_count(), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_conductance(g, w).value);
}
BENCHMARK(BM_LaplacianConductance)->DenseRange(2, 5);

void BM_SpConductance(benchmark::State& state) {
  const auto expr = parse_sp("P(S(e,P(e,S(e,e))),S(P(e,e),S(e,P(e,S(e,e)))))");
  const std::vector<double> w(expr.leaf_count(), 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(sp_conductance(expr, w));
}
BENCHMARK(BM_SpConductance);

void BM_PVectorExact(benchmark::State& state) {
  LosangeWeights w;
  w.w = {0.3, 0.2, 0.05, 0.25, 0.35};
  for (auto _ : state) benchmark::DoNotOptimize(p_vector_exact(w));
}
BENCHMARK(BM_PVectorExact);

void BM_CounterexampleExactP(benchmark::State& state) {
  const auto length = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_p(length, 0.01));
}
BENCHMARK(BM_CounterexampleExactP)->RangeMultiplier(2)->Range(16, 128);

void BM_CounterexampleCoverSampler(benchmark::State& state) {
  const auto length = static_cast<std::uint32_t>(state.range(0));
  RandomStream rng(4, 0);
  const SideWeights w{0.3, 0.7, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(sample_counterexample_cover(length, w, rng));
}
BENCHMARK(BM_CounterexampleCoverSampler)->RangeMultiplier(10)->Range(10, 1000);

}  // namespace

BENCHMARK_MAIN();
