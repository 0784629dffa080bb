// Serial reference kernels against their OpenMP counterparts, and the
// sequence-driven counter against the brute-force oracle.

#include <benchmark/benchmark.h>

#include "twtri/bench.hpp"
#include "twtri/generators.hpp"
#include "twtri/oracle.hpp"
#include "twtri/seqgen.hpp"

using namespace twtri;

namespace {

EdgeList gnp(VertexId n, double p) { return gen_graph(Family::Gnp, {.n = n, .p = p}, 1).graph; }

void BM_OracleSerial(benchmark::State& state) {
  const auto g = oracle::PlainGraph::from_edges(gnp(static_cast<VertexId>(state.range(0)), 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::count_naive_serial(g));
}
BENCHMARK(BM_OracleSerial)->Arg(500)->Arg(2000);

void BM_OracleParallel(benchmark::State& state) {
  const auto g = oracle::PlainGraph::from_edges(gnp(static_cast<VertexId>(state.range(0)), 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::count_naive(g));
}
BENCHMARK(BM_OracleParallel)->Arg(500)->Arg(2000);

void BM_BestPairSerial(benchmark::State& state) {
  const Trigraph g = Trigraph::from_graph(gnp(static_cast<VertexId>(state.range(0)), 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(best_pair_serial(g));
}
BENCHMARK(BM_BestPairSerial)->Arg(60)->Arg(150);

void BM_BestPairParallel(benchmark::State& state) {
  const Trigraph g = Trigraph::from_graph(gnp(static_cast<VertexId>(state.range(0)), 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(best_pair_parallel(g));
}
BENCHMARK(BM_BestPairParallel)->Arg(60)->Arg(150);

// Width-0 inputs, where the counter runs in linear time.
void BM_CountCograph(benchmark::State& state) {
  const GeneratedGraph co =
      gen_graph(Family::Cograph, {.n = static_cast<VertexId>(state.range(0)), .join_prob = 0.1}, 1);
  const CompactSequence seq = gen_twin_first(co.graph, *co.cotree);
  for (auto _ : state) benchmark::DoNotOptimize(count_triangles(co.graph, seq).triangles);
}
BENCHMARK(BM_CountCograph)->Arg(1000)->Arg(4000);

void BM_OracleCograph(benchmark::State& state) {
  const GeneratedGraph co =
      gen_graph(Family::Cograph, {.n = static_cast<VertexId>(state.range(0)), .join_prob = 0.1}, 1);
  const auto g = oracle::PlainGraph::from_edges(co.graph);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::count_naive_serial(g));
}
BENCHMARK(BM_OracleCograph)->Arg(1000)->Arg(4000);

void BM_Sweep(benchmark::State& state) {
  SweepSpec spec;
  spec.family = Family::Gnp;
  spec.sizes = {40};
  spec.params = {0.2};
  spec.seeds = {1, 2, 3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(run_bench(spec).size());
}
BENCHMARK(BM_Sweep);

}  // namespace

BENCHMARK_MAIN();
