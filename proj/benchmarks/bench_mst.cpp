#include <benchmark/benchmark.h>

#include "meancut/dataset.hpp"
#include "meancut/graph.hpp"
#include "meancut/mst.hpp"
#include "meancut/pathsim.hpp"

namespace {

using namespace meancut;

const Kernel kLap{KernelKind::laplacian, 1.0};

Dataset blobs(std::size_t n) {
  SyntheticParams params;
  params.clusters = 8;
  return gen_synthetic(Preset::blobs, n, 1, params);
}

void BM_KruskalFull(benchmark::State& state) {
  Dataset d = blobs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kruskal_full(d, kLap));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KruskalFull)->Range(512, 8192)->Complexity();

void BM_FastMst(benchmark::State& state) {
  Dataset d = blobs(static_cast<std::size_t>(state.range(0)));
  double ratio = static_cast<double>(state.range(1)) / 100.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(fast_mst(d, kLap, ratio));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FastMst)
    ->ArgsProduct({{512, 2048, 8192}, {5, 20, 50, 80}})
    ->Complexity();

void BM_TreePathsim(benchmark::State& state) {
  Dataset d = blobs(static_cast<std::size_t>(state.range(0)));
  SpanningTree t = kruskal_full(d, kLap);
  for (auto _ : state)
    benchmark::DoNotOptimize(tree_pathsim(t, d.n));
}
BENCHMARK(BM_TreePathsim)->Range(512, 4096);

void BM_EpsComponents(benchmark::State& state) {
  Dataset d = blobs(static_cast<std::size_t>(state.range(0)));
  double eps = mbr_diagonal(d) * 0.2;
  for (auto _ : state)
    benchmark::DoNotOptimize(eps_components(d, eps));
}
BENCHMARK(BM_EpsComponents)->Range(512, 8192);

}  // namespace

BENCHMARK_MAIN();
