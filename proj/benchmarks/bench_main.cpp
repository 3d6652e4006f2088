#include <benchmark/benchmark.h>

#include "walkup/walkup.hpp"

using namespace walkup;

namespace {

void BM_BoundaryRank(benchmark::State& state) {
  const auto m = build_m4_15();
  const int j = static_cast<int>(state.range(0));
  const auto d = boundary_matrix(m, j);
  for (auto _ : state) benchmark::DoNotOptimize(d.rank());
}
BENCHMARK(BM_BoundaryRank)->DenseRange(1, 4);

void BM_Betti(benchmark::State& state) {
  const auto m = build_m4_15();
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(m));
}
BENCHMARK(BM_Betti)->Unit(benchmark::kMillisecond);

// One worker's chunk of the exhaustive scan.
void BM_TightnessChunk(benchmark::State& state) {
  const TightnessChecker checker(build_m4_15());
  std::uint64_t mask = 1;
  for (auto _ : state) {
    for (int i = 0; i < 512; ++i) {
      benchmark::DoNotOptimize(checker.failing_degrees(mask));
      mask = mask % 0x7ffe + 1;
    }
  }
  state.SetItemsProcessed(state.iterations() * 512);
}
BENCHMARK(BM_TightnessChunk)->Unit(benchmark::kMillisecond);

void BM_Automorphisms(benchmark::State& state) {
  const auto m = build_m4_15();
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(m));
}
BENCHMARK(BM_Automorphisms)->Unit(benchmark::kMillisecond);

void BM_CliqueComplex(benchmark::State& state) {
  const auto x = random_stacked_sphere(4, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(clique_complex(x));
}
BENCHMARK(BM_CliqueComplex)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMicrosecond);

void BM_Decompose(benchmark::State& state) {
  const auto m = build_m4_15();
  for (auto _ : state) benchmark::DoNotOptimize(kalai_decompose(m));
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
