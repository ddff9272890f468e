#include <benchmark/benchmark.h>

#include "cyclelab/adjuster.hpp"
#include "cyclelab/connect.hpp"
#include "cyclelab/exact_path.hpp"
#include "cyclelab/expander.hpp"
#include "cyclelab/families.hpp"
#include "cyclelab/spectrum.hpp"

using namespace cyclelab;

namespace {

void BM_SpectrumExact(benchmark::State& state) {
  int half = static_cast<int>(state.range(0));
  Graph g = complete_bipartite(half, half);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cycle_spectrum_exact(g, 24, false));
  }
}
BENCHMARK(BM_SpectrumExact)->Arg(4)->Arg(6)->Arg(8);

void BM_SpectrumExactPetersen(benchmark::State& state) {
  Graph g = petersen_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cycle_spectrum_exact(g));
  }
}
BENCHMARK(BM_SpectrumExactPetersen);

void BM_ExhaustiveExpanderCheck(benchmark::State& state) {
  Graph g = random_gnp(static_cast<int>(state.range(0)), 0.3, 7);
  ExpansionParams params(0.5, 2.0);
  CheckSettings settings;
  settings.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_expander(g, params, settings));
  }
}
BENCHMARK(BM_ExhaustiveExpanderCheck)->Arg(12)->Arg(16)->Arg(20);

void BM_ConnectAvoidingGrid(benchmark::State& state) {
  int side = static_cast<int>(state.range(0));
  Graph g = grid_graph(side, side);
  VertexSet a, b;
  for (int r = 0; r < side; ++r) {
    a.push_back(r * side);
    b.push_back(r * side + side - 1);
  }
  VertexSet w{side + 1, side + 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(connect_avoiding(g, a, b, w));
  }
}
BENCHMARK(BM_ConnectAvoidingGrid)->Arg(8)->Arg(16)->Arg(32);

void BM_ExactPathOracle(benchmark::State& state) {
  Graph g = complete_bipartite(6, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_length_path_oracle(g, 0, 6, 9));
  }
}
BENCHMARK(BM_ExactPathOracle);

void BM_SimpleAdjuster(benchmark::State& state) {
  Graph g = complete_bipartite(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  AdjusterSearchSettings settings;
  settings.d = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_adjuster_avoiding(g, {}, settings));
  }
}
BENCHMARK(BM_SimpleAdjuster)->Arg(8)->Arg(12);

void BM_LowDiameterCore(benchmark::State& state) {
  Graph g = random_gnp(static_cast<int>(state.range(0)), 0.1, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(low_diameter_core(g, {0, 1, 2}));
  }
}
BENCHMARK(BM_LowDiameterCore)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
