#include <benchmark/benchmark.h>

#include <random>

#include "rpt/block_composer.hpp"
#include "rpt/generators.hpp"
#include "rpt/spirality.hpp"

using namespace rpt;

namespace {

SpiralitySet dense_set(int width, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> v;
  for (int x = -width; x <= width; x += 2)
    if (rng() & 1) v.push_back(x);
  return SpiralitySet::from_values(v);
}

template <SpiralitySet (*Sum)(const SpiralitySet&, const SpiralitySet&)>
void BM_Sum(benchmark::State& st) {
  SpiralitySet a = dense_set(static_cast<int>(st.range(0)), 1), b = dense_set(static_cast<int>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(Sum(a, b));
}

BENCHMARK(BM_Sum<cartesian_sum_naive>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_Sum<cartesian_sum_serial>)->RangeMultiplier(4)->Range(64, 16384);
BENCHMARK(BM_Sum<cartesian_sum_omp>)->RangeMultiplier(4)->Range(64, 16384);
BENCHMARK(BM_Sum<cartesian_sum_fft>)->RangeMultiplier(4)->Range(64, 16384);

void run_tester(benchmark::State& st, RandomKind kind, FastPath fp) {
  Graph g = gen_random(kind, static_cast<int>(st.range(0)), 17);
  ComposeOptions o;
  o.realize = false;
  o.fast_path = fp;
  for (auto _ : st) benchmark::DoNotOptimize(test_partial2tree(g, o).yes);
  st.SetComplexityN(st.range(0));
}

void BM_IpFast(benchmark::State& st) { run_tester(st, RandomKind::IndependentParallel, FastPath::On); }
void BM_IpGeneral(benchmark::State& st) { run_tester(st, RandomKind::IndependentParallel, FastPath::Off); }
void BM_Sp(benchmark::State& st) { run_tester(st, RandomKind::Sp, FastPath::Off); }
void BM_Partial2Tree(benchmark::State& st) { run_tester(st, RandomKind::Partial2Tree, FastPath::Auto); }

BENCHMARK(BM_IpFast)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IpGeneral)->RangeMultiplier(4)->Range(1 << 8, 1 << 12)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sp)->RangeMultiplier(2)->Range(250, 2000)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Partial2Tree)->RangeMultiplier(2)->Range(250, 2000)->Complexity()->Unit(benchmark::kMillisecond);

void BM_Realize(benchmark::State& st) {
  LowerBound lb = gen_lower_bound(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(test_partial2tree(lb.g).rep.coords.size());
}
BENCHMARK(BM_Realize)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
