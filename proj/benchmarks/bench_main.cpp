#include <benchmark/benchmark.h>

#include "qset/catalog.hpp"
#include "qset/constructions.hpp"
#include "qset/difference_graph.hpp"
#include "qset/intset.hpp"
#include "qset/quotient.hpp"
#include "qset/search.hpp"
#include "qset/stats.hpp"

using namespace qset;

static void BM_GapReportAn(benchmark::State& state) {
  const Subset a = construct_an(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gap_report(a));
}
BENCHMARK(BM_GapReportAn)->DenseRange(1, 4);

static void BM_DifferenceGraph(benchmark::State& state) {
  const Subset a = construct_ck(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_difference_graph(a, Side::right));
}
BENCHMARK(BM_DifferenceGraph)->Arg(2)->Arg(6)->Arg(12);

static void BM_SearchSd16(benchmark::State& state) {
  const Group g = make_group("sd16");
  SearchOptions o;
  o.threads = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_balance_check(g, 4, o));
}
BENCHMARK(BM_SearchSd16)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SmallSetsF21(benchmark::State& state) {
  const Group g = make_group("f21");
  for (auto _ : state) benchmark::DoNotOptimize(verify_small_sets_balanced(g));
}
BENCHMARK(BM_SmallSetsF21)->Unit(benchmark::kMillisecond);

static void BM_FindGapSet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_gap_set(-1, 16));
}
BENCHMARK(BM_FindGapSet)->Unit(benchmark::kMillisecond);

static void BM_ExactBall(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gap_distribution(2, ExactMode{false, static_cast<std::uint32_t>(state.range(0))}));
}
BENCHMARK(BM_ExactBall)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_MonteCarlo(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gap_distribution(3, MonteCarloMode{1000, 1, 0.5, 1}));
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
