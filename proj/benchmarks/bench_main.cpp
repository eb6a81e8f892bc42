#include <benchmark/benchmark.h>

#include "tetrachain/chain.hpp"
#include "tetrachain/markov.hpp"
#include "tetrachain/monodromy.hpp"
#include "tetrachain/zigzag.hpp"

namespace tc = tetrachain;

static void BM_BuildChain(benchmark::State& state) {
  const auto choices = tc::random_choices(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tc::build_chain(choices, tc::TraceMode::kSkip));
  }
}
BENCHMARK(BM_BuildChain)->Arg(10)->Arg(100)->Arg(1000);

static void BM_BuildChainTraced(benchmark::State& state) {
  const auto choices = tc::random_choices(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tc::build_chain(choices, tc::TraceMode::kRecord));
  }
}
BENCHMARK(BM_BuildChainTraced)->Arg(10)->Arg(100);

static void BM_EnumerateZigzags(benchmark::State& state) {
  const auto t = tc::random_chain(static_cast<std::size_t>(state.range(0)), 2, tc::TraceMode::kSkip)
                     .triangulation;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tc::enumerate_zigzags(t));
  }
}
BENCHMARK(BM_EnumerateZigzags)->Arg(10)->Arg(100)->Arg(1000);

static void BM_AllMonodromies(benchmark::State& state) {
  const auto t = tc::random_chain(static_cast<std::size_t>(state.range(0)), 3, tc::TraceMode::kSkip)
                     .triangulation;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tc::all_monodromies(t));
  }
}
BENCHMARK(BM_AllMonodromies)->Arg(10)->Arg(100)->Arg(1000);

static void BM_DirectMonodromy(benchmark::State& state) {
  const auto t = tc::random_chain(static_cast<std::size_t>(state.range(0)), 3, tc::TraceMode::kSkip)
                     .triangulation;
  const auto f = t.live_face_ids().back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tc::z_monodromy(t, f));
  }
}
BENCHMARK(BM_DirectMonodromy)->Arg(10)->Arg(100);

static void BM_Census(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tc::zigzag_census(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Census)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ExactPk(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tc::exact_pk(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_ExactPk)->Arg(60)->Arg(500);
BENCHMARK_MAIN();
