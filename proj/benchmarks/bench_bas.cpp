#include <benchmark/benchmark.h>

#include "bas/bas.hpp"

namespace {

void BM_Michalewicz(benchmark::State& state) {
  const bas::Position x(static_cast<std::size_t>(state.range(0)), 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(bas::michalewicz(x));
}
BENCHMARK(BM_Michalewicz)->Arg(2)->Arg(10)->Arg(30);

void BM_GoldsteinPrice(benchmark::State& state) {
  const bas::Position x{0.3, -0.7};
  for (auto _ : state) benchmark::DoNotOptimize(bas::goldstein_price(x));
}
BENCHMARK(BM_GoldsteinPrice);

void BM_SampleDirection(benchmark::State& state) {
  bas::Rng rng(1);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bas::sample_direction(k, rng));
}
BENCHMARK(BM_SampleDirection)->Arg(2)->Arg(30);

void BM_Run(benchmark::State& state) {
  const auto obj = bas::lookup_objective("michalewicz", 2);
  bas::BasConfig config;
  config.init = obj.default_init_box;
  config.max_iters = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ++config.seed;
    benchmark::DoNotOptimize(bas::run(config, obj));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Run)->Arg(100)->Arg(1000);

void BM_GridSearch(benchmark::State& state) {
  const auto obj = bas::lookup_objective("goldstein_price", 2);
  const bas::GridSpec grid{obj.default_init_box, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(bas::grid_search(obj, grid, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_GridSearch)->Arg(101)->Arg(401);

}  // namespace
BENCHMARK_MAIN();
