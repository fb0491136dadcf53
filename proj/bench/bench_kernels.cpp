#include <benchmark/benchmark.h>

#include <random>

#include "relaxed/kernels.hpp"
#include "relaxed/zfc.hpp"

using namespace relaxed;
using kernels::BitRows;

namespace {

BitRows random_rows(std::size_t n, std::size_t width, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(density);
  BitRows rows(n, boost::dynamic_bitset<>(width));
  for (auto& r : rows)
    for (std::size_t j = 0; j < width; ++j) r[j] = bit(rng);
  return rows;
}

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void BM_BoolProduct(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_rows(n, n, 0.05, 1), b = random_rows(n, n, 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bool_product(a, b, n, exec_of(state)));
}

void BM_Reachability(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto r = random_rows(n, n, 2.0 / static_cast<double>(n), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reachability(r, exec_of(state)));
}

void BM_HfStages(benchmark::State& state) {
  auto limit = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::hf_stages(limit, exec_of(state)));
}

void BM_ZfcCheckAll(benchmark::State& state) {
  auto m = zfc::vk_model(static_cast<std::size_t>(state.range(0)));
  zfc::CheckOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(zfc::check_all(m, opt));
}

void BM_ZfcScopedV5(benchmark::State& state) {
  auto m = zfc::vk_model(5, 4);
  zfc::CheckOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(zfc::check_axiom(m, zfc::Axiom::powerset, opt));
}

}  // namespace

// second argument: 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_BoolProduct)->ArgsProduct({{128, 512, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reachability)->ArgsProduct({{128, 512, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HfStages)->ArgsProduct({{1 << 16, 1 << 20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZfcCheckAll)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZfcScopedV5)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
