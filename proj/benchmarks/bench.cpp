#include <random>

#include <benchmark/benchmark.h>

#include "toric_cobordism/certificate.hpp"

using namespace tcob;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long long>(rng() % 21) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_BuildDeltaQ(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_delta_Q(n, kDefaultR1, kDefaultR2));
}
BENCHMARK(BM_BuildDeltaQ)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_BuildFamily(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_family(k, Ring::Z));
}
BENCHMARK(BM_BuildFamily)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

// Relative Z homology of the small cover cobordism.
static void BM_Oracle(benchmark::State& state) {
  const auto fam = build_family(static_cast<std::size_t>(state.range(0)), Ring::GF2);
  for (auto _ : state) benchmark::DoNotOptimize(is_orientable_space(fam));
}
BENCHMARK(BM_Oracle)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Certify(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(glue_certificate(k, CertificateKind::Complex));
}
BENCHMARK(BM_Certify)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
