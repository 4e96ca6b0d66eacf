#include <benchmark/benchmark.h>

#include <random>

#include "dsl.hpp"
#include "mfcalc/smith.hpp"
#include "mfcalc/spectral.hpp"
#include "mfcalc/torus.hpp"

namespace {

mfcalc::IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  mfcalc::IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  }
  return a;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(mfcalc::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SpectralOracle(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mfcalc::spectral_e3_report(k, state.range(1) != 0));
}
BENCHMARK(BM_SpectralOracle)
    ->Args({8, 0})
    ->Args({12, 0})
    ->Args({12, 1})
    ->Args({14, 1})
    ->Unit(benchmark::kMillisecond);

void BM_QManifold(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mfcalc::q_manifold(k));
}
BENCHMARK(BM_QManifold)->Arg(12)->Arg(40);

void BM_TorusTower(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mfcalc::torus_tower(k));
}
BENCHMARK(BM_TorusTower)->Arg(8)->Arg(24);

void BM_ParseExpr(benchmark::State& state) {
  const std::string text = "SxS(2,4) # 2*SxS(3,3) # Sig1(M(3)) # Sig0(SxS(1,4) # M(2)) # Sig1(X(2))";
  for (auto _ : state) benchmark::DoNotOptimize(mfcalc::cli::parse_expr(text));
}
BENCHMARK(BM_ParseExpr);

}  // namespace

BENCHMARK_MAIN();
