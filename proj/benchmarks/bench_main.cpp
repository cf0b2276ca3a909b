#include <benchmark/benchmark.h>

#include "opmeans/means.hpp"
#include "opmeans/polar.hpp"
#include "opmeans/random.hpp"
#include "opmeans/spectral.hpp"
#include "opmeans/verify.hpp"

namespace {

using namespace opmeans;

const ToleranceConfig kCfg{};

HpdPair bench_pair(std::size_t n) {
  GenSpec spec;
  spec.dim = n;
  spec.seed = 42;
  spec.cond_target = 100.0;
  return random_pair(spec, kCfg);
}

void BM_HermitianEigen(benchmark::State& state) {
  const HpdPair p = bench_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(p.a(), kCfg));
}
BENCHMARK(BM_HermitianEigen)->RangeMultiplier(2)->Range(2, 32);

void BM_Polar(benchmark::State& state) {
  const HpdPair p = bench_pair(static_cast<std::size_t>(state.range(0)));
  const ComplexMatrix t = p.a() * p.b();
  for (auto _ : state) benchmark::DoNotOptimize(polar(t, kCfg));
}
BENCHMARK(BM_Polar)->RangeMultiplier(2)->Range(2, 32);

void BM_HeronMean(benchmark::State& state) {
  const HpdPair p = bench_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(heron_mean(p, kCfg));
}
BENCHMARK(BM_HeronMean)->RangeMultiplier(2)->Range(2, 32);

void BM_WassersteinMean(benchmark::State& state) {
  const HpdPair p = bench_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wasserstein_mean(p, kCfg));
}
BENCHMARK(BM_WassersteinMean)->RangeMultiplier(2)->Range(2, 32);

void BM_ProofChainReport(benchmark::State& state) {
  const HpdPair p = bench_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(proof_chain_report(p, kCfg));
}
BENCHMARK(BM_ProofChainReport)->RangeMultiplier(2)->Range(2, 32);

}  // namespace

BENCHMARK_MAIN();
