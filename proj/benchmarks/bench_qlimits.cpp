#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "qlimits/channel.hpp"
#include "qlimits/fock.hpp"
#include "qlimits/hadamard.hpp"
#include "qlimits/infotheory.hpp"
#include "qlimits/ppm.hpp"
#include "qlimits/random.hpp"

namespace {

void BM_BinaryGaussianMi(benchmark::State& state) {
  const double ns = 1e-3 * static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlimits::binary_gaussian_mutual_information(std::sqrt(2 * ns), 0.5));
  }
}
BENCHMARK(BM_BinaryGaussianMi)->Arg(1)->Arg(100)->Arg(10000);

void BM_ExtendedSchemeMi(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlimits::extended_scheme_mutual_information({order, 1e-4, 0.8}));
  }
}
BENCHMARK(BM_ExtendedSchemeMi)->RangeMultiplier(2)->Range(2, 16);

void BM_OptimizeP1(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qlimits::optimize_p1(order, 1e-4));
}
BENCHMARK(BM_OptimizeP1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_HolevoChiBpsk(benchmark::State& state) {
  const double ns = static_cast<double>(state.range(0));
  const auto ensemble = qlimits::Constellation::bpsk(std::sqrt(ns));
  const int cutoff = qlimits::choose_cutoff(ns);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qlimits::holevo_chi(ensemble, qlimits::ChannelParams::lossless(), cutoff));
  }
}
BENCHMARK(BM_HolevoChiBpsk)->Arg(1)->Arg(4)->Arg(16);

void BM_GaussianEnsembleChi(benchmark::State& state) {
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qlimits::gaussian_ensemble_chi(1.0, nodes, nodes));
}
BENCHMARK(BM_GaussianEnsembleChi)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_CascadeTransform(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  qlimits::RandomStream rng(1);
  std::vector<qlimits::Amplitude> x(m);
  for (auto& v : x) v = {rng.normal(), rng.normal()};
  for (auto _ : state) benchmark::DoNotOptimize(qlimits::cascade_transform(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CascadeTransform)->RangeMultiplier(4)->Range(4, 1 << 14)->Complexity(benchmark::oNLogN);

void BM_OptimalPpmOrderExact(benchmark::State& state) {
  const double ns = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qlimits::optimal_ppm_order_exact(ns));
}
BENCHMARK(BM_OptimalPpmOrderExact)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
