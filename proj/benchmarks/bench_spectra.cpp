#include <benchmark/benchmark.h>

#include <random>

#include "mhorn/spectra.hpp"

namespace {

mhorn::ComplexMatrix ginibre(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  mhorn::ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  return m;
}

void BM_SingularValues(benchmark::State& state) {
  const auto m = ginibre(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(mhorn::singularValues(m));
}
BENCHMARK(BM_SingularValues)->RangeMultiplier(2)->Range(2, 64);

void BM_HaarUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mhorn::haarUnitary(n, mhorn::RngSeed{seed++}));
}
BENCHMARK(BM_HaarUnitary)->RangeMultiplier(2)->Range(2, 64);

void BM_ProductSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  const mhorn::SingularSpectrum lam(v);
  const auto u = mhorn::haarUnitary(n, mhorn::RngSeed{3});
  for (auto _ : state) benchmark::DoNotOptimize(mhorn::productSpectrum(lam, lam, u));
}
BENCHMARK(BM_ProductSpectrum)->RangeMultiplier(2)->Range(2, 128);

}  // namespace
