#include <benchmark/benchmark.h>

#include <memory>

#include "mhorn/horn_body.hpp"
#include "mhorn/svf.hpp"

namespace {

mhorn::SingularSpectrum staircase(int n, double top) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = top * (n - i) / n;
  return mhorn::SingularSpectrum(v);
}

void BM_Membership(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto catalog = std::make_shared<const mhorn::TripleCatalog>(mhorn::enumerateCatalog(n));
  const mhorn::BodySpec spec(staircase(n, 2.0), staircase(n, 3.0), catalog);
  const auto nu = mhorn::sampleBody(spec, 1, mhorn::RngSeed{1})[0];
  for (auto _ : state) benchmark::DoNotOptimize(mhorn::membership(spec, nu, 1e-9));
  state.counters["inequalities"] = 2.0 * static_cast<double>(catalog->size());
}
BENCHMARK(BM_Membership)->DenseRange(2, 8);

void BM_Realize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const mhorn::BodySpec spec(staircase(n, 2.0), staircase(n, 3.0));
  const auto nu = mhorn::sampleBody(spec, 1, mhorn::RngSeed{2})[0];
  mhorn::RealizeOptions opts;
  opts.restarts = 1;
  for (auto _ : state) benchmark::DoNotOptimize(mhorn::realize(spec, nu, opts, mhorn::RngSeed{3}));
}
BENCHMARK(BM_Realize)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_VnMembership(benchmark::State& state) {
  const int maxN = static_cast<int>(state.range(0));
  const auto f = mhorn::spectrumToStep(staircase(12, 2.0));
  const auto g = mhorn::spectrumToStep(staircase(12, 1.0));
  const auto h = mhorn::spectrumToStep(mhorn::matrixModel(f, g, 60, mhorn::RngSeed{4}).product);
  for (auto _ : state) benchmark::DoNotOptimize(mhorn::vnMembership(f, g, h, maxN, 1e-9));
}
BENCHMARK(BM_VnMembership)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

}  // namespace
