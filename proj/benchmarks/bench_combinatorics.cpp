#include <benchmark/benchmark.h>

#include "mhorn/combinatorics.hpp"

namespace {

void BM_EnumerateCatalog(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t size = 0;
  for (auto _ : state) {
    auto catalog = mhorn::enumerateCatalog(n);
    size = catalog.size();
    benchmark::DoNotOptimize(catalog);
  }
  state.counters["triples"] = static_cast<double>(size);
}
BENCHMARK(BM_EnumerateCatalog)->DenseRange(2, 8)->Unit(benchmark::kMillisecond);

void BM_LrCoefficient(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  // c^{nu}_{lam, lam} with lam a staircase and nu its doubled staircase.
  std::vector<int> stair, twice;
  for (int i = k; i >= 1; --i) {
    stair.push_back(i);
    twice.push_back(2 * i);
  }
  const mhorn::Partition lam(stair);
  const mhorn::Partition nu(twice);
  for (auto _ : state) benchmark::DoNotOptimize(mhorn::lrCoefficient(lam, lam, nu));
}
BENCHMARK(BM_LrCoefficient)->DenseRange(2, 5);

}  // namespace
