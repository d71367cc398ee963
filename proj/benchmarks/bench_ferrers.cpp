#include <benchmark/benchmark.h>

#include <vector>

#include "ferrers/bounds.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/primes.hpp"

using ferrers::u64;

namespace {

ferrers::PrimeTable& warm_table() {
  static ferrers::PrimeTable table(1u << 21);
  return table;
}

void BM_sieve_to_1e6(benchmark::State& state) {
  for (auto _ : state) {
    ferrers::PrimeTable table(1000000);
    benchmark::DoNotOptimize(table.size());
  }
}
BENCHMARK(BM_sieve_to_1e6)->Unit(benchmark::kMillisecond);

void BM_factorize_near_1e6(benchmark::State& state) {
  ferrers::PrimeTable& table = warm_table();
  u64 n = 999000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(table.factorize(n));
    if (++n > 1000000) n = 999000;
  }
}
BENCHMARK(BM_factorize_near_1e6);

void BM_to_diagram_near_1e6(benchmark::State& state) {
  ferrers::PrimeTable& table = warm_table();
  u64 n = 999000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ferrers::to_diagram(n, table));
    if (++n > 1000000) n = 999000;
  }
}
BENCHMARK(BM_to_diagram_near_1e6);

void BM_from_diagram(benchmark::State& state) {
  ferrers::PrimeTable& table = warm_table();
  const ferrers::Partition d = ferrers::to_diagram(999999, table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ferrers::from_diagram(d, table));
  }
}
BENCHMARK(BM_from_diagram);

void BM_is_subfigure(benchmark::State& state) {
  const ferrers::Partition f(std::vector<u64>(40, 25));
  const ferrers::Partition g(std::vector<u64>(48, 30));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ferrers::is_subfigure(f, g));
  }
}
BENCHMARK(BM_is_subfigure);

void BM_enumerate_8x8(benchmark::State& state) {
  const ferrers::Partition rect(std::vector<u64>(8, 8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ferrers::enumerate_subfigures(rect));
  }
}
BENCHMARK(BM_enumerate_8x8)->Unit(benchmark::kMillisecond);

void BM_count_subfigures_60x60(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ferrers::count_subfigures_rect({60, 60}));
  }
}
BENCHMARK(BM_count_subfigures_60x60);

void BM_pi_lower_bound(benchmark::State& state) {
  double x = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ferrers::pi_lower_bound(x));
    x = x < 1e300 ? x * 1.5 : 2.0;
  }
}
BENCHMARK(BM_pi_lower_bound);

void BM_bound_report_1e6(benchmark::State& state) {
  warm_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ferrers::bound_report(1000000.0));
  }
}
BENCHMARK(BM_bound_report_1e6);

void BM_verify_theorem_1e4(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ferrers::verify_theorem(10000));
  }
}
BENCHMARK(BM_verify_theorem_1e4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
