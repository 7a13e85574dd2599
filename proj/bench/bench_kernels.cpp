// Serial reference vs OpenMP for the three parallel kernels.
//   ./bench_kernels --benchmark_filter=Hilbert
// Thread count follows OMP_NUM_THREADS.

#include <random>

#include <benchmark/benchmark.h>

#include "brieskorn/gf2.hpp"
#include "brieskorn/graded_algebra.hpp"
#include "brieskorn/module_analysis.hpp"
#include "brieskorn/presentations.hpp"

using namespace brieskorn;

namespace {

void BM_HilbertAk(benchmark::State& state, Execution exec) {
  const auto p = presentations::ak_milnor_fibre_even(6);
  const auto cap = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_dims_at_cap(p, {-10, 10}, cap, exec));
}

void BM_HilbertAkSerial(benchmark::State& s) { BM_HilbertAk(s, Execution::Serial); }
void BM_HilbertAkParallel(benchmark::State& s) { BM_HilbertAk(s, Execution::Parallel); }
BENCHMARK(BM_HilbertAkSerial)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HilbertAkParallel)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

gf2::BitMatrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(42);
  gf2::BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (rng() % 8 == 0) m.set(r, c);
    }
  }
  return m;
}

void BM_RankSerial(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gf2::rank_serial(m));
}
void BM_RankOmp(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gf2::rank_omp(m));
}
BENCHMARK(BM_RankSerial)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankOmp)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

GeneratorTable detector_table(std::int64_t l) {
  const ExponentTuple t({2 * l, 2, 2, 2});
  const BettiTable betti = BettiTable::bundled(default_data_dir());
  const auto m = period_module(enumerate_strata(t, t.period() - 1, betti));
  return generator_table(enumerate_strata(t, scan_max_L(t, m), betti), std::nullopt);
}

void BM_DetectorSerial(benchmark::State& state) {
  const auto table = detector_table(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detect_vanishing_differential_serial(table, std::nullopt));
}
void BM_DetectorOmp(benchmark::State& state) {
  const auto table = detector_table(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detect_vanishing_differential(table, std::nullopt));
}
BENCHMARK(BM_DetectorSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetectorOmp)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
