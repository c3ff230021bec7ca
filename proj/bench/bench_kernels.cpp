// Serial reference vs OpenMP kernels. Both paths reduce in fixed block order, so they return
// identical values; only the wall time differs.

#include <benchmark/benchmark.h>

#include "fz/cantor.hpp"
#include "fz/rfd.hpp"

namespace {

void BM_cantor_oracle(benchmark::State& st) {
  auto [C, inv] = fz::gcs_create(2, 1.0 / 3.0);
  const auto ex = st.range(0) ? fz::Exec::parallel : fz::Exec::serial;
  for (auto _ : st) benchmark::DoNotOptimize(fz::tube_volume_oracle(C, 1e-8, ex));
}
BENCHMARK(BM_cantor_oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_gasket_mc_tube(benchmark::State& st) {
  const fz::Rfd g = fz::build_rfd("gasket");
  fz::NumericConfig cfg;
  cfg.method = fz::NumericConfig::Method::montecarlo;
  cfg.samples = 200000;
  cfg.exec = st.range(0) ? fz::Exec::parallel : fz::Exec::serial;
  const auto grid = fz::log_grid(1e-3, 1e-1, 16);
  for (auto _ : st) benchmark::DoNotOptimize(fz::tube_function_numeric(g, grid, cfg));
}
BENCHMARK(BM_gasket_mc_tube)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_cantor_closed(benchmark::State& st) {
  auto [C, inv] = fz::gcs_create(2, 1.0 / 3.0);
  double t = 1e-8;
  for (auto _ : st) {
    benchmark::DoNotOptimize(fz::tube_volume_closed(C, t));
    t = t < 0.1 ? t * 1.01 : 1e-8;
  }
}
BENCHMARK(BM_cantor_closed);

}  // namespace

BENCHMARK_MAIN();
