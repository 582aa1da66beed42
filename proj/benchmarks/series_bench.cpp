#include <benchmark/benchmark.h>

#include <cmath>

#include "heatlab/bounds.hpp"
#include "heatlab/geometry.hpp"
#include "heatlab/kernel.hpp"

namespace {

using namespace heatlab;

// time expressed as a fraction of a^2, scanned across the dispatch point
void bm_images(benchmark::State& state) {
  const Interval dom{1.0};
  const double t = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(interval_kernel_images(dom, 0.3, -0.2, t));
}
BENCHMARK(bm_images)->DenseRange(0, 4)->ArgName("neg_log10_t");

void bm_eigen(benchmark::State& state) {
  const Interval dom{1.0};
  const double t = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(interval_kernel_eigen(dom, 0.3, -0.2, t));
}
BENCHMARK(bm_eigen)->DenseRange(0, 4)->ArgName("neg_log10_t");

void bm_dispatch(benchmark::State& state) {
  const Interval dom{1.0};
  const double t = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(interval_kernel(dom, 0.3, -0.2, t));
}
BENCHMARK(bm_dispatch)->DenseRange(0, 4)->ArgName("neg_log10_t");

void bm_kernel_mass(benchmark::State& state) {
  const Interval dom{1.0};
  const double t = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        interval_kernel_mass(dom, 0.1, -0.5, 0.5, t));
}
BENCHMARK(bm_kernel_mass)->DenseRange(0, 4)->ArgName("neg_log10_t");

void bm_box_kernel_3d(benchmark::State& state) {
  const Box dom{{1.0, 1.0, 1.0}};
  const std::vector<double> x = {0.3, -0.2, 0.1};
  const std::vector<double> y = {-0.1, 0.4, -0.3};
  const double t = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(box_kernel(dom, x, y, t));
}
BENCHMARK(bm_box_kernel_3d)->DenseRange(0, 4)->ArgName("neg_log10_t");

void bm_short_time_sweep_interval(benchmark::State& state) {
  const Domain dom = Interval{0.5};
  for (auto _ : state) {
    const SweepReport rep =
        sweep_verify(dom, BoundKind::ShortTimeND, GridSpec{}, SeriesBudget{});
    benchmark::DoNotOptimize(rep.min_slack);
  }
}
BENCHMARK(bm_short_time_sweep_interval);

}  // namespace

BENCHMARK_MAIN();
