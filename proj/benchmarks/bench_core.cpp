#include <benchmark/benchmark.h>

#include <limits>

#include "quadphase/asymptotics.hpp"
#include "quadphase/quadrature.hpp"
#include "quadphase/special_functions.hpp"

namespace {

using namespace quadphase;
constexpr double kInf = std::numeric_limits<double>::infinity();

void BM_ClosedIInfinite(benchmark::State& state) {
  const double s = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_I_infinite(1.0, s));
}
BENCHMARK(BM_ClosedIInfinite)->Arg(64)->Arg(1024)->Arg(16384);

void BM_IntegrateIInfinite(benchmark::State& state) {
  const double s = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_I({Family::I_INFINITE, 1.0, kInf, s}, 1e-10));
}
BENCHMARK(BM_IntegrateIInfinite)->Arg(32)->Arg(256)->Arg(2048);

void BM_IntegrateJ1(benchmark::State& state) {
  const double s = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_J1({Family::J1_REDUCED, 1.0, 1.0, s}, 1e-10));
}
BENCHMARK(BM_IntegrateJ1)->Arg(32)->Arg(1024)->Arg(16384);

void BM_KummerSeries(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kummer_series({0.5, 1.5, x}, 1e-14));
}
BENCHMARK(BM_KummerSeries)->Arg(1)->Arg(10)->Arg(35);

void BM_KummerAsymptoticLog(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kummer_asymptotic_log({0.5, 1.5, x}));
}
BENCHMARK(BM_KummerAsymptoticLog)->Arg(50)->Arg(500)->Arg(5000);

void BM_LogComplexMul(benchmark::State& state) {
  const LogComplex a{123.0, 1.0};
  LogComplex acc{0.0, 0.0};
  for (auto _ : state) {
    acc = lc_mul(acc, a);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_LogComplexMul);

}  // namespace

BENCHMARK_MAIN();
