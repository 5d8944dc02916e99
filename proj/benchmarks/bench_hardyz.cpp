#include <benchmark/benchmark.h>

#include "hardyz/hardyz.hpp"

namespace {

void BM_ZRiemannSiegel(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hz::z_rs(t));
}
BENCHMARK(BM_ZRiemannSiegel)->Arg(100)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_ZOracle(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hz::z_oracle(t));
}
BENCHMARK(BM_ZOracle)->Arg(100)->Arg(1000)->Arg(2000);

void BM_ZJet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hz::z_jet(500.0));
}
BENCHMARK(BM_ZJet);

void BM_DavenportHeilbronn(benchmark::State& state) {
  const hz::cdouble s(0.8, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hz::dh_f(s));
}
BENCHMARK(BM_DavenportHeilbronn)->Arg(100)->Arg(500);

void BM_ThetaExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hz::theta_exact(12345.678));
}
BENCHMARK(BM_ThetaExact);

void BM_ScanZeros(benchmark::State& state) {
  const double lo = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hz::scan_zeros(lo, lo + 50.0));
}
BENCHMARK(BM_ScanZeros)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SpiraSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hz::dh_zero_search(0.6, 0.95, 80.0, 90.0));
}
BENCHMARK(BM_SpiraSearch)->Unit(benchmark::kMillisecond);

void BM_TestFunctionEval(benchmark::State& state) {
  const auto f = hz::default_test_function();
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize((*f)(x));
    x += 1e-3;
  }
}
BENCHMARK(BM_TestFunctionEval);

void BM_ConvolutionPoint(benchmark::State& state) {
  const auto spec = hz::make_kernel_spec(hz::default_test_function(), 1.0, 1000.0);
  for (auto _ : state) benchmark::DoNotOptimize(hz::m_conv(1000.0, spec));
}
BENCHMARK(BM_ConvolutionPoint)->Unit(benchmark::kMillisecond);

void BM_ConvolutionLattice(benchmark::State& state) {
  const auto spec = hz::make_kernel_spec(hz::default_test_function(), 1.0, 1000.0);
  for (auto _ : state) benchmark::DoNotOptimize(hz::convolution_lattice(spec, 990.0, 0.1, 200, 0));
}
BENCHMARK(BM_ConvolutionLattice)->Unit(benchmark::kMillisecond);

void BM_MobiusSieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hz::mobius_sieve(state.range(0)));
}
BENCHMARK(BM_MobiusSieve)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Li(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hz::li(1e6));
}
BENCHMARK(BM_Li);

}  // namespace

BENCHMARK_MAIN();
