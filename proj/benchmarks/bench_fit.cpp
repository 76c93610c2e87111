#include <benchmark/benchmark.h>

#include "implicitize/adaptive.hpp"
#include "implicitize/contour.hpp"

using namespace implicitize;

namespace {

void BM_AssembleC1(benchmark::State& state) {
    const auto c = curves::c1();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(assemble(c, n, 0.1));
}
BENCHMARK(BM_AssembleC1)->DenseRange(1, 7);

void BM_SmallestEigenpair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix a = assemble(curves::c2(), n, 0.1).a;
    for (auto _ : state) benchmark::DoNotOptimize(smallest_eigenpair(a));
}
BENCHMARK(BM_SmallestEigenpair)->DenseRange(1, 7);

void BM_WgmC1(benchmark::State& state) {
    const auto c = curves::c1();
    const auto cfg = FitConfig::polynomial_defaults();
    for (auto _ : state) benchmark::DoNotOptimize(wgm_polynomial(c, cfg));
}
BENCHMARK(BM_WgmC1);

void BM_WgmC2(benchmark::State& state) {
    const auto c = curves::c2();
    const auto cfg = FitConfig::polynomial_defaults();
    for (auto _ : state) benchmark::DoNotOptimize(wgm_polynomial(c, cfg));
}
BENCHMARK(BM_WgmC2);

void BM_WgmC3(benchmark::State& state) {
    const auto c = curves::cardioid();
    const auto cfg = FitConfig::discrete_defaults(10);
    for (auto _ : state) benchmark::DoNotOptimize(wgm_discrete(c, cfg));
}
BENCHMARK(BM_WgmC3);

void BM_WgmC4(benchmark::State& state) {
    const auto c = curves::spiral();
    const auto cfg = FitConfig::discrete_defaults(20);
    for (auto _ : state) benchmark::DoNotOptimize(wgm_discrete(c, cfg));
}
BENCHMARK(BM_WgmC4);

void BM_MarchingSquares(benchmark::State& state) {
    const auto fit = wgm_discrete(curves::cardioid(), FitConfig::discrete_defaults(10));
    const Box box{-1, -3.5, 4.5, 3.5};
    const int res = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(marching_squares(fit.curve, box, res));
}
BENCHMARK(BM_MarchingSquares)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
