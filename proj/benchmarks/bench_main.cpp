#include <benchmark/benchmark.h>

#include "nacrig/fixtures.hpp"
#include "nacrig/laman.hpp"
#include "nacrig/motion.hpp"
#include "nacrig/nac.hpp"
#include "nacrig/structure.hpp"

using namespace nacrig;

static void BM_EnumerateNacPrism(benchmark::State& state) {
    const Graph g = fixtures::prism();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_nac(g));
}
BENCHMARK(BM_EnumerateNacPrism);

static void BM_EnumerateNacFig12(benchmark::State& state) {
    const Graph g = fixtures::fig12();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_nac(g));
}
BENCHMARK(BM_EnumerateNacFig12);

static void BM_HasNacFig8(benchmark::State& state) {
    const Graph g = fixtures::fig8_left();
    for (auto _ : state) benchmark::DoNotOptimize(has_nac(g));
}
BENCHMARK(BM_HasNacFig8);

static void BM_CanonicalForm(benchmark::State& state) {
    const Graph g = fixtures::fig12();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g, 12));
}
BENCHMARK(BM_CanonicalForm);

static void BM_IsLamanPebble(benchmark::State& state) {
    const Graph g = fixtures::fig12();
    for (auto _ : state) benchmark::DoNotOptimize(is_laman(g));
}
BENCHMARK(BM_IsLamanPebble);

static void BM_EnumerateLaman(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_laman_graphs(n));
    state.SetComplexityN(n);
}
BENCHMARK(BM_EnumerateLaman)->Arg(6)->Arg(7);

static void BM_GridMotionFrames(benchmark::State& state) {
    const Graph g = fixtures::prism();
    const NacColoring nac = enumerate_nac(g).front();
    const GridAssignment ga = component_grid(g, nac);
    const std::vector<double> alphas = uniform_alphas(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(grid_motion(ga, alphas));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GridMotionFrames)->Range(36, 36 << 4)->Complexity();

BENCHMARK_MAIN();
