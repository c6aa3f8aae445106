#include "nforge/classifier.hpp"
#include "nforge/modp.hpp"
#include "nforge/nichols_engine.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace nforge;

namespace {

modp::Exec exec_of(const benchmark::State& s) { return s.range(0) ? modp::Exec::parallel : modp::Exec::serial; }

BraidedSpace k_braiding() {
    const SuzukiAlgebra a(SuzukiParams::make(1, 2, 1, 1));
    return braiding_of(build_family(a, Family::K, {0, 4, 0, 1, 1, 0}));
}

void BM_rank_dense(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(1));
    const std::uint64_t p = 2147483629;
    std::mt19937_64 rng(7);
    std::vector<std::uint64_t> a(n * n);
    for (auto& x : a) x = rng() % p;
    for (auto _ : state) benchmark::DoNotOptimize(modp::rank_dense(a, n, n, p, exec_of(state)));
}
BENCHMARK(BM_rank_dense)->ArgsProduct({{0, 1}, {128, 512}})->Unit(benchmark::kMillisecond);

void BM_degree_dims_modular(benchmark::State& state) {
    const auto b = k_braiding();
    DimsOptions o;
    o.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(degree_dims(b, static_cast<std::size_t>(state.range(1)), Engine::modular, o));
}
BENCHMARK(BM_degree_dims_modular)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

void BM_braid_equation(benchmark::State& state) {
    const auto b = k_braiding();
    for (auto _ : state) benchmark::DoNotOptimize(check_braid_equation(b, exec_of(state)));
}
BENCHMARK(BM_braid_equation)->ArgsProduct({{0, 1}, {0}});

void BM_ufo8_sweep(benchmark::State& state) {
    const auto spec = ufo8_preset(Family::D);
    for (auto _ : state) benchmark::DoNotOptimize(sweep(spec, exec_of(state)));
}
BENCHMARK(BM_ufo8_sweep)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
