#include <cmath>

#include <benchmark/benchmark.h>

#include <tnl/action.hpp>
#include <tnl/closed_form.hpp>
#include <tnl/collocation.hpp>

namespace {

const tnl::OscillatorParams kParams{1.0, 1.0, 2.0, 1.0};

void BM_DenseCollocation(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tnl::solve_integro_ivp(kParams, 0.0, 1.0, 10.0, n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseCollocation)->RangeMultiplier(2)->Range(128, 1024)->Complexity();

void BM_BandedCollocation(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tnl::solve_integro_ivp_banded(kParams, 0.0, 1.0, 10.0, n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BandedCollocation)->RangeMultiplier(4)->Range(1024, 65536)->Complexity();

void BM_ClosedFormSample(benchmark::State& state) {
    const auto sol = tnl::solve_closed_form(kParams, 0.0, 1.0, 10.0);
    const auto grid = tnl::make_uniform_grid(10.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tnl::sample_solution(sol, grid));
}
BENCHMARK(BM_ClosedFormSample)->Arg(4001)->Arg(20001);

void BM_Action(benchmark::State& state) {
    const auto grid = tnl::make_uniform_grid(2.0, static_cast<std::size_t>(state.range(0)));
    const auto path = tnl::Path::sample(grid, [](double s) { return std::sin(1.3 * s); });
    for (auto _ : state) benchmark::DoNotOptimize(tnl::action(kParams, path, tnl::QuadratureRule::Trapezoid));
}
BENCHMARK(BM_Action)->Arg(401)->Arg(1601);

}  // namespace

BENCHMARK_MAIN();
