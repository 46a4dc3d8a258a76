#include <benchmark/benchmark.h>

#include "coneham/hammerstein.hpp"
#include "coneham/parallel.hpp"

using namespace coneham;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void BM_ApplyT(benchmark::State& state) {
  const auto p = dirichlet_example_problem(build_quadrature(Rule::trapezoid, static_cast<int>(state.range(0))));
  const auto u = GridFunction::sample(p.grid(), [](double t) { return t * (1 - t); });
  for (auto _ : state) benchmark::DoNotOptimize(p.apply_T(u, exec_of(state)));
}

void BM_MidpointGap(benchmark::State& state) {
  const auto grid = build_quadrature(Rule::trapezoid, static_cast<int>(state.range(0)));
  const auto u = GridFunction::sample(grid, [](double t) { return t * (1 - t); });
  for (auto _ : state) benchmark::DoNotOptimize(midpoint_gap(*grid, u.values(), exec_of(state)));
}

void BM_Psi(benchmark::State& state) {
  const auto grid = build_quadrature(Rule::trapezoid, static_cast<int>(state.range(0)));
  const auto alpha = concave_dirichlet();
  const auto k = green_dirichlet();
  for (auto _ : state) benchmark::DoNotOptimize(psi(alpha, k, grid, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_ApplyT)->ArgsProduct({{201, 1001, 4001}, {0, 1}});
BENCHMARK(BM_MidpointGap)->ArgsProduct({{201, 1001}, {0, 1}});
BENCHMARK(BM_Psi)->ArgsProduct({{101, 201}, {0, 1}});

BENCHMARK_MAIN();
