#include "medianshape/cozy.hpp"
#include "medianshape/median.hpp"
#include "medianshape/tu.hpp"

#include <benchmark/benchmark.h>

using namespace medianshape;

namespace {

std::pair<Chain, Chain> corner_arcs(const SimplicialComplex& K) {
  return {snap_polyline(K, {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}}),
          snap_polyline(K, {{0.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}})};
}

void BM_boundary_matrix(benchmark::State& state) {
  auto K = build_grid_2d((int)state.range(0), (int)state.range(0), 1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_matrix(K, 1));
}
BENCHMARK(BM_boundary_matrix)->Arg(8)->Arg(16)->Arg(32);

void BM_flat_norm(benchmark::State& state) {
  auto K = build_grid_2d((int)state.range(0), (int)state.range(0), 1.0, 1.0);
  auto [t1, t2] = corner_arcs(K);
  Chain diff = t1 - t2;
  for (auto _ : state) benchmark::DoNotOptimize(flat_norm(K, diff, 1e-3));
}
BENCHMARK(BM_flat_norm)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_median_solve(benchmark::State& state) {
  auto K = build_grid_2d((int)state.range(0), (int)state.range(0), 1.0, 1.0);
  auto [t1, t2] = corner_arcs(K);
  MedianProblem prob;
  prob.K = &K;
  prob.inputs = {t1, t2};
  prob.lambda = 1e-3;
  prob.mu = 1e-5;
  for (auto _ : state) benchmark::DoNotOptimize(solve_median(prob));
}
BENCHMARK(BM_median_solve)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_tu_exhaustive(benchmark::State& state) {
  auto S2 = i_sum(IntMatrix::make({{0, 1, -1, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}}), 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_totally_unimodular(S2));
}
BENCHMARK(BM_tu_exhaustive);

void BM_max_flow(benchmark::State& state) {
  auto g = random_cozy(4, (int)state.range(0), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(max_edge_disjoint_paths(g, 0, g.n_vertices - 1));
}
BENCHMARK(BM_max_flow)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
