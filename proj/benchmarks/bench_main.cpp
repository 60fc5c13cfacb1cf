#include <benchmark/benchmark.h>

#include "tsde/enumerate.hpp"
#include "tsde/graph_io.hpp"
#include "tsde/sde.hpp"
#include "tsde/solver.hpp"

using namespace tsde;

static void BM_CanonicalForm_k4(benchmark::State& state) {
  const ColouredGraph g =
      parse_connected_graph("g{D=3,k=4}[2,3,4,1|1,3,2,4|4,2,1,3]");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm_k4);

static void BM_EnumerateConnected_rank4_k3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected(4, 3));
}
BENCHMARK(BM_EnumerateConnected_rank4_k3);

static void BM_SdeEquation_K33(benchmark::State& state) {
  const ModelSpec model = ModelSpec::melonic_quartic(3);
  const ColouredGraph k33 = parse_connected_graph("g{D=3,k=3}[1,2,3|3,1,2|2,3,1]");
  for (auto _ : state) benchmark::DoNotOptimize(sde_equation(model, k33, 0));
}
BENCHMARK(BM_SdeEquation_K33);

static void BM_Solver2pt_N3(benchmark::State& state) {
  ModelParams p;
  p.lambda = 0.01;
  p.cutoff = 3;
  p.tol = 1e-10;
  for (auto _ : state) benchmark::DoNotOptimize(solve_melonic_2pt(p));
}
BENCHMARK(BM_Solver2pt_N3);

BENCHMARK_MAIN();
