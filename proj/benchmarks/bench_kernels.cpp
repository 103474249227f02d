#include <benchmark/benchmark.h>

#include "turan/canonical.hpp"
#include "turan/copies.hpp"
#include "turan/covering.hpp"
#include "turan/density.hpp"
#include "turan/extremal.hpp"
#include "turan/random_sim.hpp"

using namespace turan;

static void BM_CanonicalPetersen(benchmark::State& state) {
  Graph g = Graph::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalPetersen);

static void BM_TriangleCountGnp(benchmark::State& state) {
  Graph g = sample_gnp(int(state.range(0)), 0.3, 7, 0).graph;
  Graph k3 = Graph::complete(3);
  for (auto _ : state) benchmark::DoNotOptimize(count_copies(k3, g));
}
BENCHMARK(BM_TriangleCountGnp)->Arg(30)->Arg(60);

static void BM_EnumerateC4InK8(benchmark::State& state) {
  Graph c4 = Graph::cycle(4);
  Graph k8 = Graph::complete(8);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_copies(c4, k8));
}
BENCHMARK(BM_EnumerateC4InK8);

static void BM_TwoDensityK5(benchmark::State& state) {
  Graph k5 = Graph::complete(5);
  for (auto _ : state) benchmark::DoNotOptimize(two_density(k5).value);
}
BENCHMARK(BM_TwoDensityK5);

static void BM_SpecialCoveringDensity(benchmark::State& state) {
  Graph k4 = Graph::complete(4), k5 = Graph::complete(5);
  Covering f = build_special_covering(k4, k5);
  for (auto _ : state) benchmark::DoNotOptimize(t_density(f).value);
}
BENCHMARK(BM_SpecialCoveringDensity);

static void BM_CoveringTypesK3K4(benchmark::State& state) {
  Graph k3 = Graph::complete(3), k4 = Graph::complete(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_covering_types(k3, k4).types.size());
}
BENCHMARK(BM_CoveringTypesK3K4);

static void BM_ExExact633(benchmark::State& state) {
  Graph k3 = Graph::complete(3), k4 = Graph::complete(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(ex_exact(6, k3, k4).value);
}
BENCHMARK(BM_ExExact633);

static void BM_SampleGnp60(benchmark::State& state) {
  int trial = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_gnp(60, 0.2, 99, trial++).graph.edge_count());
}
BENCHMARK(BM_SampleGnp60);

static void BM_DisjointCore(benchmark::State& state) {
  Graph g = sample_gnp(30, 0.2, 5, 1).graph;
  Graph k3 = Graph::complete(3);
  for (auto _ : state) benchmark::DoNotOptimize(extract_disjoint_core(g, k3));
}
BENCHMARK(BM_DisjointCore);

BENCHMARK_MAIN();
