#include <benchmark/benchmark.h>

#include "cubmon/artin_graph.hpp"
#include "cubmon/canonical.hpp"
#include "cubmon/milnor_lattice.hpp"
#include "cubmon/realizability.hpp"
#include "cubmon/symplectic_rep.hpp"

using namespace cubmon;

static void BM_BuildGraph(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ArtinGraph(k).edge_count());
}
BENCHMARK(BM_BuildGraph)->DenseRange(2, 7);

static void BM_Quotient(benchmark::State& state) {
  const auto l = gram_matrix(4);
  for (auto _ : state) benchmark::DoNotOptimize(quotient_lattice(l).rank);
}
BENCHMARK(BM_Quotient);

static void BM_AllRelations(benchmark::State& state) {
  const ArtinGraph g(4);
  const auto q = quotient_lattice(gram_matrix(4));
  const TransvectionRep rep(q, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all_relations(rep, g).ok());
}
BENCHMARK(BM_AllRelations)->Arg(1)->Arg(-1);

static void BM_QuadraticRefinement(benchmark::State& state) {
  const auto q = quotient_lattice(gram_matrix(4));
  for (auto _ : state) benchmark::DoNotOptimize(quadratic_refinement(q).rank());
}
BENCHMARK(BM_QuadraticRefinement);

static void BM_MinGenus(benchmark::State& state, const char* name) {
  const auto p = canonical::bundled_pattern(name);
  for (auto _ : state) benchmark::DoNotOptimize(min_genus(p, 5).genus);
}
BENCHMARK_CAPTURE(BM_MinGenus, chain7, "chain7")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinGenus, cycle8, "cycle8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinGenus, ten, "ten")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
