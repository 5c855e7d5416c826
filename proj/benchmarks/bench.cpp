#include <benchmark/benchmark.h>

#include "geomatch/configurations.hpp"
#include "geomatch/constructions.hpp"
#include "geomatch/oracle.hpp"
#include "geomatch/verification.hpp"

namespace {

using namespace geomatch;

void BM_Orient(benchmark::State& state) {
  Point p{0, 0}, q{1000003, 7}, r{-999983, 13};
  for (auto _ : state) benchmark::DoNotOptimize(orient(p, q, r));
}
BENCHMARK(BM_Orient);

void BM_EdgesCrossConvex(benchmark::State& state) {
  PointSet ps = gen_convex(24);
  for (auto _ : state)
    benchmark::DoNotOptimize(edges_cross(Edge(0, 11), Edge(5, 17), ps));
}
BENCHMARK(BM_EdgesCrossConvex);

void BM_EdgesCrossExact(benchmark::State& state) {
  PointSet ps = gen_general(24, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(edges_cross(Edge(0, 11), Edge(5, 17), ps));
}
BENCHMARK(BM_EdgesCrossExact);

void BM_ConvexHull(benchmark::State& state) {
  PointSet ps = gen_general(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(ps));
}
BENCHMARK(BM_ConvexHull)->Arg(16)->Arg(32);

void BM_AlgorithmA(benchmark::State& state) {
  int two_n = static_cast<int>(state.range(0));
  PointSet ps = gen_general(two_n, 3);
  std::vector<int> block(two_n);
  for (int i = 0; i < two_n; ++i) block[i] = i;
  for (auto _ : state) benchmark::DoNotOptimize(algorithm_a(ps, block));
}
BENCHMARK(BM_AlgorithmA)->Arg(16)->Arg(24)->Arg(32);

void BM_GeneralFamily(benchmark::State& state) {
  PointSet ps = gen_general(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(general_family(ps));
}
BENCHMARK(BM_GeneralFamily)->Arg(16)->Arg(24);

void BM_EnumerateConvex(benchmark::State& state) {
  PointSet ps = gen_convex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ncpms(ps));
}
BENCHMARK(BM_EnumerateConvex)->Arg(10)->Arg(12)->Arg(14);

void BM_MaxPackingConvex(benchmark::State& state) {
  PointSet ps = gen_convex(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(max_packing(ps, PackingConstraint::none));
}
BENCHMARK(BM_MaxPackingConvex)->Arg(8)->Arg(10);

void BM_TriangleFreeCheck(benchmark::State& state) {
  PointSet ps = gen_convex(24);
  MatchingFamily family = convex_family(ps);
  GeomGraph g = union_graph(family, ps);
  for (auto _ : state) benchmark::DoNotOptimize(is_triangle_free(g));
}
BENCHMARK(BM_TriangleFreeCheck);

}  // namespace

BENCHMARK_MAIN();
