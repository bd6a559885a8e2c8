#include <benchmark/benchmark.h>

#include "copoly/analysis.hpp"
#include "copoly/canon.hpp"
#include "copoly/family.hpp"
#include "copoly/oracles.hpp"
#include "copoly/tutte.hpp"

using namespace copoly;

namespace {

void BM_CoAdjointComplete(benchmark::State& state) {
    const SimpleGraph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        clear_family_memo();
        benchmark::DoNotOptimize(family_poly(g, FamilyKind::CoAdjoint));
    }
}
BENCHMARK(BM_CoAdjointComplete)->DenseRange(4, 10, 2);

void BM_CoAdjointBipartite(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SimpleGraph g = complete_bipartite(n, n);
    for (auto _ : state) {
        clear_family_memo();
        benchmark::DoNotOptimize(family_poly(g, FamilyKind::CoAdjoint));
    }
}
BENCHMARK(BM_CoAdjointBipartite)->DenseRange(2, 5);

void BM_PlainRecursion(benchmark::State& state) {
    const SimpleGraph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(family_poly(g, FamilyKind::CoAdjoint, {false, false}));
}
BENCHMARK(BM_PlainRecursion)->DenseRange(3, 6);

void BM_CanonicalKey(benchmark::State& state) {
    const SimpleGraph g = state.range(0) == 0 ? complete_bipartite(5, 5) : cycle_graph(10);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKey)->Arg(0)->Arg(1);

void BM_TutteDC(benchmark::State& state) {
    const SimpleGraph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        clear_tutte_memo();
        benchmark::DoNotOptimize(tutte_dc(g));
    }
}
BENCHMARK(BM_TutteDC)->DenseRange(4, 7);

void BM_SubsetCensus(benchmark::State& state) {
    const SimpleGraph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(subset_census(g));
}
BENCHMARK(BM_SubsetCensus)->DenseRange(4, 6);

void BM_Roots(benchmark::State& state) {
    const IntPoly p = family_poly(complete_graph(static_cast<int>(state.range(0))), FamilyKind::CoAdjoint);
    for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(BM_Roots)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
