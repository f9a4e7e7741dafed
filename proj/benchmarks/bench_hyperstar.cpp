#include <benchmark/benchmark.h>

#include "hyperstar/aut_search.hpp"
#include "hyperstar/graph.hpp"
#include "hyperstar/perm.hpp"
#include "hyperstar/perm_group.hpp"
#include "hyperstar/subsets.hpp"

using namespace hyperstar;

static void BM_RankUnrankRoundTrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = n / 2;
    const std::uint64_t count = binomial(n, k);
    for (auto _ : state) {
        for (std::uint64_t r = 0; r < count; ++r)
            benchmark::DoNotOptimize(subset_rank(subset_unrank(r, n, k)));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(count));
}
BENCHMARK(BM_RankUnrankRoundTrip)->Arg(8)->Arg(12)->Arg(16);

static void BM_BuildGraph(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(HyperStarGraph::build(2 * k, k, false));
}
BENCHMARK(BM_BuildGraph)->Arg(3)->Arg(4)->Arg(5);

static void BM_GirthAndDiameter(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto g = HyperStarGraph::build(2 * k, k, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(g.girth());
        benchmark::DoNotOptimize(g.diameter());
    }
}
BENCHMARK(BM_GirthAndDiameter)->Arg(3)->Arg(4)->Arg(5);

static void BM_EdgeConnectivity(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto g = HyperStarGraph::build(2 * k, k, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(g.edge_connectivity());
}
BENCHMARK(BM_EdgeConnectivity)->Arg(3)->Arg(4);

static void BM_StructuredGroupOrder(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(structured_group(k).order());
}
BENCHMARK(BM_StructuredGroupOrder)->Arg(3)->Arg(4);

static void BM_AutomorphismSearch(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto g = HyperStarGraph::build(2 * k, k, false);
    for (auto _ : state)
        benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutomorphismSearch)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
