#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "pso/generate.hpp"
#include "pso/graph.hpp"
#include "pso/label_search.hpp"
#include "pso/oba.hpp"
#include "pso/ordering.hpp"
#include "pso/partial_order.hpp"
#include "pso/psop_generic.hpp"
#include "pso/psop_split.hpp"

using namespace pso;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

PartialOrder adjacent_pair_order(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int i = static_cast<int>(rng() % (n - 1));
        pairs.emplace_back(i, i + 1);
    }
    return make_partial_order(n, pairs);
}

/// Rooted generic-search solve across growing path + order sizes; the
/// expected complexity is linear in vertices + edges + constraint pairs.
void bm_gs_path(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = path_graph(n);
    const PartialOrder pi = adjacent_pair_order(n, 7);
    for (auto _ : state) {
        auto res = solve_psop_gs_rooted(g, 0, pi);
        benchmark::DoNotOptimize(res);
    }
    state.SetComplexityN(n);
}

void bm_lbfs_plus(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_connected_graph(n, 0.05, 11);
    std::vector<VertexId> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i;
    const Ordering rho(seq, n);
    for (auto _ : state) {
        auto sigma = run_plus_search(g, SearchKind::Lbfs, rho);
        benchmark::DoNotOptimize(sigma);
    }
    state.SetComplexityN(n);
}

ObaInstance chain_oba(int m) {
    std::vector<int> ground(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) ground[static_cast<std::size_t>(i)] = i;
    auto inst = ObaInstance::over(ground);
    for (int i = 0; i + 1 < m; ++i)
        inst.add_tuple(inst.add_set({i}), inst.add_set({i + 1}));
    return inst;
}

void bm_oba_chain(benchmark::State& state) {
    const ObaInstance inst = chain_oba(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto res = solve_oba(inst);
        benchmark::DoNotOptimize(res);
    }
    state.SetComplexityN(state.range(0));
}

void bm_split_mcs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_split_graph(n, 13);
    std::mt19937_64 rng(17);
    std::vector<VertexId> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i;
    std::shuffle(seq.begin(), seq.end(), rng);
    const Ordering sigma = run_plus_search(g, SearchKind::Mcs, Ordering(seq, n));
    const PartialOrder pi =
        make_partial_order(n, pairs_from_ordering(sigma, n / 2, 19));
    for (auto _ : state) {
        auto res = solve_psop_mcs_split(g, pi);
        benchmark::DoNotOptimize(res);
    }
    state.SetComplexityN(n);
}

} // namespace

BENCHMARK(bm_gs_path)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity();
BENCHMARK(bm_lbfs_plus)->RangeMultiplier(2)->Range(1 << 8, 1 << 10)->Complexity();
BENCHMARK(bm_oba_chain)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity();
BENCHMARK(bm_split_mcs)->RangeMultiplier(4)->Range(1 << 6, 1 << 10)->Complexity();

BENCHMARK_MAIN();
