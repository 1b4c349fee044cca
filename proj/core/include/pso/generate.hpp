#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pso/graph.hpp"
#include "pso/ordering.hpp"
#include "pso/reductions.hpp"

namespace pso {

/// Deterministic instance generators for differential tests and the
/// command-line generator. Every function is a pure function of its
/// arguments; the same seed always yields the same instance.

/// Connected split graph on n vertices: random clique size, full clique,
/// random clique-independent edges, isolated vertices attached afterwards.
Graph random_split_graph(int n, std::uint64_t seed);

/// Connected chordal bipartite graph on n vertices by rejection: random
/// connected bipartite graphs until the exhaustive class check passes.
/// n must be <= size_cap so the check is decisive.
Graph random_chordal_bipartite_graph(int n, std::uint64_t seed,
                                     int size_cap = 16);

/// Connected graph on n vertices: random spanning tree plus each remaining
/// edge independently with edge_prob.
Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed);

/// Acyclic order generators: count random pairs drawn against a hidden
/// random permutation, so their closure is always a strict partial order.
std::vector<std::pair<VertexId, VertexId>> random_order_pairs(
    int n, int count, std::uint64_t seed);

/// count random pairs (u, v) with u before v in sigma; any search that can
/// produce sigma can extend their closure (feasibility-forced instances).
std::vector<std::pair<VertexId, VertexId>> pairs_from_ordering(
    const Ordering& sigma, int count, std::uint64_t seed);

/// Uniformly random-ish spanning tree (random-walk based), rooted at root.
RootedTree random_spanning_tree(const Graph& g, VertexId root,
                                std::uint64_t seed);

} // namespace pso
