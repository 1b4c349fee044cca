#include "pso/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace pso {

namespace {

std::mt19937_64 engine(std::uint64_t seed) { return std::mt19937_64{seed}; }

int pick(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>{lo, hi}(rng);
}

bool flip(std::mt19937_64& rng, double p) {
    return std::uniform_real_distribution<double>{0.0, 1.0}(rng) < p;
}

/// Random tree on 0..n-1: vertex v hangs off a uniform earlier vertex.
std::vector<std::pair<int, int>> random_tree_edges(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (int v = 1; v < n; ++v) edges.emplace_back(pick(rng, 0, v - 1), v);
    return edges;
}

} // namespace

Graph random_split_graph(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generator: need at least one vertex");
    auto rng = engine(seed);
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    const int c = pick(rng, 1, n);
    const std::vector<int> clique(ids.begin(), ids.begin() + c);
    const std::vector<int> indep(ids.begin() + c, ids.end());

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) edges.emplace_back(clique[i], clique[j]);
    const double p = std::uniform_real_distribution<double>{0.2, 0.8}(rng);
    for (const int u : indep) {
        bool attached = false;
        for (const int w : clique)
            if (flip(rng, p)) {
                edges.emplace_back(u, w);
                attached = true;
            }
        if (!attached) edges.emplace_back(u, clique[pick(rng, 0, c - 1)]);
    }
    return Graph::from_edges(n, edges);
}

Graph random_chordal_bipartite_graph(int n, std::uint64_t seed, int size_cap) {
    if (n < 1) throw std::invalid_argument("generator: need at least one vertex");
    if (n > size_cap)
        throw std::invalid_argument(
            "generator: vertex count exceeds the class-check cap");
    auto rng = engine(seed);
    for (int attempt = 0;; ++attempt) {
        auto edges = random_tree_edges(n, rng);
        std::vector<int> side(static_cast<std::size_t>(n), 0);
        std::set<std::pair<int, int>> present(edges.begin(), edges.end());
        for (const auto& [p, v] : edges) side[v] = 1 - side[p];
        // Extra cross edges get rarer with each rejected attempt, so the
        // loop degenerates to a plain tree and must terminate.
        const double p = 0.4 * std::pow(0.8, attempt);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (side[u] != side[v] && !present.contains({u, v}) && flip(rng, p))
                    edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        if (check_chordal_bipartite(g, size_cap) == ClassCheck::Yes) return g;
    }
}

Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generator: need at least one vertex");
    auto rng = engine(seed);
    auto edges = random_tree_edges(n, rng);
    const std::set<std::pair<int, int>> present(edges.begin(), edges.end());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present.contains({u, v}) && flip(rng, edge_prob))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

std::vector<std::pair<VertexId, VertexId>> random_order_pairs(
    int n, int count, std::uint64_t seed) {
    auto rng = engine(seed);
    std::vector<VertexId> hidden(static_cast<std::size_t>(n));
    std::iota(hidden.begin(), hidden.end(), 0);
    std::shuffle(hidden.begin(), hidden.end(), rng);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (n < 2) return pairs;
    pairs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const int i = pick(rng, 0, n - 2);
        const int j = pick(rng, i + 1, n - 1);
        pairs.emplace_back(hidden[i], hidden[j]);
    }
    return pairs;
}

std::vector<std::pair<VertexId, VertexId>> pairs_from_ordering(
    const Ordering& sigma, int count, std::uint64_t seed) {
    auto rng = engine(seed);
    const int n = sigma.size();
    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (n < 2) return pairs;
    pairs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const int i = pick(rng, 0, n - 2);
        const int j = pick(rng, i + 1, n - 1);
        pairs.emplace_back(sigma.at(i), sigma.at(j));
    }
    return pairs;
}

RootedTree random_spanning_tree(const Graph& g, VertexId root, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n)
        throw std::invalid_argument("generator: root out of range");
    auto rng = engine(seed);
    RootedTree t;
    t.root = root;
    t.parent.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    visited[root] = 1;
    int reached = 1;
    while (reached < n) {
        std::vector<std::pair<VertexId, VertexId>> crossing;
        for (VertexId u = 0; u < n; ++u) {
            if (!visited[u]) continue;
            for (const VertexId w : g.neighbors(u))
                if (!visited[w]) crossing.emplace_back(u, w);
        }
        if (crossing.empty())
            throw DisconnectedGraphError("generator: graph is not connected");
        const auto [u, w] = crossing[pick(rng, 0, static_cast<int>(crossing.size()) - 1)];
        visited[w] = 1;
        t.parent[w] = u;
        ++reached;
    }
    return t;
}

} // namespace pso
