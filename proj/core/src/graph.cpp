#include "pso/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>

namespace pso {

Graph Graph::from_edge_list(
    const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> ids;
    auto intern = [&](const std::string& s) {
        auto [it, fresh] = ids.try_emplace(s, static_cast<VertexId>(names.size()));
        if (fresh) names.push_back(s);
        return it->second;
    };
    std::vector<std::pair<VertexId, VertexId>> id_edges;
    id_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        const VertexId u = intern(a);  // sequence the calls: ids follow first appearance
        const VertexId v = intern(b);
        id_edges.emplace_back(u, v);
    }
    const int n = static_cast<int>(names.size());
    return from_edges(n, id_edges, std::move(names));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> names) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (names.empty() && n > 0) {
        names.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    }
    if (static_cast<int>(names.size()) != n)
        throw std::invalid_argument("graph: name table size does not match vertex count");

    Graph g;
    g.names_ = std::move(names);
    for (VertexId v = 0; v < n; ++v) g.id_of_.emplace(g.names_[v], v);
    if (static_cast<int>(g.id_of_.size()) != n)
        throw std::invalid_argument("graph: duplicate vertex name");
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) {
            g.self_loop_seen_ = true;
            continue;
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& row : g.adjacency_) {
        std::sort(row.begin(), row.end());
        const auto last = std::unique(row.begin(), row.end());
        if (last != row.end()) {
            g.duplicate_edge_seen_ = true;
            row.erase(last, row.end());
        }
        g.edge_count_ += static_cast<int>(row.size());
    }
    g.edge_count_ /= 2;
    return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& row = adjacency_[degree(u) <= degree(v) ? u : v];
    const VertexId other = degree(u) <= degree(v) ? v : u;
    return std::binary_search(row.begin(), row.end(), other);
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
    const auto it = id_of_.find(name);
    if (it == id_of_.end()) return std::nullopt;
    return it->second;
}

DynamicBitset Graph::neighborhood_mask(VertexId v) const {
    DynamicBitset mask(static_cast<std::size_t>(vertex_count()));
    for (const VertexId w : adjacency_[v]) mask.set(static_cast<std::size_t>(w));
    return mask;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (const VertexId v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string GraphValidation::summary() const {
    if (ok()) return "ok";
    std::string s;
    auto add = [&](const char* part) {
        if (!s.empty()) s += ", ";
        s += part;
    };
    if (!loop_free) add("has self-loops");
    if (!simple) add("has duplicate edges");
    if (!connected) add("is not connected");
    return s;
}

GraphValidation validate_graph(const Graph& g) {
    GraphValidation v;
    v.loop_free = !g.self_loop_seen();
    v.simple = !g.duplicate_edge_seen();
    const int n = g.vertex_count();
    if (n > 1) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            for (const VertexId w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        v.connected = reached == n;
    }
    return v;
}

BfsLayering bfs_layering(const Graph& g, VertexId r) {
    const int n = g.vertex_count();
    BfsLayering lay;
    lay.root = r;
    lay.layer_of.assign(static_cast<std::size_t>(n), -1);
    lay.layer_of[r] = 0;
    std::queue<VertexId> q;
    q.push(r);
    int reached = 1;
    while (!q.empty()) {
        const VertexId u = q.front();
        q.pop();
        for (const VertexId w : g.neighbors(u))
            if (lay.layer_of[w] < 0) {
                lay.layer_of[w] = lay.layer_of[u] + 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n)
        throw DisconnectedGraphError("layering: graph is not connected from the root");
    const int depth = *std::max_element(lay.layer_of.begin(), lay.layer_of.end());
    lay.layers.assign(static_cast<std::size_t>(depth) + 1, {});
    for (VertexId v = 0; v < n; ++v) lay.layers[lay.layer_of[v]].push_back(v);
    return lay;
}

bool SplitPartition::in_clique(VertexId v) const {
    return std::binary_search(clique.begin(), clique.end(), v);
}

DynamicBitset SplitPartition::clique_mask(int n) const {
    DynamicBitset mask(static_cast<std::size_t>(n));
    for (const VertexId v : clique) mask.set(static_cast<std::size_t>(v));
    return mask;
}

bool verify_split_partition(const Graph& g, const SplitPartition& sp) {
    const int n = g.vertex_count();
    if (static_cast<int>(sp.clique.size() + sp.independent.size()) != n) return false;
    std::vector<char> side(static_cast<std::size_t>(n), -1);
    for (const VertexId v : sp.clique) {
        if (v < 0 || v >= n || side[v] != -1) return false;
        side[v] = 1;
    }
    for (const VertexId v : sp.independent) {
        if (v < 0 || v >= n || side[v] != -1) return false;
        side[v] = 0;
    }
    for (const VertexId u : sp.clique)
        for (const VertexId v : sp.clique)
            if (u < v && !g.adjacent(u, v)) return false;
    for (const VertexId u : sp.independent)
        for (const VertexId w : g.neighbors(u))
            if (side[w] == 0) return false;
    return true;
}

std::optional<SplitPartition> find_split_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    // Degree-sequence criterion: with d_1 >= ... >= d_n and m the largest k
    // with d_k >= k - 1, the graph is split iff the top-m degrees sum to
    // m(m-1) plus the remaining degrees.
    int m = 0;
    for (int k = 1; k <= n; ++k)
        if (g.degree(order[k - 1]) >= k - 1) m = k;
    std::int64_t top = 0, rest = 0;
    for (int i = 0; i < n; ++i)
        (i < m ? top : rest) += g.degree(order[i]);
    if (top != static_cast<std::int64_t>(m) * (m - 1) + rest) return std::nullopt;

    SplitPartition sp;
    sp.clique.assign(order.begin(), order.begin() + m);
    sp.independent.assign(order.begin() + m, order.end());
    std::sort(sp.clique.begin(), sp.clique.end());
    std::sort(sp.independent.begin(), sp.independent.end());

    if (!verify_split_partition(g, sp)) {
        // Ties at degree m-1 can put the wrong vertex on the clique side; a
        // single swap across the boundary always repairs it for split graphs.
        bool repaired = false;
        for (std::size_t ci = 0; ci < sp.clique.size() && !repaired; ++ci) {
            if (g.degree(sp.clique[ci]) != m - 1) continue;
            for (std::size_t ii = 0; ii < sp.independent.size() && !repaired; ++ii) {
                if (g.degree(sp.independent[ii]) != m - 1) continue;
                SplitPartition trial = sp;
                std::swap(trial.clique[ci], trial.independent[ii]);
                std::sort(trial.clique.begin(), trial.clique.end());
                std::sort(trial.independent.begin(), trial.independent.end());
                if (verify_split_partition(g, trial)) {
                    sp = std::move(trial);
                    repaired = true;
                }
            }
        }
        if (!repaired) return std::nullopt;
    }

    // A clique vertex of degree |C|-1 has no independent neighbors, so it sits
    // on either side; prefer the independent side. At most one can move (two
    // such clique vertices are adjacent). Move the largest id so the clique
    // keeps the canonically smallest vertices.
    for (auto it = sp.clique.rbegin(); it != sp.clique.rend(); ++it) {
        if (g.degree(*it) != m - 1) continue;
        const VertexId v = *it;
        SplitPartition moved = sp;
        moved.clique.erase(std::find(moved.clique.begin(), moved.clique.end(), v));
        moved.independent.insert(
            std::lower_bound(moved.independent.begin(), moved.independent.end(), v), v);
        if (verify_split_partition(g, moved)) {
            sp = std::move(moved);
            sp.boundary_moved = v;
        }
        break;
    }
    return sp;
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> color(static_cast<std::size_t>(n), -1);
    for (VertexId s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            for (const VertexId w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = static_cast<char>(1 - color[u]);
                    stack.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

ClassCheck check_chordal_bipartite(const Graph& g, int size_cap) {
    const int n = g.vertex_count();
    if (n > size_cap || n > 30) return ClassCheck::TooLarge;
    if (!is_bipartite(g)) return ClassCheck::No;

    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v)
        for (const VertexId w : g.neighbors(v)) nbr[v] |= std::uint32_t{1} << w;

    // A subset inducing a connected 2-regular subgraph is an induced cycle;
    // any such subset of size >= 6 disqualifies the graph.
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t s = 0; s <= all; ++s) {
        if (s == 0) continue;
        if (std::popcount(s) < 6) continue;
        bool two_regular = true;
        for (std::uint32_t rest = s; rest && two_regular; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (std::popcount(nbr[v] & s) != 2) two_regular = false;
        }
        if (!two_regular) continue;
        std::uint32_t seen = std::uint32_t{1} << std::countr_zero(s);
        for (;;) {
            std::uint32_t grow = seen;
            for (std::uint32_t rest = seen; rest; rest &= rest - 1)
                grow |= nbr[std::countr_zero(rest)] & s;
            if (grow == seen) break;
            seen = grow;
        }
        if (seen == s) return ClassCheck::No;
    }
    return ClassCheck::Yes;
}

} // namespace pso
