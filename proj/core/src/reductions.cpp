#include "pso/reductions.hpp"

#include <algorithm>
#include <queue>

namespace pso {

bool is_spanning_tree_of(const Graph& g, const RootedTree& t) {
    const int n = g.vertex_count();
    if (static_cast<int>(t.parent.size()) != n) return false;
    if (t.root < 0 || t.root >= n || t.parent[t.root] != -1) return false;
    std::vector<std::vector<VertexId>> children(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
        if (v == t.root) continue;
        const VertexId p = t.parent[v];
        if (p < 0 || p >= n || !g.adjacent(p, v)) return false;
        children[p].push_back(v);
    }
    // n-1 parent edges and full reachability from the root make it a tree.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> stack{t.root};
    seen[t.root] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        for (const VertexId c : children[u])
            if (!seen[c]) {
                seen[c] = 1;
                ++reached;
                stack.push_back(c);
            }
    }
    return reached == n;
}

RootedTree reroot_tree(const RootedTree& t, VertexId new_root) {
    const int n = static_cast<int>(t.parent.size());
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v)
        if (v != t.root) {
            adj[v].push_back(t.parent[v]);
            adj[t.parent[v]].push_back(v);
        }
    RootedTree out;
    out.root = new_root;
    out.parent.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> stack{new_root};
    seen[new_root] = 1;
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        for (const VertexId w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                out.parent[w] = u;
                stack.push_back(w);
            }
    }
    return out;
}

PartialOrder end_vertex_order(const Graph& g, VertexId t) {
    const int n = g.vertex_count();
    if (t < 0 || t >= n)
        throw std::invalid_argument("end-vertex order: vertex out of range");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) - 1);
    for (VertexId u = 0; u < n; ++u)
        if (u != t) pairs.emplace_back(u, t);
    return make_partial_order(n, std::move(pairs));
}

std::variant<PartialOrder, CycleError> f_tree_to_psop(const Graph& g,
                                                      const RootedTree& t) {
    if (!is_spanning_tree_of(g, t))
        throw std::invalid_argument("tree reduction: not a spanning tree of the graph");
    const int n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId y = 0; y < n; ++y) {
        if (y == t.root) continue;
        const VertexId x = t.parent[y];
        pairs.emplace_back(x, y);
        // x is y's first visited neighbor, so x beats every other neighbor.
        for (const VertexId w : g.neighbors(y))
            if (w != x) pairs.emplace_back(x, w);
    }
    return PartialOrder::build(n, std::move(pairs));
}

std::variant<PartialOrder, CycleError> l_tree_to_psop_bipartite(
    const Graph& g, const RootedTree& t) {
    if (!is_bipartite(g))
        throw std::invalid_argument("tree reduction: graph is not bipartite");
    if (!is_spanning_tree_of(g, t))
        throw std::invalid_argument("tree reduction: not a spanning tree of the graph");
    const int n = g.vertex_count();
    const BfsLayering lay = bfs_layering(g, t.root);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId y = 0; y < n; ++y) {
        if (y == t.root) continue;
        const VertexId p = t.parent[y];
        pairs.emplace_back(p, y);
        // p is y's last visited neighbor before y, so y's other neighbors in
        // p's layer must already be done when p is taken.
        for (const VertexId z : g.neighbors(y))
            if (z != p && lay.layer_of[z] == lay.layer_of[p]) pairs.emplace_back(z, p);
    }
    return PartialOrder::build(n, std::move(pairs));
}

namespace {

RootedTree extract_by_earlier_neighbor(const Graph& g, const Ordering& sigma,
                                       bool leftmost) {
    const int n = g.vertex_count();
    if (sigma.size() != n)
        throw std::invalid_argument("tree extraction: ordering must cover all vertices");
    RootedTree t;
    t.root = sigma.at(0);
    t.parent.assign(static_cast<std::size_t>(n), -1);
    for (int i = 1; i < n; ++i) {
        const VertexId v = sigma.at(i);
        int best = -1;
        for (const VertexId w : g.neighbors(v)) {
            const int p = sigma.position(w);
            if (p >= i) continue;
            if (best < 0 || (leftmost ? p < best : p > best)) best = p;
        }
        if (best < 0)
            throw DisconnectedPrefixError(
                "tree extraction: " + g.name(v) + " has no earlier neighbor");
        t.parent[v] = sigma.at(best);
    }
    return t;
}

} // namespace

RootedTree extract_f_tree(const Graph& g, const Ordering& sigma) {
    return extract_by_earlier_neighbor(g, sigma, true);
}

RootedTree extract_l_tree(const Graph& g, const Ordering& sigma) {
    return extract_by_earlier_neighbor(g, sigma, false);
}

} // namespace pso
