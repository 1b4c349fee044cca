#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "pso/graph.hpp"
#include "pso/ordering.hpp"
#include "pso/partial_order.hpp"

namespace pso {

class DisconnectedPrefixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Spanning tree with a fixed root; parent[root] == -1.
struct RootedTree {
    VertexId root = 0;
    std::vector<VertexId> parent;

    bool operator==(const RootedTree&) const = default;
};

/// True iff t's edges are edges of g and every vertex reaches the root.
bool is_spanning_tree_of(const Graph& g, const RootedTree& t);

/// Same undirected tree, parents recomputed towards new_root.
RootedTree reroot_tree(const RootedTree& t, VertexId new_root);

/// The order every other vertex must precede t: strict pairs {(u,t) : u != t}.
PartialOrder end_vertex_order(const Graph& g, VertexId t);

/// Order forced when t must be the first-neighbor tree of a search ordering
/// rooted at t.root: each parent precedes its child and every other neighbor
/// of the child. A cycle certifies that no search ordering yields t.
std::variant<PartialOrder, CycleError> f_tree_to_psop(const Graph& g,
                                                      const RootedTree& t);

/// Order forced when t must be the last-neighbor tree of a layer-by-layer
/// (BFS-like) search ordering of a bipartite graph: each parent precedes its
/// child, and every other neighbor of the child in the parent's layer
/// precedes the parent. Throws std::invalid_argument when g is not bipartite;
/// the same-layer constraint pattern is only equivalent there.
std::variant<PartialOrder, CycleError> l_tree_to_psop_bipartite(
    const Graph& g, const RootedTree& t);

/// Tree linking every vertex to its leftmost earlier neighbor in sigma.
/// Throws DisconnectedPrefixError if some non-first vertex has no earlier
/// neighbor.
RootedTree extract_f_tree(const Graph& g, const Ordering& sigma);

/// Tree linking every vertex to its rightmost earlier neighbor in sigma.
RootedTree extract_l_tree(const Graph& g, const Ordering& sigma);

} // namespace pso
