#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pso/bitset.hpp"

namespace pso {

using VertexId = int;

class DisconnectedGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected simple graph over dense vertex ids 0..n-1 with a display-name
/// table. Canonical id order is the order of first appearance in the input.
/// Immutable once built; self-loops and duplicate edges in the input are
/// recorded (and not stored) so validate_graph can report them.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from named edges. Vertex ids are assigned by first
    /// appearance across the edge list.
    static Graph from_edge_list(
        const std::vector<std::pair<std::string, std::string>>& edges);

    /// Builds a graph over n vertices named "v0".."v{n-1}" unless names given.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> names = {});

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(VertexId u, VertexId v) const;

    const std::string& name(VertexId v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<VertexId> find_vertex(const std::string& name) const;

    /// Neighborhood of v as a bitset over all vertices (fresh copy per call).
    DynamicBitset neighborhood_mask(VertexId v) const;

    bool self_loop_seen() const { return self_loop_seen_; }
    bool duplicate_edge_seen() const { return duplicate_edge_seen_; }

    /// All edges as id pairs (u < v), in canonical order.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
    std::vector<std::vector<VertexId>> adjacency_; // sorted, unique
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> id_of_;
    int edge_count_ = 0;
    bool self_loop_seen_ = false;
    bool duplicate_edge_seen_ = false;
};

struct GraphValidation {
    bool loop_free = true;
    bool simple = true; // loop-free and no duplicate input edges
    bool connected = true;
    bool ok() const { return simple && loop_free && connected; }
    std::string summary() const;
};

/// Reports whether g is simple, loop-free and connected. Solvers require a
/// passing report; the report carries failures instead of throwing.
GraphValidation validate_graph(const Graph& g);

struct BfsLayering {
    VertexId root = 0;
    std::vector<int> layer_of;                  // distance from root
    std::vector<std::vector<VertexId>> layers;  // layers[d], d = 0..max_layer
    int max_layer() const { return static_cast<int>(layers.size()) - 1; }
};

/// Groups vertices by graph distance from r. Throws DisconnectedGraphError if
/// some vertex is unreachable.
BfsLayering bfs_layering(const Graph& g, VertexId r);

struct SplitPartition {
    std::vector<VertexId> clique;
    std::vector<VertexId> independent;
    /// Set when a clique vertex of degree |C|-1 was moved to the independent
    /// side (the placement was valid either way; the independent side wins).
    std::optional<VertexId> boundary_moved;

    bool in_clique(VertexId v) const;
    DynamicBitset clique_mask(int n) const;
};

/// Degree-sequence split-graph recognition. Returns a verified partition or
/// nullopt when g is not a split graph.
std::optional<SplitPartition> find_split_partition(const Graph& g);

/// Direct re-check of a candidate partition (clique pairwise adjacent,
/// independent side pairwise nonadjacent, both sides partition V).
bool verify_split_partition(const Graph& g, const SplitPartition& sp);

bool is_bipartite(const Graph& g);

enum class ClassCheck { Yes, No, TooLarge };

/// Exhaustive chordal-bipartite test: bipartite and no induced cycle of
/// length >= 6. Only attempted for vertex_count <= size_cap; returns TooLarge
/// otherwise so the caller can assert the class instead.
ClassCheck check_chordal_bipartite(const Graph& g, int size_cap = 16);

} // namespace pso
