#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "pso/bitset.hpp"
#include "pso/graph.hpp"
#include "pso/ordering.hpp"

namespace pso {

struct CycleError {
    std::vector<VertexId> cycle; // v0 -> v1 -> ... -> v0 (v0 repeated at end)
};

/// Strict partial order on vertex ids 0..n-1, built from generator pairs
/// (u before v). The input need not be transitively closed; reflexive pairs
/// are dropped (but counted) and a cycle in the generators is rejected at
/// build time.
///
/// Reachability is answered from a precomputed closure when n is small and by
/// on-demand DFS over the generator DAG otherwise, so million-pair inputs on
/// large vertex sets stay linear in memory.
class PartialOrder {
public:
    static constexpr int kClosureCap = 4096;

    static std::variant<PartialOrder, CycleError> build(
        int n, std::vector<std::pair<VertexId, VertexId>> generators);

    int element_count() const { return n_; }

    /// Deduplicated generator pairs, canonical order (by u, then v).
    const std::vector<std::pair<VertexId, VertexId>>& generators() const {
        return generators_;
    }
    const std::vector<std::vector<VertexId>>& successors() const { return succ_; }
    const std::vector<std::vector<VertexId>>& predecessors() const { return pred_; }

    int reflexive_input_count() const { return reflexive_dropped_; }

    /// True iff u comes strictly before v in the order (transitively).
    bool precedes(VertexId u, VertexId v) const;

    /// All strict pairs of the transitive closure, canonical order.
    /// Quadratic in the worst case; intended for small n.
    std::vector<std::pair<VertexId, VertexId>> strict_closure_pairs() const;

    /// Elements with no predecessor, ascending.
    std::vector<VertexId> minimal_elements() const;

    /// True iff ord puts u before v for every generator pair (u, v).
    /// Equivalent to checking all closure pairs.
    bool is_linear_extension(const Ordering& ord) const;

    /// Some topological order of the elements (smallest id first among ready
    /// elements).
    Ordering topological_order() const;

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> generators_;
    std::vector<std::vector<VertexId>> succ_; // sorted, unique
    std::vector<std::vector<VertexId>> pred_; // sorted, unique
    int reflexive_dropped_ = 0;
    std::vector<DynamicBitset> closure_; // row u = strict successors; empty if n > cap

    bool reaches_dfs(VertexId u, VertexId v) const;
};

/// Convenience wrapper that throws std::invalid_argument on a cycle.
PartialOrder make_partial_order(int n,
                                std::vector<std::pair<VertexId, VertexId>> generators);

} // namespace pso
