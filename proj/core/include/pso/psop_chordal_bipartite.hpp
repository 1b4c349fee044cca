#pragma once

#include <variant>
#include <vector>

#include "pso/graph.hpp"
#include "pso/oba.hpp"
#include "pso/partial_order.hpp"
#include "pso/solve_result.hpp"

namespace pso {

struct NormalizeViolation {
    VertexId x = -1; // layer(x) > layer(y) although x must precede y
    VertexId y = -1;
};

/// Restricts pi to pairs within a single layer of lay. Pairs pointing from a
/// lower to a higher layer hold in every search ordering that visits layers
/// in blocks and are dropped; a pair from a higher to a lower layer can never
/// hold in such an ordering and makes the instance infeasible.
/// Works on the transitive closure, so constraints chained across layers are
/// kept.
std::variant<PartialOrder, NormalizeViolation> normalize_layer_constraints(
    const PartialOrder& pi, const BfsLayering& lay);

/// One one-before-all instance per layer 1..k (index i-1 holds layer i).
/// Ground set of instance i-1 = the vertices of layer i.
struct LayerRelations {
    std::vector<ObaInstance> per_layer;
};

/// Seeds layer i's relation with ({x},{y}) for every same-layer pair x < y
/// of pi, then propagates each tuple (A,B) of layer i down to layer i-1 as
/// (A'', B') where A' = [N(A) ∩ layer(i-1)] \ N(B), A'' keeps the members of
/// A' with the largest neighborhood in layer i-2 (their layer-(i-2)
/// neighborhoods are inclusion-comparable on chordal bipartite graphs, so
/// the maximum-degree members realize N(A') ∩ layer(i-2)), and
/// B' = [N(B) ∩ layer(i-1)] \ N(A). Empty sides are inserted as-is; the
/// one-before-all solver handles them.
/// pre: pi holds same-layer pairs only (normalize first).
LayerRelations build_layer_relations(const Graph& g, const BfsLayering& lay,
                                     const PartialOrder& pi);

struct CbOptions {
    /// Skip the exponential chordal-bipartite check (bipartiteness is still
    /// required). Infeasibility answers are only sound if the caller's claim
    /// holds.
    bool assume_chordal_bipartite = false;
    /// Largest vertex count the exhaustive class check will attempt.
    int recognition_cap = 16;
};

/// Finds an LBFS ordering of g starting at r that extends pi, or decides none
/// exists. g must be connected and chordal bipartite; the class is checked up
/// to opts.recognition_cap vertices unless asserted by the caller. Layer
/// constraints are normalized per root, each layer's one-before-all instance
/// is solved, the layer orderings are concatenated into a tie-breaker rho,
/// and the result is the deterministic LBFS over rho.
SolveResult solve_psop_lbfs_cb_rooted(const Graph& g, VertexId r,
                                      const PartialOrder& pi,
                                      const CbOptions& opts = {});

} // namespace pso
