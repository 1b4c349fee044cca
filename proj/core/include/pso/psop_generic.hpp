#pragma once

#include <functional>
#include <optional>

#include "pso/graph.hpp"
#include "pso/partial_order.hpp"
#include "pso/solve_result.hpp"

namespace pso {

/// Finds a generic-search ordering of g that starts at r and linearly extends
/// pi, greedily: the frontier holds every unnumbered vertex that has a
/// numbered neighbor (or is r) and has no unnumbered order-predecessor; the
/// smallest id in the frontier is taken next. Infeasible when the frontier
/// empties early, and immediately when r is not minimal in pi.
/// Runs in O(V + E + |pi| * log V) over the generator DAG of pi.
SolveResult solve_psop_gs_rooted(const Graph& g, VertexId r, const PartialOrder& pi);

using RootedSolver =
    std::function<SolveResult(const Graph&, VertexId, const PartialOrder&)>;

/// Tries every pi-minimal vertex as root, ascending, and returns the first
/// success. A NotInClass result from any root aborts the scan (the class does
/// not depend on the root).
SolveResult solve_psop_unrooted(const Graph& g, const PartialOrder& pi,
                                const RootedSolver& rooted_solver);

/// pi plus the pairs (r, v) for every other vertex, which forces r to be the
/// first element of any linear extension. nullopt when r is not minimal in pi
/// (the rooted instance is then trivially infeasible).
std::optional<PartialOrder> with_root_first(const PartialOrder& pi, VertexId r);

} // namespace pso
