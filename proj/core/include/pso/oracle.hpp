#pragma once

#include <optional>
#include <vector>

#include "pso/graph.hpp"
#include "pso/label_search.hpp"
#include "pso/oba.hpp"
#include "pso/ordering.hpp"
#include "pso/partial_order.hpp"

namespace pso {

/// Exhaustive decision of the partial-search-order question: expands the
/// eligible set depth-first in ascending id order, pruning any vertex with an
/// unplaced order-predecessor, and returns the first complete ordering (the
/// lexicographically smallest one). nullopt when the search tree is
/// exhausted. Throws std::invalid_argument when the graph exceeds size_guard
/// vertices; exponential beyond desk scale.
std::optional<Ordering> brute_force_psop(const Graph& g, SearchKind kind,
                                         const PartialOrder& pi,
                                         std::optional<VertexId> root = {},
                                         int size_guard = 10);

/// First permutation of the ground set (in ascending order) satisfying every
/// one-before-all tuple, or nullopt. Guarded like brute_force_psop.
std::optional<std::vector<int>> brute_force_oba(const ObaInstance& inst,
                                                int size_guard = 8);

} // namespace pso
