#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pso/partial_order.hpp"

namespace pso {

/// One-before-all constraint system. A tuple (A, B) of set-family indices
/// demands that some element of A is placed before every element of B.
/// Sets keep their identity, so the family may hold equal sets repeatedly.
/// Ground elements are arbitrary ids (vertex ids in practice).
struct ObaInstance {
    std::vector<int> ground;                   // sorted, unique
    std::vector<std::vector<int>> family;      // each sorted, unique, subset of ground
    std::vector<std::pair<int, int>> relation; // (left index, right index)

    static ObaInstance over(std::vector<int> ground_elements);

    /// Adds a set (sorted, deduplicated) and returns its family index.
    int add_set(std::vector<int> elements);
    void add_tuple(int left, int right);
};

struct ObaResult {
    bool found = false;
    std::vector<int> ordering;       // permutation of the ground set if found
    std::vector<int> stuck_elements; // if not found: elements that can never
                                     // come first among the remaining ones
};

/// Decides whether an ordering of the ground set satisfies every tuple and
/// returns one if so. Greedy: an element is ready once no set containing it
/// is the right side of an unsatisfied tuple; among ready elements the
/// smallest id is placed. Counter scheme: r(B) = unsatisfied tuples with
/// right side B, t(x) = sets containing x with r > 0; placing x retires every
/// set holding x and releases its outgoing tuples. Linear in total set size
/// up to the ready-heap factor.
ObaResult solve_oba(const ObaInstance& inst);

/// Direct check of the defining condition for a full ordering of the ground
/// set. A tuple with an empty right side holds vacuously; a witness must
/// strictly precede all of B, so an element of A ∩ B cannot certify itself.
bool check_oba(const ObaInstance& inst, std::span<const int> ordering);

/// Linear extensions as a one-before-all system: ground = all elements,
/// one ({u}, {v}) tuple per generator pair.
ObaInstance encode_partial_order_as_oba(const PartialOrder& po);

} // namespace pso
