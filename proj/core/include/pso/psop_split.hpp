#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pso/graph.hpp"
#include "pso/oba.hpp"
#include "pso/partial_order.hpp"
#include "pso/solve_result.hpp"

namespace pso {

enum class PrematureMode { Mcs, Lbfs };

/// Independent-side vertices that pi forces too far left: u is premature when
/// some v with u < v in pi is a clique vertex, or (Mcs) has strictly more
/// neighbors than u, or (Lbfs) has a neighborhood strictly containing u's.
struct PrematureSet {
    PrematureMode mode = PrematureMode::Mcs;
    std::vector<VertexId> members; // ascending, subset of the independent side
};

PrematureSet compute_premature_set(const Graph& g, const SplitPartition& sp,
                                   const PartialOrder& pi, PrematureMode mode);

/// Block i of the decomposition: I_i is the group of premature vertices with
/// the i-th smallest neighborhood, C_i the clique vertices that neighborhood
/// adds over block i-1's.
struct NestedBlock {
    std::vector<VertexId> clique;      // C_i, ascending
    std::vector<VertexId> independent; // I_i, ascending
    /// The unique member of I_i with a pi-successor in C_i, if any.
    std::optional<VertexId> distinguished;
};

struct NestedDecomposition {
    std::vector<NestedBlock> blocks;
};

enum class NestedCondition { N1, N2, N3, N4 };

const char* to_string(NestedCondition c);

struct NestedViolation {
    NestedCondition condition = NestedCondition::N1;
    std::vector<VertexId> witnesses;
    std::string detail;
};

/// Checks the four structural conditions on (pi, A): clique predecessors come
/// from C or A (N1); the neighborhoods of A form an inclusion chain, yielding
/// the blocks (N2); predecessors of block-i members sit in blocks <= i (N3);
/// per block at most one premature vertex precedes a same-block clique vertex
/// (N4). Returns the block decomposition or the first violated condition.
std::variant<NestedDecomposition, NestedViolation> check_nested_property(
    const Graph& g, const SplitPartition& sp, const PartialOrder& pi,
    const PrematureSet& a);

/// The closure of: pi's pairs; block-i members before everything outside
/// blocks 1..i; clique before non-premature independent vertices; each
/// block's distinguished vertex before its block siblings. Acyclic whenever
/// check_nested_property passed (a cycle here is a bug and throws).
PartialOrder nested_partial_order(const PartialOrder& pi, const PrematureSet& a,
                                  const NestedDecomposition& dec,
                                  const SplitPartition& sp);

/// One-before-all instance over the clique: (N(x)\N(y), N(y)\N(x)) for every
/// non-premature independent pair x < y in pi, plus ({x},{y}) for clique
/// pairs ordered by piN.
ObaInstance build_lbfs_clique_relation(const Graph& g, const SplitPartition& sp,
                                       const PartialOrder& pi,
                                       const PrematureSet& a,
                                       const PartialOrder& piN);

/// MCS orderings extending pi on a split graph exist iff (pi, A) is nested;
/// on success returns the deterministic MCS over a topological order of the
/// nested partial order.
SolveResult solve_psop_mcs_split(const Graph& g, const PartialOrder& pi);

/// LBFS analogue: additionally the clique relation must admit a
/// one-before-all ordering tau; the tie-breaker interleaves the independent
/// vertices into tau at their earliest legal positions.
SolveResult solve_psop_lbfs_split(const Graph& g, const PartialOrder& pi);

} // namespace pso
