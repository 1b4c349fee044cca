#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pso/graph.hpp"
#include "pso/ordering.hpp"

namespace pso {

enum class SearchKind { GenericSearch, Bfs, Lbfs, Mcs, Mns };

const char* to_string(SearchKind kind);
std::optional<SearchKind> search_kind_from_string(std::string_view s);

/// A vertex label during a search: the 1-based visit indices of its already
/// numbered neighbors, ascending.
using Label = std::vector<int>;

enum class LabelOrder { Less, Greater, Incomparable };

/// Relation between two labels under the given search's label order (a strict
/// partial order; equal labels are incomparable). Less means a loses to b.
/// Generic search: empty < nonempty. Bfs: additionally earlier first neighbor
/// wins. Lbfs: proper subset loses, otherwise the smaller first difference
/// wins. Mcs: fewer elements lose. Mns: proper subset loses.
LabelOrder compare_labels(SearchKind kind, const Label& a, const Label& b);

bool label_less(SearchKind kind, const Label& a, const Label& b);

/// Runs the deterministic tie-broken search: at every step, among the
/// unnumbered vertices with maximal label, pick the one earliest in rho.
/// rho must permute all vertices. Plain per-step recomputation of the
/// eligible set; quadratic, meant for moderate sizes.
Ordering run_plus_search(const Graph& g, SearchKind kind, const Ordering& rho);

/// True iff ord could have been produced by the given search on g: every
/// vertex is label-maximal among the unnumbered at its step.
bool is_search_ordering(const Graph& g, SearchKind kind, const Ordering& ord);

/// Pattern characterization of lexicographic BFS orderings: for every
/// a < b < c in ord with ac an edge and ab a non-edge there is d < a with
/// bd an edge and cd a non-edge. Agrees with is_search_ordering(Lbfs) on
/// every graph.
bool check_lbfs_4point(const Graph& g, const Ordering& ord);

struct SearchEnumeration {
    std::vector<Ordering> orderings; // lexicographic by vertex id sequence
    bool truncated = false;
};

/// All orderings the search could produce, by branching over the eligible
/// set in ascending id order; restricted to those starting at root when
/// given. Stops (truncated = true) once cap orderings were collected.
SearchEnumeration enumerate_search_orderings(const Graph& g, SearchKind kind,
                                             std::optional<VertexId> root = {},
                                             std::size_t cap = std::size_t{1} << 20);

} // namespace pso
