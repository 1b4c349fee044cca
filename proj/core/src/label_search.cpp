#include "pso/label_search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pso {

const char* to_string(SearchKind kind) {
    switch (kind) {
        case SearchKind::GenericSearch: return "gs";
        case SearchKind::Bfs: return "bfs";
        case SearchKind::Lbfs: return "lbfs";
        case SearchKind::Mcs: return "mcs";
        case SearchKind::Mns: return "mns";
    }
    return "?";
}

std::optional<SearchKind> search_kind_from_string(std::string_view s) {
    if (s == "gs") return SearchKind::GenericSearch;
    if (s == "bfs") return SearchKind::Bfs;
    if (s == "lbfs") return SearchKind::Lbfs;
    if (s == "mcs") return SearchKind::Mcs;
    if (s == "mns") return SearchKind::Mns;
    return std::nullopt;
}

namespace {

/// Walks two ascending sequences to the first divergence and returns the two
/// values there, with INT_MAX for an exhausted side. Only their comparison is
/// meaningful: ma > mb iff a is a proper subset of b or min(a\b) > min(b\a).
std::pair<int, int> first_difference(const Label& a, const Label& b) {
    const int inf = std::numeric_limits<int>::max();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size() && a[i] == b[j]) {
        ++i;
        ++j;
    }
    if (i == a.size() && j == b.size()) return {inf, inf};
    if (i == a.size()) return {inf, b[j]};
    if (j == b.size()) return {a[i], inf};
    return {a[i], b[j]};
}

bool is_proper_subset(const Label& a, const Label& b) {
    if (a.size() >= b.size()) return false;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

bool label_less(SearchKind kind, const Label& a, const Label& b) {
    switch (kind) {
        case SearchKind::GenericSearch:
            return a.empty() && !b.empty();
        case SearchKind::Bfs:
            if (a.empty()) return !b.empty();
            return !b.empty() && a.front() > b.front();
        case SearchKind::Lbfs: {
            const auto [ma, mb] = first_difference(a, b);
            return ma > mb;
        }
        case SearchKind::Mcs:
            return a.size() < b.size();
        case SearchKind::Mns:
            return is_proper_subset(a, b);
    }
    return false;
}

LabelOrder compare_labels(SearchKind kind, const Label& a, const Label& b) {
    if (label_less(kind, a, b)) return LabelOrder::Less;
    if (label_less(kind, b, a)) return LabelOrder::Greater;
    return LabelOrder::Incomparable;
}

namespace {

/// True iff labels[v] is maximal among the labels of unnumbered vertices.
bool eligible(SearchKind kind, const std::vector<Label>& labels,
              const std::vector<char>& numbered, VertexId v) {
    for (VertexId w = 0; w < static_cast<VertexId>(labels.size()); ++w)
        if (!numbered[w] && w != v && label_less(kind, labels[v], labels[w]))
            return false;
    return true;
}

} // namespace

Ordering run_plus_search(const Graph& g, SearchKind kind, const Ordering& rho) {
    const int n = g.vertex_count();
    if (rho.size() != n)
        throw std::invalid_argument("plus search: tie-break order must cover all vertices");
    std::vector<Label> labels(static_cast<std::size_t>(n));
    std::vector<char> numbered(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> seq;
    seq.reserve(static_cast<std::size_t>(n));
    for (int step = 1; step <= n; ++step) {
        VertexId pick = -1;
        for (int k = 0; k < n; ++k) {
            const VertexId v = rho.at(k);
            if (!numbered[v] && eligible(kind, labels, numbered, v)) {
                pick = v;
                break;
            }
        }
        // The label order is a strict partial order on a finite set, so a
        // maximal (eligible) vertex always exists.
        if (pick < 0) throw std::logic_error("plus search: no eligible vertex");
        numbered[pick] = 1;
        seq.push_back(pick);
        for (const VertexId w : g.neighbors(pick))
            if (!numbered[w]) labels[w].push_back(step); // steps ascend, stays sorted
    }
    return Ordering(std::move(seq), n);
}

bool is_search_ordering(const Graph& g, SearchKind kind, const Ordering& ord) {
    const int n = g.vertex_count();
    if (ord.size() != n) return false;
    std::vector<Label> labels(static_cast<std::size_t>(n));
    std::vector<char> numbered(static_cast<std::size_t>(n), 0);
    for (int step = 1; step <= n; ++step) {
        const VertexId v = ord.at(step - 1);
        if (!eligible(kind, labels, numbered, v)) return false;
        numbered[v] = 1;
        for (const VertexId w : g.neighbors(v))
            if (!numbered[w]) labels[w].push_back(step);
    }
    return true;
}

bool check_lbfs_4point(const Graph& g, const Ordering& ord) {
    const int n = g.vertex_count();
    if (ord.size() != n)
        throw std::invalid_argument("pattern check: ordering must cover all vertices");
    // Position-indexed neighborhood masks: nbr[p] = positions of neighbors of
    // the vertex at position p.
    std::vector<DynamicBitset> nbr(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        DynamicBitset row(static_cast<std::size_t>(n));
        for (const VertexId w : g.neighbors(ord.at(p)))
            row.set(static_cast<std::size_t>(ord.position(w)));
        nbr[p] = std::move(row);
    }
    auto min_pos = [n](const DynamicBitset& s) {
        for (int p = 0; p < n; ++p)
            if (s.test(static_cast<std::size_t>(p))) return p;
        return n;
    };
    // For positions pb < pc: the earliest a in N(c) \ N(b) with pos < pb needs
    // a witness d in N(b) \ N(c) strictly before it; later such a's are then
    // covered by the same witness.
    for (int pb = 0; pb < n; ++pb) {
        for (int pc = pb + 1; pc < n; ++pc) {
            DynamicBitset only_c = nbr[pc];
            only_c.subtract(nbr[pb]);
            const int pa = min_pos(only_c);
            if (pa >= pb) continue;
            DynamicBitset only_b = nbr[pb];
            only_b.subtract(nbr[pc]);
            if (min_pos(only_b) >= pa) return false;
        }
    }
    return true;
}

namespace {

void enumerate_rec(const Graph& g, SearchKind kind, std::vector<Label>& labels,
                   std::vector<char>& numbered, std::vector<VertexId>& seq,
                   const std::optional<VertexId>& root, std::size_t cap,
                   SearchEnumeration& out) {
    const int n = g.vertex_count();
    if (static_cast<int>(seq.size()) == n) {
        if (out.orderings.size() < cap)
            out.orderings.emplace_back(seq, n);
        else
            out.truncated = true;
        return;
    }
    const int step = static_cast<int>(seq.size()) + 1;
    for (VertexId v = 0; v < n; ++v) {
        if (out.truncated) return;
        if (numbered[v] || !eligible(kind, labels, numbered, v)) continue;
        if (step == 1 && root && *root != v) continue;
        numbered[v] = 1;
        seq.push_back(v);
        std::vector<VertexId> touched;
        for (const VertexId w : g.neighbors(v))
            if (!numbered[w]) {
                labels[w].push_back(step);
                touched.push_back(w);
            }
        enumerate_rec(g, kind, labels, numbered, seq, root, cap, out);
        for (const VertexId w : touched) labels[w].pop_back();
        seq.pop_back();
        numbered[v] = 0;
    }
}

} // namespace

SearchEnumeration enumerate_search_orderings(const Graph& g, SearchKind kind,
                                             std::optional<VertexId> root,
                                             std::size_t cap) {
    SearchEnumeration out;
    const int n = g.vertex_count();
    std::vector<Label> labels(static_cast<std::size_t>(n));
    std::vector<char> numbered(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> seq;
    enumerate_rec(g, kind, labels, numbered, seq, root, cap, out);
    return out;
}

} // namespace pso
