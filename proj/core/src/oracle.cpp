#include "pso/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace pso {

namespace {

struct PsopSearch {
    const Graph& g;
    SearchKind kind;
    const PartialOrder& pi;
    std::optional<VertexId> root;
    std::vector<Label> labels;
    std::vector<char> numbered;
    std::vector<int> unplaced_preds;
    std::vector<VertexId> seq;

    bool eligible(VertexId v) const {
        for (VertexId w = 0; w < g.vertex_count(); ++w)
            if (!numbered[w] && w != v && label_less(kind, labels[v], labels[w]))
                return false;
        return true;
    }

    bool run() {
        const int n = g.vertex_count();
        if (static_cast<int>(seq.size()) == n) return true;
        const int step = static_cast<int>(seq.size()) + 1;
        for (VertexId v = 0; v < n; ++v) {
            if (numbered[v] || unplaced_preds[v] > 0) continue;
            if (step == 1 && root && *root != v) continue;
            if (!eligible(v)) continue;
            numbered[v] = 1;
            seq.push_back(v);
            for (const VertexId y : pi.successors()[v]) --unplaced_preds[y];
            std::vector<VertexId> touched;
            for (const VertexId w : g.neighbors(v))
                if (!numbered[w]) {
                    labels[w].push_back(step);
                    touched.push_back(w);
                }
            if (run()) return true;
            for (const VertexId w : touched) labels[w].pop_back();
            for (const VertexId y : pi.successors()[v]) ++unplaced_preds[y];
            seq.pop_back();
            numbered[v] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<Ordering> brute_force_psop(const Graph& g, SearchKind kind,
                                         const PartialOrder& pi,
                                         std::optional<VertexId> root,
                                         int size_guard) {
    const int n = g.vertex_count();
    if (n > size_guard)
        throw std::invalid_argument(
            "exhaustive solve: graph exceeds the size guard (" +
            std::to_string(size_guard) + ")");
    if (pi.element_count() != n)
        throw std::invalid_argument("exhaustive solve: order and graph sizes differ");
    PsopSearch s{g,
                 kind,
                 pi,
                 root,
                 std::vector<Label>(static_cast<std::size_t>(n)),
                 std::vector<char>(static_cast<std::size_t>(n), 0),
                 std::vector<int>(static_cast<std::size_t>(n), 0),
                 {}};
    for (const auto& [u, v] : pi.generators()) ++s.unplaced_preds[v];
    if (!s.run()) return std::nullopt;
    return Ordering(std::move(s.seq), n);
}

std::optional<std::vector<int>> brute_force_oba(const ObaInstance& inst,
                                                int size_guard) {
    if (static_cast<int>(inst.ground.size()) > size_guard)
        throw std::invalid_argument(
            "exhaustive solve: ground set exceeds the size guard (" +
            std::to_string(size_guard) + ")");
    std::vector<int> perm = inst.ground; // sorted, so permutations go lexicographically
    do {
        if (check_oba(inst, perm)) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

} // namespace pso
