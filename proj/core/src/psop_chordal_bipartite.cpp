#include "pso/psop_chordal_bipartite.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pso/label_search.hpp"

namespace pso {

std::variant<PartialOrder, NormalizeViolation> normalize_layer_constraints(
    const PartialOrder& pi, const BfsLayering& lay) {
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (const auto& [x, y] : pi.strict_closure_pairs()) {
        const int lx = lay.layer_of[x];
        const int ly = lay.layer_of[y];
        if (lx > ly) return NormalizeViolation{x, y};
        if (lx == ly) kept.emplace_back(x, y);
    }
    // A subset of a strict order cannot introduce a cycle.
    return make_partial_order(pi.element_count(), std::move(kept));
}

LayerRelations build_layer_relations(const Graph& g, const BfsLayering& lay,
                                     const PartialOrder& pi) {
    const int n = g.vertex_count();
    const int k = lay.max_layer();
    LayerRelations rel;
    rel.per_layer.reserve(static_cast<std::size_t>(std::max(k, 0)));
    for (int i = 1; i <= k; ++i)
        rel.per_layer.push_back(ObaInstance::over(lay.layers[i]));

    std::vector<DynamicBitset> layer_mask(static_cast<std::size_t>(k) + 1,
                                          DynamicBitset(static_cast<std::size_t>(n)));
    for (int i = 0; i <= k; ++i)
        for (const VertexId v : lay.layers[i])
            layer_mask[i].set(static_cast<std::size_t>(v));
    std::vector<int> up_degree(static_cast<std::size_t>(n), 0); // neighbors one layer up
    for (VertexId v = 0; v < n; ++v)
        for (const VertexId w : g.neighbors(v))
            if (lay.layer_of[w] == lay.layer_of[v] - 1) ++up_degree[v];

    // Seed with the same-layer constraint pairs. pi is normalized, so its
    // generators are exactly the within-layer closure pairs; layer 0 is the
    // root alone and cannot carry a strict pair.
    std::vector<std::vector<int>> singleton(
        static_cast<std::size_t>(k) + 1,
        std::vector<int>(static_cast<std::size_t>(n), -1));
    for (const auto& [x, y] : pi.generators()) {
        const int i = lay.layer_of[x];
        auto& inst = rel.per_layer[i - 1];
        auto& idx = singleton[i];
        if (idx[x] < 0) idx[x] = inst.add_set({x});
        if (idx[y] < 0) idx[y] = inst.add_set({y});
        inst.add_tuple(idx[x], idx[y]);
    }

    auto side_union = [&](const std::vector<int>& members) {
        DynamicBitset u(static_cast<std::size_t>(n));
        for (const int v : members) u |= g.neighborhood_mask(v);
        return u;
    };

    // Push every tuple one layer down: a tuple (A, B) on layer i forces, one
    // layer below, the distinguished up-neighbors of A ahead of the
    // up-neighbors of B (minus each other's neighborhoods). Inserted
    // unconditionally; empty sides keep their meaning in the solver.
    for (int i = k; i >= 2; --i) {
        auto& inst = rel.per_layer[i - 1];
        auto& below = rel.per_layer[i - 2];
        const std::size_t tuple_count = inst.relation.size();
        for (std::size_t t = 0; t < tuple_count; ++t) {
            const auto [ai, bi] = inst.relation[t];
            const DynamicBitset na = side_union(inst.family[ai]);
            const DynamicBitset nb = side_union(inst.family[bi]);

            DynamicBitset a1 = na;
            a1 &= layer_mask[i - 1];
            a1.subtract(nb);
            int best = 0;
            a1.for_each([&](std::size_t v) { best = std::max(best, up_degree[v]); });
            std::vector<int> a2;
            a1.for_each([&](std::size_t v) {
                if (up_degree[v] == best) a2.push_back(static_cast<int>(v));
            });

            DynamicBitset b1 = nb;
            b1 &= layer_mask[i - 1];
            b1.subtract(na);

            const int left = below.add_set(std::move(a2));
            const int right = below.add_set(b1.to_vector());
            below.add_tuple(left, right);
        }
    }
    return rel;
}

SolveResult solve_psop_lbfs_cb_rooted(const Graph& g, VertexId r,
                                      const PartialOrder& pi,
                                      const CbOptions& opts) {
    const int n = g.vertex_count();
    if (r < 0 || r >= n)
        throw std::invalid_argument("rooted solve: root out of range");
    if (pi.element_count() != n)
        throw std::invalid_argument("rooted solve: order and graph sizes differ");

    const GraphValidation val = validate_graph(g);
    if (!val.ok()) return SolveResult::not_in_class("graph " + val.summary());
    if (!is_bipartite(g))
        return SolveResult::not_in_class("graph is not bipartite");
    if (!opts.assume_chordal_bipartite) {
        switch (check_chordal_bipartite(g, opts.recognition_cap)) {
            case ClassCheck::Yes: break;
            case ClassCheck::No:
                return SolveResult::not_in_class(
                    "graph has an induced cycle longer than four");
            case ClassCheck::TooLarge:
                return SolveResult::not_in_class(
                    "graph is too large for the chordal-bipartite check; "
                    "assert the class to proceed");
        }
    }
    if (!pi.predecessors()[r].empty())
        return SolveResult::infeasible(
            "the root has an order-predecessor, so no extension can start there");

    const BfsLayering lay = bfs_layering(g, r);
    auto normalized = normalize_layer_constraints(pi, lay);
    if (const auto* viol = std::get_if<NormalizeViolation>(&normalized))
        return SolveResult::infeasible(
            "constraint " + g.name(viol->x) + " before " + g.name(viol->y) +
            " points from layer " + std::to_string(lay.layer_of[viol->x]) +
            " to shallower layer " + std::to_string(lay.layer_of[viol->y]));
    const PartialOrder& same_layer = std::get<PartialOrder>(normalized);

    const LayerRelations rel = build_layer_relations(g, lay, same_layer);
    std::vector<VertexId> rho_seq{r};
    for (std::size_t li = 0; li < rel.per_layer.size(); ++li) {
        const ObaResult sub = solve_oba(rel.per_layer[li]);
        if (!sub.found) {
            std::string stuck;
            for (const int v : sub.stuck_elements)
                stuck += (stuck.empty() ? "" : ", ") + g.name(v);
            return SolveResult::infeasible(
                "layer " + std::to_string(li + 1) +
                " admits no one-before-all ordering (stuck: " + stuck + ")");
        }
        rho_seq.insert(rho_seq.end(), sub.ordering.begin(), sub.ordering.end());
    }

    const Ordering rho(std::move(rho_seq), n);
    Ordering sigma = run_plus_search(g, SearchKind::Lbfs, rho);
    if (!pi.is_linear_extension(sigma)) {
        if (opts.assume_chordal_bipartite)
            return SolveResult::not_in_class(
                "the computed ordering does not extend the input order; the "
                "asserted chordal-bipartite claim is likely wrong");
        throw std::logic_error("layered solve produced a non-extending ordering");
    }
    return SolveResult::found(std::move(sigma));
}

} // namespace pso
