#include "pso/psop_split.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "pso/label_search.hpp"

namespace pso {

const char* to_string(NestedCondition c) {
    switch (c) {
        case NestedCondition::N1: return "N1";
        case NestedCondition::N2: return "N2";
        case NestedCondition::N3: return "N3";
        case NestedCondition::N4: return "N4";
    }
    return "?";
}

PrematureSet compute_premature_set(const Graph& g, const SplitPartition& sp,
                                   const PartialOrder& pi, PrematureMode mode) {
    const int n = g.vertex_count();
    std::vector<DynamicBitset> nbr(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) nbr[v] = g.neighborhood_mask(v);

    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : pi.strict_closure_pairs()) {
        if (sp.in_clique(u) || hit[u]) continue;
        bool forced = sp.in_clique(v);
        if (!forced) {
            if (mode == PrematureMode::Mcs)
                forced = g.degree(u) < g.degree(v);
            else
                forced = g.degree(u) < g.degree(v) && nbr[u].is_subset_of(nbr[v]);
        }
        if (forced) hit[u] = 1;
    }
    PrematureSet a;
    a.mode = mode;
    for (VertexId v = 0; v < n; ++v)
        if (hit[v]) a.members.push_back(v);
    return a;
}

std::variant<NestedDecomposition, NestedViolation> check_nested_property(
    const Graph& g, const SplitPartition& sp, const PartialOrder& pi,
    const PrematureSet& a) {
    const int n = g.vertex_count();
    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    for (const VertexId u : a.members) {
        if (sp.in_clique(u))
            throw std::invalid_argument(
                "nested check: premature set must lie on the independent side");
        in_a[u] = 1;
    }
    const auto pairs = pi.strict_closure_pairs();

    // N1: whatever precedes a clique vertex is clique or premature.
    for (const auto& [x, y] : pairs)
        if (sp.in_clique(y) && !sp.in_clique(x) && !in_a[x])
            return NestedViolation{
                NestedCondition::N1,
                {x, y},
                "a non-premature independent vertex precedes a clique vertex"};

    // N2: premature neighborhoods form a strict inclusion chain.
    std::vector<std::pair<DynamicBitset, std::vector<VertexId>>> groups;
    for (const VertexId u : a.members) {
        DynamicBitset mask = g.neighborhood_mask(u);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& gr) { return gr.first == mask; });
        if (it == groups.end())
            groups.emplace_back(std::move(mask), std::vector<VertexId>{u});
        else
            it->second.push_back(u);
    }
    std::stable_sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) {
        return x.first.count() < y.first.count();
    });
    for (std::size_t i = 0; i + 1 < groups.size(); ++i)
        if (!groups[i].first.is_subset_of(groups[i + 1].first))
            return NestedViolation{
                NestedCondition::N2,
                {groups[i].second.front(), groups[i + 1].second.front()},
                "two premature vertices have inclusion-incomparable neighborhoods"};

    NestedDecomposition dec;
    DynamicBitset covered(static_cast<std::size_t>(n));
    for (auto& [mask, members] : groups) {
        NestedBlock block;
        DynamicBitset fresh = mask;
        fresh.subtract(covered);
        fresh.for_each(
            [&](std::size_t v) { block.clique.push_back(static_cast<VertexId>(v)); });
        block.independent = std::move(members);
        covered |= mask;
        dec.blocks.push_back(std::move(block));
    }

    // N3: predecessors of block members stay within earlier-or-same blocks.
    constexpr int kOutside = std::numeric_limits<int>::max();
    std::vector<int> block_label(static_cast<std::size_t>(n), kOutside);
    std::vector<int> clique_block(static_cast<std::size_t>(n), 0);
    std::vector<int> ind_block(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        for (const VertexId v : dec.blocks[i].clique) {
            block_label[v] = static_cast<int>(i) + 1;
            clique_block[v] = static_cast<int>(i) + 1;
        }
        for (const VertexId v : dec.blocks[i].independent) {
            block_label[v] = static_cast<int>(i) + 1;
            ind_block[v] = static_cast<int>(i) + 1;
        }
    }
    for (const auto& [x, y] : pairs)
        if (block_label[x] > block_label[y])
            return NestedViolation{
                NestedCondition::N3,
                {x, y},
                "a vertex precedes a member of an earlier block"};

    // N4: at most one premature vertex per block precedes a same-block clique
    // vertex.
    for (const auto& [x, y] : pairs) {
        if (!in_a[x] || !sp.in_clique(y)) continue;
        const int i = ind_block[x];
        if (i == 0 || clique_block[y] != i) continue;
        auto& block = dec.blocks[static_cast<std::size_t>(i) - 1];
        if (block.distinguished && *block.distinguished != x)
            return NestedViolation{
                NestedCondition::N4,
                {*block.distinguished, x, y},
                "two premature vertices of one block precede its clique part"};
        block.distinguished = x;
    }
    return dec;
}

PartialOrder nested_partial_order(const PartialOrder& pi, const PrematureSet& a,
                                  const NestedDecomposition& dec,
                                  const SplitPartition& sp) {
    const int n = pi.element_count();
    auto gen = pi.generators();

    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const auto& block : dec.blocks) {
        std::vector<VertexId> members;
        members.insert(members.end(), block.clique.begin(), block.clique.end());
        members.insert(members.end(), block.independent.begin(),
                       block.independent.end());
        for (const VertexId v : members) covered[v] = 1;
        for (const VertexId x : members)
            for (VertexId y = 0; y < n; ++y)
                if (!covered[y]) gen.emplace_back(x, y);
    }

    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    for (const VertexId u : a.members) in_a[u] = 1;
    for (const VertexId x : sp.clique)
        for (const VertexId y : sp.independent)
            if (!in_a[y]) gen.emplace_back(x, y);

    for (const auto& block : dec.blocks)
        if (block.distinguished)
            for (const VertexId y : block.independent)
                if (y != *block.distinguished) gen.emplace_back(*block.distinguished, y);

    auto built = PartialOrder::build(n, std::move(gen));
    if (std::holds_alternative<CycleError>(built))
        throw std::logic_error("nested order construction produced a cycle");
    return std::get<PartialOrder>(std::move(built));
}

ObaInstance build_lbfs_clique_relation(const Graph& g, const SplitPartition& sp,
                                       const PartialOrder& pi,
                                       const PrematureSet& a,
                                       const PartialOrder& piN) {
    const int n = g.vertex_count();
    ObaInstance inst = ObaInstance::over(sp.clique);
    std::vector<char> free_ind(static_cast<std::size_t>(n), 0);
    for (const VertexId v : sp.independent) free_ind[v] = 1;
    for (const VertexId v : a.members) free_ind[v] = 0;

    for (const auto& [x, y] : pi.strict_closure_pairs()) {
        if (!free_ind[x] || !free_ind[y]) continue;
        DynamicBitset only_x = g.neighborhood_mask(x);
        DynamicBitset only_y = g.neighborhood_mask(y);
        DynamicBitset tmp = only_x;
        only_x.subtract(only_y);
        only_y.subtract(tmp);
        inst.add_tuple(inst.add_set(only_x.to_vector()),
                       inst.add_set(only_y.to_vector()));
    }

    std::vector<int> singleton(static_cast<std::size_t>(n), -1);
    auto single = [&](VertexId v) {
        if (singleton[v] < 0) singleton[v] = inst.add_set({v});
        return singleton[v];
    };
    for (const auto& [x, y] : piN.strict_closure_pairs())
        if (sp.in_clique(x) && sp.in_clique(y))
            inst.add_tuple(single(x), single(y));
    return inst;
}

namespace {

struct SplitContext {
    SplitPartition sp;
    PrematureSet a;
    NestedDecomposition dec;
    PartialOrder piN;
};

/// Shared front half of both split solvers; fills ctx or returns the failure.
std::optional<SolveResult> prepare_split(const Graph& g, const PartialOrder& pi,
                                         PrematureMode mode, SplitContext& ctx) {
    if (pi.element_count() != g.vertex_count())
        throw std::invalid_argument("split solve: order and graph sizes differ");
    const GraphValidation val = validate_graph(g);
    if (!val.ok()) return SolveResult::not_in_class("graph " + val.summary());
    auto sp = find_split_partition(g);
    if (!sp) return SolveResult::not_in_class("graph is not a split graph");
    ctx.sp = std::move(*sp);
    ctx.a = compute_premature_set(g, ctx.sp, pi, mode);
    auto nested = check_nested_property(g, ctx.sp, pi, ctx.a);
    if (const auto* viol = std::get_if<NestedViolation>(&nested)) {
        std::string names;
        for (const VertexId v : viol->witnesses)
            names += (names.empty() ? "" : ", ") + g.name(v);
        return SolveResult::infeasible(std::string(to_string(viol->condition)) +
                                       " fails (" + viol->detail + "; see " + names +
                                       ")");
    }
    ctx.dec = std::get<NestedDecomposition>(std::move(nested));
    ctx.piN = nested_partial_order(pi, ctx.a, ctx.dec, ctx.sp);
    return std::nullopt;
}

} // namespace

SolveResult solve_psop_mcs_split(const Graph& g, const PartialOrder& pi) {
    SplitContext ctx;
    if (auto early = prepare_split(g, pi, PrematureMode::Mcs, ctx)) return *early;
    const Ordering rho = ctx.piN.topological_order();
    Ordering sigma = run_plus_search(g, SearchKind::Mcs, rho);
    if (!pi.is_linear_extension(sigma))
        throw std::logic_error("split solve produced a non-extending ordering");
    return SolveResult::found(std::move(sigma));
}

SolveResult solve_psop_lbfs_split(const Graph& g, const PartialOrder& pi) {
    SplitContext ctx;
    if (auto early = prepare_split(g, pi, PrematureMode::Lbfs, ctx)) return *early;
    const int n = g.vertex_count();

    const ObaInstance inst =
        build_lbfs_clique_relation(g, ctx.sp, pi, ctx.a, ctx.piN);
    const ObaResult tau = solve_oba(inst);
    if (!tau.found) {
        std::string stuck;
        for (const int v : tau.stuck_elements)
            stuck += (stuck.empty() ? "" : ", ") + g.name(v);
        return SolveResult::infeasible(
            "the clique admits no one-before-all ordering (stuck: " + stuck + ")");
    }

    // Tie-breaker: keep the clique exactly in tau order and slot every
    // independent vertex in at its earliest legal position. tau extends the
    // nested order on the clique, so the merge cannot deadlock.
    std::vector<std::vector<VertexId>> succ(static_cast<std::size_t>(n));
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    auto add_edge = [&](VertexId u, VertexId v) {
        succ[u].push_back(v);
        ++indeg[v];
    };
    for (const auto& [u, v] : ctx.piN.generators()) add_edge(u, v);
    for (std::size_t i = 0; i + 1 < tau.ordering.size(); ++i)
        add_edge(tau.ordering[i], tau.ordering[i + 1]);

    using Key = std::pair<int, VertexId>; // (clique side last, id)
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.emplace(ctx.sp.in_clique(v) ? 1 : 0, v);
    std::vector<VertexId> rho_seq;
    rho_seq.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const VertexId v = ready.top().second;
        ready.pop();
        rho_seq.push_back(v);
        for (const VertexId w : succ[v])
            if (--indeg[w] == 0) ready.emplace(ctx.sp.in_clique(w) ? 1 : 0, w);
    }
    if (static_cast<int>(rho_seq.size()) != n)
        throw std::logic_error("split solve: tie-breaker merge deadlocked");

    Ordering sigma = run_plus_search(g, SearchKind::Lbfs, Ordering(std::move(rho_seq), n));
    if (!pi.is_linear_extension(sigma))
        throw std::logic_error("split solve produced a non-extending ordering");
    return SolveResult::found(std::move(sigma));
}

} // namespace pso
