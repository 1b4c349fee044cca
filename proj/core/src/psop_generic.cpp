#include "pso/psop_generic.hpp"

#include <queue>
#include <stdexcept>

namespace pso {

SolveResult solve_psop_gs_rooted(const Graph& g, VertexId r, const PartialOrder& pi) {
    const int n = g.vertex_count();
    if (r < 0 || r >= n)
        throw std::invalid_argument("rooted solve: root out of range");
    if (pi.element_count() != n)
        throw std::invalid_argument("rooted solve: order and graph sizes differ");
    if (!pi.predecessors()[r].empty())
        return SolveResult::infeasible(
            "the root has an order-predecessor, so no extension can start there");

    SolveResult res;
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : pi.generators()) ++indeg[v];

    std::vector<char> marked(static_cast<std::size_t>(n), 0);
    std::vector<char> in_frontier(static_cast<std::size_t>(n), 0);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> frontier;
    auto offer = [&](VertexId v) {
        if (marked[v] && indeg[v] == 0 && !in_frontier[v]) {
            in_frontier[v] = 1;
            frontier.push(v);
        }
    };
    marked[r] = 1;
    offer(r);

    std::vector<VertexId> seq;
    seq.reserve(static_cast<std::size_t>(n));
    while (!frontier.empty()) {
        const VertexId v = frontier.top();
        frontier.pop();
        seq.push_back(v);
        for (const VertexId w : g.neighbors(v)) {
            ++res.stats.adjacency_scans;
            if (!marked[w]) {
                marked[w] = 1;
                offer(w);
            }
        }
        for (const VertexId y : pi.successors()[v]) {
            ++res.stats.order_scans;
            if (--indeg[y] == 0) offer(y);
        }
    }

    if (static_cast<int>(seq.size()) != n) {
        res.status = SolveStatus::Infeasible;
        res.reason =
            "stuck after " + std::to_string(seq.size()) +
            " vertices: every reachable vertex still has an unvisited order-predecessor";
        return res;
    }
    res.status = SolveStatus::Found;
    res.ordering = Ordering(std::move(seq), n);
    return res;
}

SolveResult solve_psop_unrooted(const Graph& g, const PartialOrder& pi,
                                const RootedSolver& rooted_solver) {
    SolveResult last;
    last.status = SolveStatus::Infeasible;
    last.reason = "no vertex is minimal in the order";
    for (const VertexId r : pi.minimal_elements()) {
        SolveResult res = rooted_solver(g, r, pi);
        if (res.status != SolveStatus::Infeasible) return res;
        last = std::move(res);
        last.reason = "no minimal vertex admits an ordering; last root failed with: " +
                      last.reason;
    }
    return last;
}

std::optional<PartialOrder> with_root_first(const PartialOrder& pi, VertexId r) {
    if (!pi.predecessors()[r].empty()) return std::nullopt;
    auto pairs = pi.generators();
    for (VertexId v = 0; v < pi.element_count(); ++v)
        if (v != r) pairs.emplace_back(r, v);
    // r has no predecessors, so the added source edges cannot close a cycle.
    return make_partial_order(pi.element_count(), std::move(pairs));
}

} // namespace pso
