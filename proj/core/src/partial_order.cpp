#include "pso/partial_order.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace pso {

std::variant<PartialOrder, CycleError> PartialOrder::build(
    int n, std::vector<std::pair<VertexId, VertexId>> generators) {
    if (n < 0) throw std::invalid_argument("partial order: negative element count");
    PartialOrder po;
    po.n_ = n;

    for (const auto& [u, v] : generators)
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("partial order: pair endpoint out of range");
    std::erase_if(generators, [&](const auto& p) {
        if (p.first == p.second) {
            ++po.reflexive_dropped_;
            return true;
        }
        return false;
    });
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    po.generators_ = std::move(generators);

    po.succ_.assign(static_cast<std::size_t>(n), {});
    po.pred_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : po.generators_) {
        po.succ_[u].push_back(v);
        po.pred_[v].push_back(u);
    }
    for (auto& row : po.pred_) std::sort(row.begin(), row.end());

    // Kahn pass: counts down in-degrees; leftovers witness a cycle.
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : po.generators_) ++indeg[v];
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    int processed = 0;
    while (!ready.empty()) {
        const VertexId u = ready.back();
        ready.pop_back();
        ++processed;
        for (const VertexId v : po.succ_[u])
            if (--indeg[v] == 0) ready.push_back(v);
    }
    if (processed != n) {
        // Every leftover vertex has a leftover predecessor; walking those
        // until a repeat closes a cycle.
        VertexId v = 0;
        while (indeg[v] == 0) ++v;
        std::vector<int> visit_at(static_cast<std::size_t>(n), -1);
        std::vector<VertexId> path;
        while (visit_at[v] < 0) {
            visit_at[v] = static_cast<int>(path.size());
            path.push_back(v);
            for (const VertexId p : po.pred_[v])
                if (indeg[p] > 0) {
                    v = p;
                    break;
                }
        }
        CycleError err;
        err.cycle.assign(path.begin() + visit_at[v], path.end());
        std::reverse(err.cycle.begin(), err.cycle.end());
        err.cycle.push_back(err.cycle.front());
        return err;
    }

    if (n <= kClosureCap) {
        // Reverse topological DP: row(u) = union over successors v of
        // row(v) plus v itself.
        std::vector<VertexId> topo;
        topo.reserve(static_cast<std::size_t>(n));
        indeg.assign(static_cast<std::size_t>(n), 0);
        for (const auto& [u, v] : po.generators_) ++indeg[v];
        for (VertexId v = 0; v < n; ++v)
            if (indeg[v] == 0) ready.push_back(v);
        while (!ready.empty()) {
            const VertexId u = ready.back();
            ready.pop_back();
            topo.push_back(u);
            for (const VertexId v : po.succ_[u])
                if (--indeg[v] == 0) ready.push_back(v);
        }
        po.closure_.assign(static_cast<std::size_t>(n),
                           DynamicBitset(static_cast<std::size_t>(n)));
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            const VertexId u = *it;
            for (const VertexId v : po.succ_[u]) {
                po.closure_[u] |= po.closure_[v];
                po.closure_[u].set(static_cast<std::size_t>(v));
            }
        }
    }
    return po;
}

bool PartialOrder::reaches_dfs(VertexId u, VertexId v) const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<VertexId> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (const VertexId y : succ_[x]) {
            if (y == v) return true;
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return false;
}

bool PartialOrder::precedes(VertexId u, VertexId v) const {
    if (u == v) return false;
    if (!closure_.empty()) return closure_[u].test(static_cast<std::size_t>(v));
    return reaches_dfs(u, v);
}

std::vector<std::pair<VertexId, VertexId>> PartialOrder::strict_closure_pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    if (!closure_.empty()) {
        for (VertexId u = 0; u < n_; ++u)
            closure_[u].for_each([&](std::size_t v) {
                out.emplace_back(u, static_cast<VertexId>(v));
            });
        return out;
    }
    for (VertexId u = 0; u < n_; ++u) {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<VertexId> stack{u};
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (const VertexId y : succ_[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        for (VertexId v = 0; v < n_; ++v)
            if (seen[v]) out.emplace_back(u, v);
    }
    return out;
}

std::vector<VertexId> PartialOrder::minimal_elements() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n_; ++v)
        if (pred_[v].empty()) out.push_back(v);
    return out;
}

bool PartialOrder::is_linear_extension(const Ordering& ord) const {
    if (ord.size() != n_) return false;
    for (const auto& [u, v] : generators_)
        if (!ord.before(u, v)) return false;
    return true;
}

Ordering PartialOrder::topological_order() const {
    std::vector<int> indeg(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : generators_) ++indeg[v];
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n_; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<VertexId> seq;
    seq.reserve(static_cast<std::size_t>(n_));
    while (!ready.empty()) {
        const VertexId u = ready.top();
        ready.pop();
        seq.push_back(u);
        for (const VertexId v : succ_[u])
            if (--indeg[v] == 0) ready.push(v);
    }
    return Ordering(std::move(seq), n_);
}

PartialOrder make_partial_order(
    int n, std::vector<std::pair<VertexId, VertexId>> generators) {
    auto built = PartialOrder::build(n, std::move(generators));
    if (auto* err = std::get_if<CycleError>(&built)) {
        std::string msg = "partial order: generators contain a cycle:";
        for (const VertexId v : err->cycle) msg += " " + std::to_string(v);
        throw std::invalid_argument(msg);
    }
    return std::get<PartialOrder>(std::move(built));
}

} // namespace pso
