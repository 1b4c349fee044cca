#include "pso/oba.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace pso {

ObaInstance ObaInstance::over(std::vector<int> ground_elements) {
    ObaInstance inst;
    std::sort(ground_elements.begin(), ground_elements.end());
    ground_elements.erase(
        std::unique(ground_elements.begin(), ground_elements.end()),
        ground_elements.end());
    inst.ground = std::move(ground_elements);
    return inst;
}

int ObaInstance::add_set(std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (const int x : elements)
        if (!std::binary_search(ground.begin(), ground.end(), x))
            throw std::invalid_argument("one-before-all: set element outside the ground set");
    family.push_back(std::move(elements));
    return static_cast<int>(family.size()) - 1;
}

void ObaInstance::add_tuple(int left, int right) {
    const int m = static_cast<int>(family.size());
    if (left < 0 || left >= m || right < 0 || right >= m)
        throw std::invalid_argument("one-before-all: tuple refers to a missing set");
    relation.emplace_back(left, right);
}

ObaResult solve_oba(const ObaInstance& inst) {
    const int n = static_cast<int>(inst.ground.size());
    const int m = static_cast<int>(inst.family.size());
    std::unordered_map<int, int> dense;
    dense.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dense.emplace(inst.ground[i], i);

    // r[B] = unsatisfied tuples whose right side is B; t[x] = sets containing
    // x with r > 0. While r[B] > 0 every member of B has t > 0, so placing an
    // element with t = 0 puts it before all of every pending right side it
    // belongs to; retiring its sets is therefore safe (their tuples are now
    // satisfied).
    std::vector<int> r(static_cast<std::size_t>(m), 0);
    std::vector<std::vector<int>> out_tuples(static_cast<std::size_t>(m));
    for (const auto& [a, b] : inst.relation) {
        ++r[b];
        out_tuples[a].push_back(b);
    }
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> member_sets(static_cast<std::size_t>(n));
    for (int s = 0; s < m; ++s)
        for (const int x : inst.family[s]) member_sets[dense.at(x)].push_back(s);
    for (int s = 0; s < m; ++s)
        if (r[s] > 0)
            for (const int x : inst.family[s]) ++t[dense.at(x)];

    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    std::vector<char> queued(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        if (t[i] == 0) {
            ready.push(inst.ground[i]);
            queued[i] = 1;
        }

    std::vector<char> retired(static_cast<std::size_t>(m), 0);
    ObaResult res;
    res.ordering.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const int x = ready.top();
        ready.pop();
        res.ordering.push_back(x);
        for (const int s : member_sets[dense.at(x)]) {
            if (retired[s]) continue;
            retired[s] = 1;
            for (const int b : out_tuples[s]) {
                if (--r[b] == 0)
                    for (const int y : inst.family[b]) {
                        const int yi = dense.at(y);
                        if (--t[yi] == 0 && !queued[yi]) {
                            ready.push(y);
                            queued[yi] = 1;
                        }
                    }
            }
        }
    }
    res.found = static_cast<int>(res.ordering.size()) == n;
    if (!res.found)
        for (int i = 0; i < n; ++i)
            if (!queued[i]) res.stuck_elements.push_back(inst.ground[i]);
    return res;
}

bool check_oba(const ObaInstance& inst, std::span<const int> ordering) {
    const int n = static_cast<int>(inst.ground.size());
    if (static_cast<int>(ordering.size()) != n) return false;
    std::unordered_map<int, int> pos;
    pos.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto [it, fresh] = pos.emplace(ordering[i], i);
        if (!fresh) return false;
    }
    for (const int x : inst.ground)
        if (!pos.contains(x)) return false;
    for (const auto& [a, b] : inst.relation) {
        int first_b = n;
        for (const int y : inst.family[b]) first_b = std::min(first_b, pos.at(y));
        if (first_b == n) continue; // empty right side holds vacuously
        bool witnessed = false;
        for (const int x : inst.family[a])
            if (pos.at(x) < first_b) {
                witnessed = true;
                break;
            }
        if (!witnessed) return false;
    }
    return true;
}

ObaInstance encode_partial_order_as_oba(const PartialOrder& po) {
    std::vector<int> ground(static_cast<std::size_t>(po.element_count()));
    for (int i = 0; i < po.element_count(); ++i) ground[i] = i;
    ObaInstance inst = ObaInstance::over(std::move(ground));
    std::vector<int> singleton(static_cast<std::size_t>(po.element_count()), -1);
    auto single = [&](VertexId v) {
        if (singleton[v] < 0) singleton[v] = inst.add_set({v});
        return singleton[v];
    };
    for (const auto& [u, v] : po.generators())
        inst.add_tuple(single(u), single(v));
    return inst;
}

} // namespace pso
