#pragma once

// Shared graph fixtures and small helpers for the test suite. All fixtures
// use named vertices so ids follow first appearance and stay stable.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pso/graph.hpp"
#include "pso/ordering.hpp"
#include "pso/partial_order.hpp"

namespace fixtures {

inline pso::Graph named(std::vector<std::string> names,
                        const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(names.size());
    return pso::Graph::from_edges(n, edges, std::move(names));
}

/// Path a - b - c.
inline pso::Graph p3() { return named({"a", "b", "c"}, {{0, 1}, {1, 2}}); }

/// Triangle a, b, c.
inline pso::Graph triangle() {
    return named({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
}

/// Single edge a - b.
inline pso::Graph single_edge() { return named({"a", "b"}, {{0, 1}}); }

/// Star with center s and leaves x, y, z.
inline pso::Graph star() {
    return named({"s", "x", "y", "z"}, {{0, 1}, {0, 2}, {0, 3}});
}

/// Cycle v1 v2 v3 v4.
inline pso::Graph c4() {
    return named({"v1", "v2", "v3", "v4"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

/// Cycle v1 .. v6.
inline pso::Graph c6() {
    return named({"v1", "v2", "v3", "v4", "v5", "v6"},
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

/// Bipartite fixture: root r over u1, u2 over w1, w2 with
/// r-u1, r-u2, u1-w1, u1-w2, u2-w2.
inline pso::Graph ladder() {
    return named({"r", "u1", "u2", "w1", "w2"},
                 {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}});
}

/// Seven-vertex split graph: triangle a, b, c; d sees a and c; e sees b and
/// c; f sees a; g sees b. Clique {a,b,c}, independent {d,e,f,g}.
inline pso::Graph split7() {
    return named({"a", "b", "c", "d", "e", "f", "g"},
                 {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 3}, {1, 4}, {2, 4},
                  {0, 5}, {1, 6}});
}

/// The companion order for split7: f before e, g before d.
inline pso::PartialOrder split7_order(const pso::Graph& g) {
    return pso::make_partial_order(g.vertex_count(), {{5, 4}, {6, 3}});
}

inline pso::VertexId vid(const pso::Graph& g, const std::string& name) {
    return g.find_vertex(name).value();
}

inline pso::Ordering ord_of(const pso::Graph& g,
                            const std::vector<std::string>& names) {
    std::vector<pso::VertexId> seq;
    seq.reserve(names.size());
    for (const auto& name : names) seq.push_back(vid(g, name));
    return pso::Ordering(std::move(seq), g.vertex_count());
}

inline std::string names_join(const pso::Graph& g, const pso::Ordering& o) {
    std::string s;
    for (int i = 0; i < o.size(); ++i) {
        if (i) s += ' ';
        s += g.name(o.at(i));
    }
    return s;
}

inline pso::PartialOrder order_of(
    const pso::Graph& g,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::pair<pso::VertexId, pso::VertexId>> ids;
    ids.reserve(pairs.size());
    for (const auto& [u, v] : pairs) ids.emplace_back(vid(g, u), vid(g, v));
    return pso::make_partial_order(g.vertex_count(), std::move(ids));
}

/// Calls fn with every permutation of 0..n-1 as an Ordering over n elements.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<pso::VertexId> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    do {
        fn(pso::Ordering(seq, n));
    } while (std::next_permutation(seq.begin(), seq.end()));
}

/// Scratch directory that cleans up after itself; used by the io/cli tests.
class TempDir {
public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0;; ++i) {
            auto candidate = base / ("pso-test-" + std::to_string(counter_++) +
                                     "-" + std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string write(const std::string& name, const std::string& content) const {
        auto p = path_ / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
    std::string path(const std::string& name) const {
        return (path_ / name).string();
    }

private:
    static inline std::uint64_t counter_ = 0;
    std::filesystem::path path_;
};

} // namespace fixtures
