#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <vector>

#include "fixtures.hpp"
#include "pso/generate.hpp"
#include "pso/graph.hpp"

using namespace pso;
using fixtures::vid;

namespace {

std::vector<std::string> layer_names(const Graph& g,
                                     const std::vector<VertexId>& layer) {
    std::vector<std::string> out;
    for (VertexId v : layer) out.push_back(g.name(v));
    std::sort(out.begin(), out.end());
    return out;
}

/// Distance-layer comparability: vertices of a common layer that share a
/// neighbor one layer further out have inclusion-comparable neighborhoods in
/// the layer before them. Holds on every chordal bipartite graph.
bool layer_comparability_holds(const Graph& g) {
    const int n = g.vertex_count();
    for (VertexId r = 0; r < n; ++r) {
        const auto lay = bfs_layering(g, r);
        for (int i = 1; i + 1 <= lay.max_layer(); ++i) {
            DynamicBitset below(n);
            if (i >= 1)
                for (VertexId v : lay.layers[i - 1]) below.set(v);
            const auto& here = lay.layers[i];
            for (std::size_t xi = 0; xi < here.size(); ++xi) {
                for (std::size_t yi = xi + 1; yi < here.size(); ++yi) {
                    const VertexId x = here[xi], y = here[yi];
                    bool share_above = false;
                    for (VertexId w : g.neighbors(x))
                        if (lay.layer_of[w] == i + 1 && g.adjacent(y, w))
                            share_above = true;
                    if (!share_above) continue;
                    auto nx = g.neighborhood_mask(x);
                    nx &= below;
                    auto ny = g.neighborhood_mask(y);
                    ny &= below;
                    if (!nx.is_subset_of(ny) && !ny.is_subset_of(nx))
                        return false;
                }
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("graph ids follow first appearance") {
    const auto g = Graph::from_edge_list({{"b", "a"}, {"b", "c"}, {"a", "c"}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.names() == std::vector<std::string>{"b", "a", "c"});
    CHECK(g.find_vertex("a") == VertexId{1});
    CHECK(g.find_vertex("missing") == std::nullopt);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("adjacency is symmetric, sorted and loop-aware") {
    const auto g = fixtures::split7();
    CHECK(g.degree(vid(g, "c")) == 4);
    CHECK(g.adjacent(vid(g, "a"), vid(g, "f")));
    CHECK(g.adjacent(vid(g, "f"), vid(g, "a")));
    CHECK_FALSE(g.adjacent(vid(g, "f"), vid(g, "g")));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        for (VertexId w : nb) CHECK(g.adjacent(w, v));
    }

    auto mask = g.neighborhood_mask(vid(g, "d"));
    CHECK(mask.to_vector() ==
          std::vector<int>{vid(g, "a"), vid(g, "c")});

    const auto edges = g.edges();
    CHECK(edges.size() == 9);
    for (auto [u, v] : edges) CHECK(u < v);
}

TEST_CASE("validate_graph flags loops, duplicates and disconnection") {
    CHECK(validate_graph(fixtures::split7()).ok());

    const auto loop = Graph::from_edge_list({{"a", "a"}, {"a", "b"}});
    const auto vl = validate_graph(loop);
    CHECK_FALSE(vl.loop_free);
    CHECK_FALSE(vl.ok());
    CHECK_FALSE(vl.summary().empty());

    const auto dup = Graph::from_edge_list({{"a", "b"}, {"b", "a"}});
    CHECK(dup.duplicate_edge_seen());
    CHECK_FALSE(validate_graph(dup).simple);

    const auto disc = Graph::from_edge_list({{"a", "b"}, {"c", "d"}});
    const auto vd = validate_graph(disc);
    CHECK(vd.loop_free);
    CHECK_FALSE(vd.connected);
    CHECK_FALSE(vd.ok());
}

TEST_CASE("bfs layering groups by distance") {
    SUBCASE("4-cycle") {
        const auto g = fixtures::c4();
        const auto lay = bfs_layering(g, vid(g, "v1"));
        REQUIRE(lay.max_layer() == 2);
        CHECK(layer_names(g, lay.layers[0]) == std::vector<std::string>{"v1"});
        CHECK(layer_names(g, lay.layers[1]) ==
              std::vector<std::string>{"v2", "v4"});
        CHECK(layer_names(g, lay.layers[2]) == std::vector<std::string>{"v3"});
    }
    SUBCASE("ladder") {
        const auto g = fixtures::ladder();
        const auto lay = bfs_layering(g, vid(g, "r"));
        REQUIRE(lay.max_layer() == 2);
        CHECK(layer_names(g, lay.layers[1]) ==
              std::vector<std::string>{"u1", "u2"});
        CHECK(layer_names(g, lay.layers[2]) ==
              std::vector<std::string>{"w1", "w2"});
    }
    SUBCASE("split fixture rooted at a pendant") {
        const auto g = fixtures::split7();
        const auto lay = bfs_layering(g, vid(g, "f"));
        REQUIRE(lay.max_layer() == 3);
        CHECK(layer_names(g, lay.layers[1]) == std::vector<std::string>{"a"});
        CHECK(layer_names(g, lay.layers[2]) ==
              std::vector<std::string>{"b", "c", "d"});
        CHECK(layer_names(g, lay.layers[3]) ==
              std::vector<std::string>{"e", "g"});
    }
    SUBCASE("unreachable vertex throws") {
        const auto disc = Graph::from_edge_list({{"a", "b"}, {"c", "d"}});
        CHECK_THROWS_AS(bfs_layering(disc, 0), DisconnectedGraphError);
    }
    SUBCASE("edges never skip a layer") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto g = random_connected_graph(9, 0.3, seed);
            for (VertexId r = 0; r < g.vertex_count(); ++r) {
                const auto lay = bfs_layering(g, r);
                for (auto [u, v] : g.edges())
                    CHECK(std::abs(lay.layer_of[u] - lay.layer_of[v]) <= 1);
            }
        }
    }
}

TEST_CASE("split partition recognition") {
    SUBCASE("split fixture") {
        const auto g = fixtures::split7();
        const auto sp = find_split_partition(g);
        REQUIRE(sp.has_value());
        CHECK(verify_split_partition(g, *sp));
        CHECK(layer_names(g, sp->clique) ==
              std::vector<std::string>{"a", "b", "c"});
        CHECK(layer_names(g, sp->independent) ==
              std::vector<std::string>{"d", "e", "f", "g"});
        CHECK(sp->in_clique(vid(g, "a")));
        CHECK_FALSE(sp->in_clique(vid(g, "d")));
        CHECK(sp->clique_mask(g.vertex_count()).count() == 3);
    }
    SUBCASE("4-cycle is not split") {
        CHECK_FALSE(find_split_partition(fixtures::c4()).has_value());
    }
    SUBCASE("single edge prefers the independent side") {
        const auto g = fixtures::single_edge();
        const auto sp = find_split_partition(g);
        REQUIRE(sp.has_value());
        CHECK(sp->clique == std::vector<VertexId>{vid(g, "a")});
        CHECK(sp->independent == std::vector<VertexId>{vid(g, "b")});
        CHECK(sp->boundary_moved == vid(g, "b"));
    }
    SUBCASE("verify rejects a wrong partition") {
        const auto g = fixtures::p3();
        SplitPartition bad;
        bad.clique = {vid(g, "a"), vid(g, "c")}; // nonadjacent
        bad.independent = {vid(g, "b")};
        CHECK_FALSE(verify_split_partition(g, bad));
    }
    SUBCASE("random split graphs are recognized and verified") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const auto g = random_split_graph(3 + static_cast<int>(seed % 7), seed);
            const auto sp = find_split_partition(g);
            REQUIRE(sp.has_value());
            CHECK(verify_split_partition(g, *sp));
        }
    }
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(fixtures::c4()));
    CHECK(is_bipartite(fixtures::ladder()));
    CHECK(is_bipartite(fixtures::p3()));
    CHECK_FALSE(is_bipartite(fixtures::triangle()));
    CHECK_FALSE(is_bipartite(fixtures::split7()));
}

TEST_CASE("chordal bipartite check") {
    CHECK(check_chordal_bipartite(fixtures::c4()) == ClassCheck::Yes);
    CHECK(check_chordal_bipartite(fixtures::c6()) == ClassCheck::No);
    CHECK(check_chordal_bipartite(fixtures::ladder()) == ClassCheck::Yes);
    CHECK(check_chordal_bipartite(fixtures::triangle()) == ClassCheck::No);

    SUBCASE("size cap reports too-large instead of guessing") {
        std::vector<std::pair<int, int>> path_edges;
        for (int i = 0; i + 1 < 17; ++i) path_edges.emplace_back(i, i + 1);
        const auto path17 = Graph::from_edges(17, path_edges);
        CHECK(check_chordal_bipartite(path17) == ClassCheck::TooLarge);
        CHECK(check_chordal_bipartite(path17, 20) == ClassCheck::Yes);
    }

    SUBCASE("eight-cycle with one chord still has an induced six-cycle") {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
        edges.emplace_back(0, 3); // leaves 0-3-4-5-6-7 induced
        CHECK(check_chordal_bipartite(Graph::from_edges(8, edges)) ==
              ClassCheck::No);
    }
}

TEST_CASE("layer comparability on chordal bipartite fixtures") {
    CHECK(layer_comparability_holds(fixtures::c4()));
    CHECK(layer_comparability_holds(fixtures::ladder()));
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const auto g = random_chordal_bipartite_graph(8, seed);
        REQUIRE(check_chordal_bipartite(g) == ClassCheck::Yes);
        CHECK(layer_comparability_holds(g));
    }
}
