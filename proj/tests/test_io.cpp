#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "pso/io.hpp"

using namespace pso;
using fixtures::ord_of;
using fixtures::vid;

namespace {

Graph parse_graph_str(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

/// Same named vertices and same named edge set, ids free to differ.
bool same_graph(const Graph& a, const Graph& b) {
    auto names = [](const Graph& g) {
        std::vector<std::string> out(g.names().begin(), g.names().end());
        std::sort(out.begin(), out.end());
        return out;
    };
    auto edges = [](const Graph& g) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [u, v] : g.edges()) {
            auto p = std::minmax(g.name(u), g.name(v));
            out.emplace_back(p.first, p.second);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return names(a) == names(b) && edges(a) == edges(b);
}

} // namespace

TEST_CASE("graph text form") {
    SUBCASE("comments, blanks and isolated vertices") {
        const auto g = parse_graph_str("# a path plus a loner\n"
                                       "a b\n"
                                       "\n"
                                       "b c  # tail edge\n"
                                       "d\n");
        CHECK(g.vertex_count() == 4);
        CHECK(g.adjacent(vid(g, "a"), vid(g, "b")));
        CHECK(g.adjacent(vid(g, "b"), vid(g, "c")));
        CHECK(g.degree(vid(g, "d")) == 0);
        CHECK(g.edges().size() == 2);
    }
    SUBCASE("print then parse preserves the structure") {
        for (const Graph& g : {fixtures::split7(), fixtures::ladder(),
                               parse_graph_str("a b\nc\nd\n")}) {
            std::istringstream round(print_graph(g));
            CHECK(same_graph(g, parse_graph(round)));
        }
    }
    SUBCASE("duplicate edges and loops are recorded, not errors") {
        const auto g = parse_graph_str("a b\nb a\nc c\nc a\n");
        CHECK(g.duplicate_edge_seen());
        CHECK(g.self_loop_seen());
        CHECK(g.edges().size() == 2);
    }
    SUBCASE("too many tokens on a line") {
        CHECK_THROWS_AS(parse_graph_str("a b c\n"), ParseError);
    }
}

TEST_CASE("order-pair text form") {
    const auto g = fixtures::split7();
    SUBCASE("round trip is exact") {
        const std::vector<std::pair<VertexId, VertexId>> pairs{
            {vid(g, "f"), vid(g, "e")}, {vid(g, "g"), vid(g, "d")}};
        const auto text = print_order_pairs(g, pairs);
        CHECK(text == "f e\ng d\n");
        std::istringstream in(text);
        CHECK(parse_order_pairs(in, g) == pairs);
    }
    SUBCASE("empty input is an empty relation") {
        std::istringstream in("# nothing here\n\n");
        CHECK(parse_order_pairs(in, g).empty());
    }
    SUBCASE("unknown names and bad arity are rejected") {
        std::istringstream bad1("f q\n");
        CHECK_THROWS_AS(parse_order_pairs(bad1, g), ParseError);
        std::istringstream bad2("f\n");
        CHECK_THROWS_AS(parse_order_pairs(bad2, g), ParseError);
    }
}

TEST_CASE("ordering text form") {
    const auto g = fixtures::split7();
    SUBCASE("round trip is exact") {
        const auto o = ord_of(g, {"f", "a", "b", "c", "e", "g", "d"});
        const auto text = print_ordering(g, o);
        CHECK(text == "f a b c e g d\n");
        std::istringstream in(text);
        CHECK(parse_ordering(in, g) == o);
    }
    SUBCASE("tokens may wrap across lines") {
        std::istringstream in("f a b\nc e g d\n");
        CHECK(parse_ordering(in, g) == ord_of(g, {"f", "a", "b", "c", "e", "g", "d"}));
    }
    SUBCASE("non-permutations are rejected") {
        std::istringstream dup("f a b c e g g\n");
        CHECK_THROWS_AS(parse_ordering(dup, g), ParseError);
        std::istringstream missing("f a b\n");
        CHECK_THROWS_AS(parse_ordering(missing, g), ParseError);
        std::istringstream unknown("f a b c e g q\n");
        CHECK_THROWS_AS(parse_ordering(unknown, g), ParseError);
    }
}

TEST_CASE("tree text form") {
    const auto g = fixtures::c4();
    SUBCASE("round trip is exact") {
        RootedTree t;
        t.root = vid(g, "v1");
        t.parent.assign(4, -1);
        t.parent[vid(g, "v2")] = vid(g, "v1");
        t.parent[vid(g, "v4")] = vid(g, "v1");
        t.parent[vid(g, "v3")] = vid(g, "v2");
        const auto text = print_tree(g, t);
        CHECK(text.starts_with("root v1\n"));
        std::istringstream in(text);
        CHECK(parse_tree(in, g) == t);
    }
    SUBCASE("malformed trees are rejected") {
        auto reject = [&](const std::string& text) {
            std::istringstream in(text);
            CHECK_THROWS_AS(parse_tree(in, g), ParseError);
        };
        reject("v1 v2\n");                              // no root line
        reject("root v1\nv2 v1\nv1 v3\nv3 v4\n");       // root given a parent
        reject("root v1\nv1 v2\nv3 v2\nv1 v4\n");       // two parents for v2
        reject("root v1\nv1 v2\nv2 v3\n");              // v4 unparented
        reject("root q\n");                             // unknown root
    }
}
