#include "pso/io.hpp"

#include <istream>
#include <sstream>

namespace pso {

namespace {

/// Content lines as token vectors, comments and blanks stripped.
std::vector<std::vector<std::string>> tokenize(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(std::move(tok));
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

VertexId need_vertex(const Graph& g, const std::string& name) {
    if (const auto v = g.find_vertex(name)) return *v;
    throw ParseError("unknown vertex name: " + name);
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> ids;
    auto intern = [&](const std::string& s) {
        auto [it, fresh] = ids.try_emplace(s, static_cast<VertexId>(names.size()));
        if (fresh) names.push_back(s);
        return it->second;
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& tokens : tokenize(in)) {
        if (tokens.size() == 1) {
            intern(tokens[0]);
        } else if (tokens.size() == 2) {
            const int u = intern(tokens[0]);
            const int v = intern(tokens[1]);
            edges.emplace_back(u, v);
        } else {
            throw ParseError("graph line must name one vertex or one edge");
        }
    }
    const int n = static_cast<int>(names.size());
    return Graph::from_edges(n, edges, std::move(names));
}

std::string print_graph(const Graph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges())
        out += g.name(u) + " " + g.name(v) + "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out += g.name(v) + "\n";
    return out;
}

std::vector<std::pair<VertexId, VertexId>> parse_order_pairs(std::istream& in,
                                                             const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& tokens : tokenize(in)) {
        if (tokens.size() != 2)
            throw ParseError("order line must hold exactly two vertex names");
        pairs.emplace_back(need_vertex(g, tokens[0]), need_vertex(g, tokens[1]));
    }
    return pairs;
}

std::string print_order_pairs(
    const Graph& g, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::string out;
    for (const auto& [u, v] : pairs) out += g.name(u) + " " + g.name(v) + "\n";
    return out;
}

Ordering parse_ordering(std::istream& in, const Graph& g) {
    std::vector<VertexId> seq;
    for (const auto& tokens : tokenize(in))
        for (const auto& tok : tokens) seq.push_back(need_vertex(g, tok));
    try {
        return Ordering(std::move(seq), g.vertex_count());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string print_ordering(const Graph& g, const Ordering& o) {
    std::string out;
    for (int i = 0; i < o.size(); ++i) {
        if (i) out += " ";
        out += g.name(o.at(i));
    }
    out += "\n";
    return out;
}

RootedTree parse_tree(std::istream& in, const Graph& g) {
    const auto lines = tokenize(in);
    if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "root")
        throw ParseError("tree must start with a 'root <name>' line");
    RootedTree t;
    t.root = need_vertex(g, lines[0][1]);
    t.parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<char> has_parent(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].size() != 2)
            throw ParseError("tree line must hold a parent and a child name");
        const VertexId p = need_vertex(g, lines[i][0]);
        const VertexId c = need_vertex(g, lines[i][1]);
        if (c == t.root) throw ParseError("the root cannot have a parent");
        if (has_parent[c])
            throw ParseError("vertex has two parents: " + g.name(c));
        has_parent[c] = 1;
        t.parent[c] = p;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (v != t.root && !has_parent[v])
            throw ParseError("vertex has no parent: " + g.name(v));
    return t;
}

std::string print_tree(const Graph& g, const RootedTree& t) {
    std::string out = "root " + g.name(t.root) + "\n";
    for (VertexId v = 0; v < static_cast<VertexId>(t.parent.size()); ++v)
        if (v != t.root) out += g.name(t.parent[v]) + " " + g.name(v) + "\n";
    return out;
}

} // namespace pso
