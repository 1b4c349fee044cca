#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pso/graph.hpp"
#include "pso/ordering.hpp"
#include "pso/reductions.hpp"

namespace pso {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text formats. All are line-oriented; '#' starts a comment, blank lines are
/// ignored, names are arbitrary non-whitespace tokens.
///   graph:    one edge "u v" per line (a lone name declares an isolated
///             vertex); vertex ids by first appearance
///   order:    one pair "u v" per line, meaning u before v
///   tree:     first line "root r", then one "parent child" line per edge
///   ordering: all vertex names on a single line

Graph parse_graph(std::istream& in);
std::string print_graph(const Graph& g);

std::vector<std::pair<VertexId, VertexId>> parse_order_pairs(std::istream& in,
                                                             const Graph& g);
std::string print_order_pairs(const Graph& g,
                              const std::vector<std::pair<VertexId, VertexId>>& pairs);

Ordering parse_ordering(std::istream& in, const Graph& g);
std::string print_ordering(const Graph& g, const Ordering& o);

RootedTree parse_tree(std::istream& in, const Graph& g);
std::string print_tree(const Graph& g, const RootedTree& t);

} // namespace pso
