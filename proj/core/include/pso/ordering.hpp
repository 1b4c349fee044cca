#pragma once

#include <stdexcept>
#include <vector>

#include "pso/graph.hpp"

namespace pso {

/// A permutation of all vertices of a graph, with O(1) position lookup.
/// Invariant: pos[seq[i]] == i for every i.
class Ordering {
public:
    Ordering() = default;

    /// Throws std::invalid_argument unless seq is a permutation of 0..n-1.
    Ordering(std::vector<VertexId> seq, int n);

    int size() const { return static_cast<int>(seq_.size()); }
    VertexId at(int i) const { return seq_[i]; }
    int position(VertexId v) const { return pos_[v]; }
    bool before(VertexId u, VertexId v) const { return pos_[u] < pos_[v]; }

    const std::vector<VertexId>& sequence() const { return seq_; }

    bool operator==(const Ordering&) const = default;

private:
    std::vector<VertexId> seq_;
    std::vector<int> pos_;
};

} // namespace pso
