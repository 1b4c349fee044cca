#include "pso/ordering.hpp"

namespace pso {

Ordering::Ordering(std::vector<VertexId> seq, int n) : seq_(std::move(seq)) {
    if (static_cast<int>(seq_.size()) != n)
        throw std::invalid_argument("ordering: length does not match vertex count");
    pos_.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const VertexId v = seq_[i];
        if (v < 0 || v >= n || pos_[v] != -1)
            throw std::invalid_argument("ordering: not a permutation of the vertices");
        pos_[v] = i;
    }
}

} // namespace pso
