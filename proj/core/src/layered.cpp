#include "hsnet/layered.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hsnet {

CouplingMatrix::CouplingMatrix(NodeId rows_, NodeId cols_) : rows(rows_), cols(cols_) {
    if (rows_ < 0 || cols_ < 0) throw std::invalid_argument("coupling dimensions must be non-negative");
    bits.assign(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), 0);
}

std::size_t CouplingMatrix::popcount() const {
    return std::accumulate(bits.begin(), bits.end(), std::size_t{0},
                           [](std::size_t acc, std::uint8_t b) { return acc + (b != 0); });
}

LayeredGraph compose_interdependent(const Graph& hw, const Graph& sw, const CouplingMatrix& b) {
    if (b.rows != hw.node_count() || b.cols != sw.node_count()) {
        throw std::invalid_argument("coupling block is " + std::to_string(b.rows) + "x" +
                                    std::to_string(b.cols) + " but layers have " +
                                    std::to_string(hw.node_count()) + " and " +
                                    std::to_string(sw.node_count()) + " nodes");
    }
    if (hw.active_count() != hw.node_count() || sw.active_count() != sw.node_count()) {
        throw std::invalid_argument("cannot compose graphs with removed nodes");
    }

    const NodeId nh = hw.node_count();
    const NodeId ns = sw.node_count();

    LayeredGraph out;
    out.hw_count = nh;
    out.sw_count = ns;
    out.graph = Graph(nh + ns);

    for (const auto& [u, v] : hw.edges()) out.graph.add_edge(u, v);
    for (const auto& [u, v] : sw.edges()) out.graph.add_edge(nh + u, nh + v);
    for (NodeId i = 0; i < nh; ++i) {
        for (NodeId j = 0; j < ns; ++j) {
            if (b.at(i, j)) out.graph.add_edge(i, nh + j);
        }
    }
    return out;
}

}  // namespace hsnet
