#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "hsnet/graph.hpp"

namespace hsnet {

enum class Layer : std::uint8_t { Hardware, Software };

/// Cross-layer adjacency block: bit (i, j) couples hardware node i with
/// software node j. The mirrored block on the other side of the diagonal is
/// implied by symmetry, so one rows x cols bitmap fully describes the
/// coupling.
struct CouplingMatrix {
    NodeId rows = 0;
    NodeId cols = 0;
    std::vector<std::uint8_t> bits;  ///< row-major, rows * cols entries

    CouplingMatrix() = default;
    CouplingMatrix(NodeId rows_, NodeId cols_);

    bool at(NodeId i, NodeId j) const { return bits[index(i, j)] != 0; }
    void set(NodeId i, NodeId j, bool value) { bits[index(i, j)] = value ? 1 : 0; }
    std::size_t popcount() const;

private:
    std::size_t index(NodeId i, NodeId j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
               static_cast<std::size_t>(j);
    }
};

/// Integrated hardware-software network. Hardware nodes occupy ids
/// [0, hw_count), software nodes [hw_count, hw_count + sw_count).
struct LayeredGraph {
    Graph graph;
    NodeId hw_count = 0;
    NodeId sw_count = 0;

    Layer layer_of(NodeId v) const {
        return v < hw_count ? Layer::Hardware : Layer::Software;
    }
    NodeId software_id(NodeId sw_local) const { return hw_count + sw_local; }
};

/// Glues a hardware graph, a software graph and a coupling block into one
/// network: hardware edges keep their ids, software edges are shifted by
/// hw_count, and each set coupling bit becomes one cross-layer edge.
/// Both inputs must be fully active (no removed nodes); the coupling block
/// must be hw.node_count() x sw.node_count().
LayeredGraph compose_interdependent(const Graph& hw, const Graph& sw, const CouplingMatrix& b);

}  // namespace hsnet
