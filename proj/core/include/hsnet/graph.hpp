#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hsnet {

using NodeId = std::int32_t;

/// Undirected simple graph over dense integer ids [0, n).
///
/// Node removal tombstones the id instead of renumbering, so removal
/// sequences recorded during an attack always refer to the original ids.
/// Adjacency lists of active nodes only ever contain active neighbors.
class Graph {
public:
    Graph() = default;
    explicit Graph(NodeId n);

    /// Builds a graph from an edge list. Self-loops are dropped and duplicate
    /// edges collapse to one. Throws std::invalid_argument if an endpoint is
    /// outside [0, n).
    static Graph from_edge_list(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges);

    /// Size of the id space, removed nodes included.
    NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
    /// Number of nodes not yet removed.
    NodeId active_count() const { return active_count_; }
    std::size_t edge_count() const { return edge_count_; }

    bool is_active(NodeId v) const;
    NodeId degree(NodeId v) const;
    const std::vector<NodeId>& neighbors(NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;

    /// Adds an undirected edge. Self-loops and duplicates are ignored.
    /// Both endpoints must be active.
    void add_edge(NodeId u, NodeId v);

    /// Removes v and every incident edge. The id stays reserved (no
    /// renumbering). Throws std::invalid_argument if v is out of range or
    /// already removed.
    void remove_node(NodeId v);

    /// All edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    /// Size of the largest connected component; 0 for a graph with no
    /// active nodes, 1 if only isolated nodes remain.
    NodeId largest_component_size() const;

    struct Components {
        std::vector<NodeId> label;  ///< per id; -1 for removed nodes
        std::vector<NodeId> size;   ///< indexed by component label
        NodeId largest = 0;
    };
    Components components() const;

private:
    void check_in_range(NodeId v) const;

    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::uint8_t> active_;
    NodeId active_count_ = 0;
    std::size_t edge_count_ = 0;
};

}  // namespace hsnet
