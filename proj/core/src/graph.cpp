#include "hsnet/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hsnet {

Graph::Graph(NodeId n) {
    if (n < 0) throw std::invalid_argument("node count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
    active_.assign(static_cast<std::size_t>(n), 1);
    active_count_ = n;
}

Graph Graph::from_edge_list(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ") with n=" + std::to_string(n));
        }
        g.add_edge(u, v);
    }
    return g;
}

void Graph::check_in_range(NodeId v) const {
    if (v < 0 || v >= node_count()) {
        throw std::invalid_argument("node id out of range: " + std::to_string(v));
    }
}

bool Graph::is_active(NodeId v) const {
    check_in_range(v);
    return active_[static_cast<std::size_t>(v)] != 0;
}

NodeId Graph::degree(NodeId v) const {
    check_in_range(v);
    return static_cast<NodeId>(adj_[static_cast<std::size_t>(v)].size());
}

const std::vector<NodeId>& Graph::neighbors(NodeId v) const {
    check_in_range(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_in_range(u);
    check_in_range(v);
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    const auto& nv = adj_[static_cast<std::size_t>(v)];
    const auto& shorter = nu.size() <= nv.size() ? nu : nv;
    const NodeId target = nu.size() <= nv.size() ? v : u;
    return std::find(shorter.begin(), shorter.end(), target) != shorter.end();
}

void Graph::add_edge(NodeId u, NodeId v) {
    check_in_range(u);
    check_in_range(v);
    if (!active_[static_cast<std::size_t>(u)] || !active_[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("cannot add an edge to a removed node");
    }
    if (u == v) return;
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    ++edge_count_;
}

void Graph::remove_node(NodeId v) {
    check_in_range(v);
    auto& flag = active_[static_cast<std::size_t>(v)];
    if (!flag) throw std::invalid_argument("node already removed: " + std::to_string(v));
    auto& nbrs = adj_[static_cast<std::size_t>(v)];
    for (NodeId w : nbrs) {
        auto& back = adj_[static_cast<std::size_t>(w)];
        back.erase(std::find(back.begin(), back.end(), v));
    }
    edge_count_ -= nbrs.size();
    nbrs.clear();
    nbrs.shrink_to_fit();
    flag = 0;
    --active_count_;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < node_count(); ++u) {
        for (NodeId v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph::Components Graph::components() const {
    Components c;
    c.label.assign(adj_.size(), -1);
    std::vector<NodeId> queue;
    queue.reserve(adj_.size());
    for (NodeId start = 0; start < node_count(); ++start) {
        if (!active_[static_cast<std::size_t>(start)] || c.label[static_cast<std::size_t>(start)] >= 0) {
            continue;
        }
        const NodeId comp = static_cast<NodeId>(c.size.size());
        NodeId count = 0;
        queue.clear();
        queue.push_back(start);
        c.label[static_cast<std::size_t>(start)] = comp;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            NodeId u = queue[head];
            ++count;
            for (NodeId w : adj_[static_cast<std::size_t>(u)]) {
                auto& lw = c.label[static_cast<std::size_t>(w)];
                if (lw < 0) {
                    lw = comp;
                    queue.push_back(w);
                }
            }
        }
        c.size.push_back(count);
        c.largest = std::max(c.largest, count);
    }
    return c;
}

NodeId Graph::largest_component_size() const {
    return components().largest;
}

}  // namespace hsnet
