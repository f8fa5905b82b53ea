// Brute-force reference implementations used only by the tests. They follow
// the definitions directly (explicit path enumeration, Floyd-Warshall, BFS
// from every node) and share no code with the library's algorithms.
#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "hsnet/graph.hpp"
#include "hsnet/rng.hpp"

namespace oracle {

using hsnet::Graph;
using hsnet::NodeId;

// Largest component by running an independent BFS from every single node and
// taking the maximum visited count.
inline NodeId largest_component(const Graph& g) {
    NodeId best = 0;
    for (NodeId start = 0; start < g.node_count(); ++start) {
        if (!g.is_active(start)) continue;
        std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
        std::vector<NodeId> stack{start};
        seen[static_cast<std::size_t>(start)] = 1;
        NodeId count = 0;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            ++count;
            for (NodeId w : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        best = std::max(best, count);
    }
    return best;
}

// All-pairs distances by Floyd-Warshall over active nodes; -1 = unreachable.
inline std::vector<std::vector<int>> all_distances(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.node_count());
    constexpr int kInf = std::numeric_limits<int>::max() / 4;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) {
        if (g.is_active(static_cast<NodeId>(i))) d[i][i] = 0;
    }
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    for (auto& row : d) {
        for (auto& x : row) {
            if (x >= kInf) x = -1;
        }
    }
    return d;
}

inline std::vector<double> closeness(const Graph& g) {
    const auto d = all_distances(g);
    std::vector<double> cc(static_cast<std::size_t>(g.node_count()), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!g.is_active(v)) continue;
        long long sum = 0;
        for (NodeId i = 0; i < g.node_count(); ++i) {
            if (i == v) continue;
            const int dist = d[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
            if (dist > 0) sum += dist;
        }
        if (sum > 0) cc[static_cast<std::size_t>(v)] = 1.0 / static_cast<double>(sum);
    }
    return cc;
}

inline std::vector<double> degree(const Graph& g) {
    std::vector<double> dc(static_cast<std::size_t>(g.node_count()), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.is_active(v)) dc[static_cast<std::size_t>(v)] = g.degree(v);
    }
    return dc;
}

namespace detail {

// Enumerates every simple path from s to t by depth-first search, keeping
// only those of minimal length, and counts how many pass through each node.
struct PathCensus {
    long long shortest_count = 0;
    int shortest_len = std::numeric_limits<int>::max();
    std::vector<long long> through;  // interior visits on shortest paths

    void walk(const Graph& g, NodeId current, NodeId target, std::vector<NodeId>& path,
              std::vector<char>& on_path) {
        if (current == target) {
            const int len = static_cast<int>(path.size()) - 1;
            if (len < shortest_len) {
                shortest_len = len;
                shortest_count = 0;
                std::fill(through.begin(), through.end(), 0);
            }
            if (len == shortest_len) {
                ++shortest_count;
                for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                    ++through[static_cast<std::size_t>(path[i])];
                }
            }
            return;
        }
        for (NodeId w : g.neighbors(current)) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            walk(g, w, target, path, on_path);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    }
};

}  // namespace detail

// Betweenness over ordered pairs normalized by (N-1)(N-2), straight from the
// definition. Exponential in the worst case; intended for n <= 8.
inline std::vector<double> betweenness(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
    const NodeId active = g.active_count();
    if (active <= 2) return bc;

    for (NodeId s = 0; s < n; ++s) {
        if (!g.is_active(s)) continue;
        for (NodeId t = 0; t < n; ++t) {
            if (t == s || !g.is_active(t)) continue;
            detail::PathCensus census;
            census.through.assign(static_cast<std::size_t>(n), 0);
            std::vector<NodeId> path{s};
            std::vector<char> on_path(static_cast<std::size_t>(n), 0);
            on_path[static_cast<std::size_t>(s)] = 1;
            census.walk(g, s, t, path, on_path);
            if (census.shortest_count == 0) continue;
            for (NodeId v = 0; v < n; ++v) {
                if (v == s || v == t) continue;
                bc[static_cast<std::size_t>(v)] +=
                    static_cast<double>(census.through[static_cast<std::size_t>(v)]) /
                    static_cast<double>(census.shortest_count);
            }
        }
    }
    const double norm =
        1.0 / (static_cast<double>(active - 1) * static_cast<double>(active - 2));
    for (double& x : bc) x *= norm;
    return bc;
}

// Seeded Erdos-Renyi style test-case source.
inline Graph random_graph(NodeId n, double p, std::uint64_t seed) {
    hsnet::Rng rng(seed);
    Graph g(n);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (rng.bernoulli(p)) g.add_edge(i, j);
        }
    }
    return g;
}

}  // namespace oracle
