#include "hsnet/centrality.hpp"

#include <algorithm>
#include <cstddef>

namespace hsnet {

namespace {

// Dense CSR copy of the active subgraph. Attacks recompute centralities on a
// shrinking residual graph hundreds of times, so the kernels below run on
// renumbered contiguous arrays instead of the tombstoned adjacency lists.
// Dense ids follow ascending original ids, which keeps every accumulation
// order (and therefore every floating-point sum) identical to a run over the
// original ids.
struct DenseView {
    std::vector<NodeId> old_id;          // dense -> original
    std::vector<std::int32_t> offset;    // dense CSR offsets
    std::vector<NodeId> targets;         // dense neighbor ids
    std::vector<NodeId> comp_size_of;    // per dense node: size of its component

    explicit DenseView(const Graph& g) {
        const NodeId n = g.node_count();
        std::vector<NodeId> new_id(static_cast<std::size_t>(n), -1);
        old_id.reserve(static_cast<std::size_t>(g.active_count()));
        for (NodeId v = 0; v < n; ++v) {
            if (g.is_active(v)) {
                new_id[static_cast<std::size_t>(v)] = static_cast<NodeId>(old_id.size());
                old_id.push_back(v);
            }
        }
        const std::size_t na = old_id.size();
        offset.assign(na + 1, 0);
        targets.reserve(2 * g.edge_count());
        for (std::size_t i = 0; i < na; ++i) {
            for (NodeId w : g.neighbors(old_id[i])) {
                targets.push_back(new_id[static_cast<std::size_t>(w)]);
            }
            offset[i + 1] = static_cast<std::int32_t>(targets.size());
        }

        // connected components over the dense graph
        comp_size_of.assign(na, 0);
        std::vector<NodeId> comp(na, -1);
        std::vector<NodeId> queue;
        queue.reserve(na);
        std::vector<NodeId> sizes;
        for (std::size_t start = 0; start < na; ++start) {
            if (comp[start] >= 0) continue;
            const NodeId label = static_cast<NodeId>(sizes.size());
            comp[start] = label;
            queue.clear();
            queue.push_back(static_cast<NodeId>(start));
            NodeId count = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const NodeId u = queue[head];
                ++count;
                for (std::int32_t e = offset[static_cast<std::size_t>(u)];
                     e < offset[static_cast<std::size_t>(u) + 1]; ++e) {
                    const NodeId w = targets[static_cast<std::size_t>(e)];
                    if (comp[static_cast<std::size_t>(w)] < 0) {
                        comp[static_cast<std::size_t>(w)] = label;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push_back(count);
        }
        for (std::size_t i = 0; i < na; ++i) {
            comp_size_of[i] = sizes[static_cast<std::size_t>(comp[i])];
        }
    }

    std::size_t size() const { return old_id.size(); }
    NodeId degree(std::size_t v) const { return offset[v + 1] - offset[v]; }
};

}  // namespace

CentralityScores degree_centrality(const Graph& g) {
    CentralityScores s{CentralityMeasure::Degree,
                       std::vector<double>(static_cast<std::size_t>(g.node_count()), 0.0)};
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.is_active(v)) s.values[static_cast<std::size_t>(v)] = g.degree(v);
    }
    return s;
}

CentralityScores betweenness_centrality(const Graph& g) {
    CentralityScores s{CentralityMeasure::Betweenness,
                       std::vector<double>(static_cast<std::size_t>(g.node_count()), 0.0)};
    const NodeId n_active = g.active_count();
    if (n_active <= 2) return s;

    const DenseView view(g);
    const std::size_t na = view.size();

    std::vector<std::int32_t> dist(na);
    std::vector<double> sigma(na);
    std::vector<double> delta(na);
    std::vector<double> bc(na, 0.0);
    std::vector<NodeId> order;
    order.reserve(na);

    for (std::size_t src = 0; src < na; ++src) {
        // a source whose component has fewer than 3 nodes routes nothing
        if (view.comp_size_of[src] < 3) continue;

        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();

        dist[src] = 0;
        sigma[src] = 1.0;
        order.push_back(static_cast<NodeId>(src));
        for (std::size_t head = 0; head < order.size(); ++head) {
            const auto u = static_cast<std::size_t>(order[head]);
            const std::int32_t du = dist[u];
            const double su = sigma[u];
            for (std::int32_t e = view.offset[u]; e < view.offset[u + 1]; ++e) {
                const auto w = static_cast<std::size_t>(view.targets[static_cast<std::size_t>(e)]);
                if (dist[w] < 0) {
                    dist[w] = du + 1;
                    order.push_back(static_cast<NodeId>(w));
                }
                if (dist[w] == du + 1) sigma[w] += su;
            }
        }

        // dependency accumulation in reverse BFS order (predecessor-free
        // variant: a neighbor one level closer is a predecessor)
        for (std::size_t i = order.size(); i-- > 1;) {
            const auto w = static_cast<std::size_t>(order[i]);
            const double coeff = (1.0 + delta[w]) / sigma[w];
            const std::int32_t dw = dist[w];
            for (std::int32_t e = view.offset[w]; e < view.offset[w + 1]; ++e) {
                const auto v = static_cast<std::size_t>(view.targets[static_cast<std::size_t>(e)]);
                if (dist[v] == dw - 1) delta[v] += sigma[v] * coeff;
            }
            bc[w] += delta[w];
        }
    }

    const double norm = 1.0 / (static_cast<double>(n_active - 1) * static_cast<double>(n_active - 2));
    for (std::size_t i = 0; i < na; ++i) {
        s.values[static_cast<std::size_t>(view.old_id[i])] = bc[i] * norm;
    }
    return s;
}

CentralityScores closeness_centrality(const Graph& g) {
    CentralityScores s{CentralityMeasure::Closeness,
                       std::vector<double>(static_cast<std::size_t>(g.node_count()), 0.0)};
    if (g.active_count() == 0) return s;

    const DenseView view(g);
    const std::size_t na = view.size();
    std::vector<std::int32_t> dist(na);
    std::vector<NodeId> queue;
    queue.reserve(na);

    for (std::size_t src = 0; src < na; ++src) {
        if (view.degree(src) == 0) continue;  // isolated: no reachable peers
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[src] = 0;
        queue.push_back(static_cast<NodeId>(src));
        std::int64_t total = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto u = static_cast<std::size_t>(queue[head]);
            const std::int32_t du = dist[u];
            total += du;
            for (std::int32_t e = view.offset[u]; e < view.offset[u + 1]; ++e) {
                const auto w = static_cast<std::size_t>(view.targets[static_cast<std::size_t>(e)]);
                if (dist[w] < 0) {
                    dist[w] = du + 1;
                    queue.push_back(static_cast<NodeId>(w));
                }
            }
        }
        s.values[static_cast<std::size_t>(view.old_id[src])] = 1.0 / static_cast<double>(total);
    }
    return s;
}

}  // namespace hsnet
