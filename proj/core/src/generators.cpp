#include "hsnet/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "hsnet/rng.hpp"

namespace hsnet {

namespace {

void validate_modular(const ModularSpec& spec) {
    if (spec.n <= 0) throw std::invalid_argument("modular: n must be positive");
    if (spec.modules <= 0) throw std::invalid_argument("modular: module count must be positive");
    if (spec.n % spec.modules != 0) {
        throw std::invalid_argument("modular: n=" + std::to_string(spec.n) +
                                    " is not divisible by modules=" + std::to_string(spec.modules));
    }
    if (!(spec.density > 0.0 && spec.density <= 1.0)) {
        throw std::invalid_argument("modular: density must be in (0, 1]");
    }
    if (spec.rewire_p < 0.0 || spec.rewire_p > 1.0) {
        throw std::invalid_argument("modular: rewire_p must be in [0, 1]");
    }
}

}  // namespace

Graph generate_modular(const ModularSpec& spec) {
    validate_modular(spec);
    Graph g(spec.n);
    const NodeId size = spec.n / spec.modules;
    Rng rng(derive_seed(spec.seed, "modular_base"));
    for (NodeId m = 0; m < spec.modules; ++m) {
        const NodeId base = m * size;
        for (NodeId i = 0; i < size; ++i) {
            for (NodeId j = i + 1; j < size; ++j) {
                if (spec.density >= 1.0 || rng.bernoulli(spec.density)) {
                    g.add_edge(base + i, base + j);
                }
            }
        }
    }
    return g;
}

Graph generate_hierarchical_modular(const ModularSpec& spec, RewireStats* stats) {
    validate_modular(spec);
    const Graph base = generate_modular(spec);
    const NodeId size = spec.n / spec.modules;

    // edge set keyed with u < v; iterate a fixed snapshot of the base edges
    std::set<std::pair<NodeId, NodeId>> edge_set;
    for (const auto& e : base.edges()) edge_set.insert(e);
    const auto snapshot = base.edges();

    RewireStats local;
    Rng rng(derive_seed(spec.seed, "modular_rewire"));
    for (const auto& [u, v] : snapshot) {
        if (!rng.bernoulli(spec.rewire_p)) continue;
        ++local.selected;
        const NodeId kept = rng.bernoulli(0.5) ? u : v;
        const NodeId own_module = kept / size;
        // uniform over the n - size nodes outside kept's module
        NodeId target = static_cast<NodeId>(rng.uniform_index(static_cast<std::uint64_t>(spec.n - size)));
        if (target >= own_module * size) target += size;
        const auto candidate = std::minmax(kept, target);
        if (edge_set.count({candidate.first, candidate.second})) {
            ++local.skipped;
            continue;
        }
        edge_set.erase({std::min(u, v), std::max(u, v)});
        edge_set.insert({candidate.first, candidate.second});
        ++local.rewired;
    }

    if (stats) *stats = local;
    std::vector<std::pair<NodeId, NodeId>> edges(edge_set.begin(), edge_set.end());
    return Graph::from_edge_list(spec.n, edges);
}

Graph generate_scale_free(const ScaleFreeSpec& spec) {
    if (spec.n <= 0) throw std::invalid_argument("scale_free: n must be positive");
    if (spec.m_attach < 1) throw std::invalid_argument("scale_free: m_attach must be >= 1");
    if (spec.m_attach >= spec.n) {
        throw std::invalid_argument("scale_free: m_attach=" + std::to_string(spec.m_attach) +
                                    " must be smaller than n=" + std::to_string(spec.n));
    }
    if (spec.preprune_fraction < 0.0 || spec.preprune_fraction >= 1.0) {
        throw std::invalid_argument("scale_free: preprune_fraction must be in [0, 1)");
    }

    Graph g(spec.n);
    const NodeId m = spec.m_attach;
    Rng rng(derive_seed(spec.seed, "scale_free"));

    // degree-weighted pool: each node appears once per unit of degree
    std::vector<NodeId> pool;
    pool.reserve(2 * static_cast<std::size_t>(m) * static_cast<std::size_t>(spec.n));
    for (NodeId i = 0; i <= m; ++i) {
        for (NodeId j = i + 1; j <= m; ++j) {
            g.add_edge(i, j);
            pool.push_back(i);
            pool.push_back(j);
        }
    }

    std::vector<NodeId> picked;
    picked.reserve(static_cast<std::size_t>(m));
    for (NodeId v = m + 1; v < spec.n; ++v) {
        picked.clear();
        while (static_cast<NodeId>(picked.size()) < m) {
            const NodeId t = pool[rng.uniform_index(pool.size())];
            if (std::find(picked.begin(), picked.end(), t) == picked.end()) {
                picked.push_back(t);
            }
        }
        for (NodeId t : picked) {
            g.add_edge(v, t);
            pool.push_back(t);
            pool.push_back(v);
        }
    }

    if (spec.preprune_fraction > 0.0) {
        const NodeId drop =
            static_cast<NodeId>(spec.preprune_fraction * static_cast<double>(spec.n));
        Rng drop_rng(derive_seed(spec.seed, "scale_free_preprune"));
        std::vector<NodeId> ids(static_cast<std::size_t>(spec.n));
        for (NodeId i = 0; i < spec.n; ++i) ids[static_cast<std::size_t>(i)] = i;
        for (NodeId k = 0; k < drop; ++k) {
            const auto j =
                k + static_cast<NodeId>(drop_rng.uniform_index(static_cast<std::uint64_t>(spec.n - k)));
            std::swap(ids[static_cast<std::size_t>(k)], ids[static_cast<std::size_t>(j)]);
            g.remove_node(ids[static_cast<std::size_t>(k)]);
        }
        return prune_isolated(g);
    }
    return g;
}

Graph prune_isolated(const Graph& g) {
    std::vector<NodeId> remap(static_cast<std::size_t>(g.node_count()), -1);
    NodeId kept = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.is_active(v) && g.degree(v) > 0) remap[static_cast<std::size_t>(v)] = kept++;
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(remap[static_cast<std::size_t>(u)], remap[static_cast<std::size_t>(v)]);
    }
    return Graph::from_edge_list(kept, edges);
}

}  // namespace hsnet
