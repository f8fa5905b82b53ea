#include "hsnet/attack.hpp"

#include <stdexcept>

#include "hsnet/centrality.hpp"
#include "hsnet/rng.hpp"

namespace hsnet {

std::string to_string(AttackKind kind) {
    switch (kind) {
        case AttackKind::Degree: return "degree";
        case AttackKind::Betweenness: return "betweenness";
        case AttackKind::Closeness: return "closeness";
        case AttackKind::Random: return "random";
    }
    return "?";
}

AttackKind attack_kind_from_string(const std::string& name) {
    if (name == "degree") return AttackKind::Degree;
    if (name == "betweenness") return AttackKind::Betweenness;
    if (name == "closeness") return AttackKind::Closeness;
    if (name == "random") return AttackKind::Random;
    throw std::invalid_argument("unknown attack strategy: " + name);
}

namespace {

NodeId nth_active(const Graph& g, NodeId n) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.is_active(v) && n-- == 0) return v;
    }
    throw std::logic_error("active index out of range");
}

// Argmax over active nodes. Ties go to the lowest id, or to a uniform draw
// among the tied nodes when a tie RNG is supplied. An edgeless residual
// graph scores zero under every centrality, so the scan is skipped there.
NodeId pick_victim(const Graph& g, const AttackStrategy& strategy, Rng* tie_rng) {
    std::vector<double> scores;
    if (g.edge_count() > 0) {
        switch (strategy.kind) {
            case AttackKind::Degree: scores = degree_centrality(g).values; break;
            case AttackKind::Betweenness: scores = betweenness_centrality(g).values; break;
            case AttackKind::Closeness: scores = closeness_centrality(g).values; break;
            case AttackKind::Random: throw std::logic_error("random strategy has no scores");
        }
    } else {
        scores.assign(static_cast<std::size_t>(g.node_count()), 0.0);
    }

    NodeId best = -1;
    double best_score = 0.0;
    NodeId tie_count = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!g.is_active(v)) continue;
        const double s = scores[static_cast<std::size_t>(v)];
        if (best < 0 || s > best_score) {
            best = v;
            best_score = s;
            tie_count = 1;
        } else if (s == best_score && tie_rng) {
            // reservoir draw keeps one uniform winner among ties in one pass
            ++tie_count;
            if (tie_rng->uniform_index(static_cast<std::uint64_t>(tie_count)) == 0) best = v;
        }
    }
    return best;
}

}  // namespace

AttackTrace attack_sequence(Graph g, const AttackStrategy& strategy, const AttackOptions& options) {
    const NodeId n = g.active_count();
    if (n == 0) throw std::invalid_argument("cannot attack an empty graph");

    AttackTrace trace;
    trace.strategy = strategy;
    trace.removed.reserve(static_cast<std::size_t>(n));
    trace.s_series.reserve(static_cast<std::size_t>(n) + 1);
    trace.s_series.push_back(g.largest_component_size());

    Rng pick_rng(strategy.seed);
    Rng tie_rng(options.tie_seed);
    Rng* tie = options.tie_break == AttackOptions::TieBreak::Seeded ? &tie_rng : nullptr;

    for (NodeId step = 0; step < n; ++step) {
        NodeId victim;
        if (strategy.kind == AttackKind::Random) {
            victim = nth_active(g, static_cast<NodeId>(pick_rng.uniform_index(
                                        static_cast<std::uint64_t>(g.active_count()))));
        } else {
            victim = pick_victim(g, strategy, tie);
        }
        g.remove_node(victim);
        trace.removed.push_back(victim);
        trace.s_series.push_back(g.largest_component_size());
    }
    return trace;
}

std::vector<NodeId> replay_trace(Graph g, std::span<const NodeId> removed) {
    if (static_cast<NodeId>(removed.size()) != g.active_count()) {
        throw std::invalid_argument("removal list does not cover the graph's active nodes");
    }
    std::vector<NodeId> series;
    series.reserve(removed.size() + 1);
    series.push_back(g.largest_component_size());
    for (NodeId v : removed) {
        if (v < 0 || v >= g.node_count() || !g.is_active(v)) {
            throw std::invalid_argument("removal list is not a permutation of the graph's nodes");
        }
        g.remove_node(v);
        series.push_back(g.largest_component_size());
    }
    return series;
}

}  // namespace hsnet
