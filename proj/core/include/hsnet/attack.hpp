#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hsnet/graph.hpp"

namespace hsnet {

enum class AttackKind { Degree, Betweenness, Closeness, Random };

struct AttackStrategy {
    AttackKind kind = AttackKind::Degree;
    std::uint64_t seed = 0;  ///< used by Random only

    static AttackStrategy degree() { return {AttackKind::Degree, 0}; }
    static AttackStrategy betweenness() { return {AttackKind::Betweenness, 0}; }
    static AttackStrategy closeness() { return {AttackKind::Closeness, 0}; }
    static AttackStrategy random(std::uint64_t seed) { return {AttackKind::Random, seed}; }
};

std::string to_string(AttackKind kind);
AttackKind attack_kind_from_string(const std::string& name);

/// Centrality ties resolve to the lowest node id by default; the seeded mode
/// picks uniformly among the tied nodes instead, for sensitivity analysis.
struct AttackOptions {
    enum class TieBreak { LowestId, Seeded } tie_break = TieBreak::LowestId;
    std::uint64_t tie_seed = 0;
};

/// Full record of one sustained attack: the removal order and the largest
/// component trajectory S_0..S_N (S_N is always 0).
struct AttackTrace {
    AttackStrategy strategy;
    std::vector<NodeId> removed;
    std::vector<NodeId> s_series;
};

/// Removes one node per iteration until no active node remains. Centrality
/// strategies recompute their measure on the current residual graph and take
/// the argmax; Random draws uniformly among the surviving nodes.
AttackTrace attack_sequence(Graph g, const AttackStrategy& strategy, const AttackOptions& options = {});

/// Recomputes the largest-component trajectory for a stored removal order.
/// `removed` must be a permutation of the active nodes of g.
std::vector<NodeId> replay_trace(Graph g, std::span<const NodeId> removed);

}  // namespace hsnet
