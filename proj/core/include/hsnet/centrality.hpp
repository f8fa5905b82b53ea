#pragma once

#include <vector>

#include "hsnet/graph.hpp"

namespace hsnet {

enum class CentralityMeasure { Degree, Betweenness, Closeness };

/// Per-node scores indexed by NodeId; entries for removed nodes are 0.
struct CentralityScores {
    CentralityMeasure measure;
    std::vector<double> values;
};

/// DC(v) = number of active neighbors of v.
CentralityScores degree_centrality(const Graph& g);

/// Shortest-path betweenness over ordered node pairs, normalized by
/// (N-1)(N-2) where N is the current active node count, so scores lie in
/// [0, 1]. Pairs without a connecting path contribute nothing; graphs with
/// N <= 2 score zero everywhere.
CentralityScores betweenness_centrality(const Graph& g);

/// CC(v) = 1 / sum of geodesic distances from v to the nodes of its own
/// component. Nodes with no reachable peer score 0.
CentralityScores closeness_centrality(const Graph& g);

}  // namespace hsnet
