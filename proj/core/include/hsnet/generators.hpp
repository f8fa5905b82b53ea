#pragma once

#include <cstdint>

#include "hsnet/graph.hpp"

namespace hsnet {

/// Parameters for the modular family. With rewire_p == 0 the output is a set
/// of disconnected modules; rewire_p > 0 turns intra-module edges into
/// cross-module ones, lowering modularity as it grows.
struct ModularSpec {
    NodeId n = 0;            ///< total nodes, must divide evenly into modules
    NodeId modules = 1;
    double density = 1.0;    ///< probability of each intra-module pair, in (0, 1]
    double rewire_p = 0.0;   ///< per-edge rewiring probability, in [0, 1]
    std::uint64_t seed = 0;
};

/// Parameters for the preferential-attachment family.
struct ScaleFreeSpec {
    NodeId n = 0;                    ///< target node count
    NodeId m_attach = 2;             ///< edges added per arriving node, >= 1 and < n
    std::uint64_t seed = 0;
    double preprune_fraction = 0.0;  ///< fraction of nodes deleted uniformly after
                                     ///< generation (survivors are pruned and
                                     ///< renumbered); 0 disables
};

struct RewireStats {
    std::size_t selected = 0;  ///< edges picked for rewiring
    std::size_t rewired = 0;   ///< moves applied
    std::size_t skipped = 0;   ///< moves dropped because the new edge already existed
};

/// Disconnected modules of n/modules nodes each; every intra-module pair is
/// connected with probability density. No inter-module edges.
Graph generate_modular(const ModularSpec& spec);

/// Starts from the modular base for the same seed, then for each intra-module
/// edge, with probability rewire_p, detaches one endpoint (chosen uniformly)
/// and reattaches it to a uniformly chosen node of a different module. Moves
/// that would duplicate an existing edge are skipped, so the edge count is
/// preserved.
Graph generate_hierarchical_modular(const ModularSpec& spec, RewireStats* stats = nullptr);

/// Preferential attachment: a clique of m_attach + 1 seed nodes, then each
/// arriving node attaches m_attach edges to distinct existing nodes chosen
/// with probability proportional to their current degree.
Graph generate_scale_free(const ScaleFreeSpec& spec);

/// Drops every degree-0 node and renumbers the survivors densely. Edges are
/// unchanged up to the renumbering.
Graph prune_isolated(const Graph& g);

}  // namespace hsnet
