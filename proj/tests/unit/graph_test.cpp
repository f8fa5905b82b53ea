#include "doctest.h"

#include <stdexcept>

#include "hsnet/coupling.hpp"
#include "hsnet/generators.hpp"
#include "hsnet/graph.hpp"
#include "hsnet/layered.hpp"
#include "oracles.hpp"

using hsnet::CouplingMatrix;
using hsnet::Graph;
using hsnet::NodeId;

namespace {

Graph path3() {
    return Graph::from_edge_list(3, std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}});
}

Graph complete(NodeId n) {
    Graph g(n);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

}  // namespace

TEST_CASE("from_edge_list builds the exact edge set") {
    const Graph g = path3();
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("from_edge_list dedups and drops self-loops") {
    const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {1, 0}, {2, 2}};
    const Graph g = Graph::from_edge_list(3, edges);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.degree(2) == 0);
}

TEST_CASE("from_edge_list rejects out-of-range endpoints") {
    const std::vector<std::pair<NodeId, NodeId>> edges{{0, 5}};
    CHECK_THROWS_AS(Graph::from_edge_list(2, edges), std::invalid_argument);
}

TEST_CASE("largest component") {
    CHECK(path3().largest_component_size() == 3);

    // K3 plus K2 on 5 nodes
    const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}};
    CHECK(Graph::from_edge_list(5, edges).largest_component_size() == 3);

    CHECK(Graph(0).largest_component_size() == 0);
    CHECK(Graph(4).largest_component_size() == 1);
}

TEST_CASE("remove_node tombstones without renumbering") {
    Graph g = complete(3);
    g.remove_node(0);
    CHECK(g.active_count() == 2);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 2));
    CHECK(!g.is_active(0));
    CHECK_THROWS_AS(g.remove_node(0), std::invalid_argument);
}

TEST_CASE("removing a star hub isolates the leaves") {
    Graph g(5);
    for (NodeId leaf = 1; leaf < 5; ++leaf) g.add_edge(0, leaf);
    g.remove_node(0);
    CHECK(g.largest_component_size() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("removing the middle of a path splits it") {
    Graph g = path3();
    g.remove_node(1);
    CHECK(g.largest_component_size() == 1);
    CHECK(g.active_count() == 2);
}

TEST_CASE("compose_interdependent") {
    const Graph k2 = complete(2);

    SUBCASE("no coupling keeps layers apart") {
        const CouplingMatrix b(2, 2);
        const auto lg = hsnet::compose_interdependent(k2, k2, b);
        CHECK(lg.graph.node_count() == 4);
        CHECK(lg.graph.edge_count() == 2);
        CHECK(lg.graph.largest_component_size() == 2);
        CHECK(lg.layer_of(1) == hsnet::Layer::Hardware);
        CHECK(lg.layer_of(2) == hsnet::Layer::Software);
    }

    SUBCASE("full coupling connects everything") {
        CouplingMatrix b(2, 2);
        for (auto& bit : b.bits) bit = 1;
        const auto lg = hsnet::compose_interdependent(k2, k2, b);
        CHECK(lg.graph.edge_count() == 6);
        CHECK(lg.graph.largest_component_size() == 4);
    }

    SUBCASE("dimension mismatch is rejected") {
        const CouplingMatrix b(3, 2);
        CHECK_THROWS_AS(hsnet::compose_interdependent(k2, k2, b), std::invalid_argument);
    }

    SUBCASE("attacked inputs are rejected") {
        Graph damaged = complete(2);
        damaged.remove_node(0);
        const CouplingMatrix b(2, 2);
        CHECK_THROWS_AS(hsnet::compose_interdependent(damaged, k2, b), std::invalid_argument);
    }

    SUBCASE("desk-scale layer sizes") {
        const Graph hw = hsnet::generate_modular({.n = 54, .modules = 6, .density = 1.0, .seed = 2});
        const Graph sw = hsnet::generate_scale_free({.n = 233, .m_attach = 2, .seed = 3});
        const auto b = hsnet::random_coupling(54, 233, 0.2, 4);
        const auto lg = hsnet::compose_interdependent(hw, sw, b);
        CHECK(lg.graph.node_count() == 287);
        CHECK(lg.hw_count == 54);
        CHECK(lg.sw_count == 233);
        CHECK(lg.graph.edge_count() == hw.edge_count() + sw.edge_count() + b.popcount());
    }

    SUBCASE("edge count is conserved") {
        const Graph hw = oracle::random_graph(7, 0.4, 11);
        const Graph sw = oracle::random_graph(9, 0.3, 12);
        CouplingMatrix b(7, 9);
        hsnet::Rng rng(99);
        for (auto& bit : b.bits) bit = rng.bernoulli(0.25) ? 1 : 0;
        const auto lg = hsnet::compose_interdependent(hw, sw, b);
        CHECK(lg.graph.edge_count() == hw.edge_count() + sw.edge_count() + b.popcount());
    }
}

TEST_CASE("adjacency stays symmetric under construction and removal") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = oracle::random_graph(8, 0.4, seed);
        for (NodeId u = 0; u < 8; ++u) {
            for (NodeId v = 0; v < 8; ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
        }
        g.remove_node(static_cast<NodeId>(seed % 8));
        for (NodeId u = 0; u < 8; ++u) {
            for (NodeId v = 0; v < 8; ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
        }
    }
}

TEST_CASE("largest component matches exhaustive BFS oracle under removals") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = oracle::random_graph(static_cast<NodeId>(2 + seed % 7), 0.35, 1000 + seed);
        hsnet::Rng rng(seed);
        NodeId previous = g.largest_component_size();
        while (g.active_count() > 0) {
            CHECK(g.largest_component_size() == oracle::largest_component(g));
            // monotone degradation
            const NodeId current = g.largest_component_size();
            CHECK(current <= previous);
            previous = current;
            // remove a random active node
            NodeId idx = static_cast<NodeId>(rng.uniform_index(g.active_count()));
            for (NodeId v = 0; v < g.node_count(); ++v) {
                if (g.is_active(v) && idx-- == 0) {
                    g.remove_node(v);
                    break;
                }
            }
        }
        CHECK(g.largest_component_size() == 0);
    }
}
