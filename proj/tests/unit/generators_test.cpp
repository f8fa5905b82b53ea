#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "hsnet/generators.hpp"
#include "hsnet/graph.hpp"

using hsnet::Graph;
using hsnet::ModularSpec;
using hsnet::NodeId;
using hsnet::RewireStats;
using hsnet::ScaleFreeSpec;

namespace {

NodeId module_of(NodeId v, NodeId module_size) { return v / module_size; }

NodeId count_inter_module(const Graph& g, NodeId module_size) {
    NodeId crossing = 0;
    for (const auto& [u, v] : g.edges()) {
        if (module_of(u, module_size) != module_of(v, module_size)) ++crossing;
    }
    return crossing;
}

}  // namespace

TEST_CASE("perfectly modular network with full density is disjoint cliques") {
    const Graph g = hsnet::generate_modular({.n = 100, .modules = 5, .density = 1.0, .seed = 1});
    CHECK(g.node_count() == 100);
    CHECK(g.edge_count() == 950);  // 5 * C(20,2)
    CHECK(g.largest_component_size() == 20);
    CHECK(count_inter_module(g, 20) == 0);

    const auto comps = g.components();
    CHECK(comps.size.size() == 5);
}

TEST_CASE("two-module toy case") {
    const Graph g = hsnet::generate_modular({.n = 4, .modules = 2, .density = 1.0, .seed = 3});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 3));
}

TEST_CASE("indivisible module count is rejected") {
    CHECK_THROWS_AS(hsnet::generate_modular({.n = 10, .modules = 3}), std::invalid_argument);
}

TEST_CASE("no inter-module edges at p=0 across seeds, any density") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g =
            hsnet::generate_modular({.n = 60, .modules = 4, .density = 0.7, .seed = seed});
        CHECK(count_inter_module(g, 15) == 0);
        CHECK(g.components().size.size() >= 4);
    }
}

TEST_CASE("rewiring keeps the edge count and lands in the binomial band") {
    RewireStats stats;
    const ModularSpec spec{.n = 100, .modules = 5, .density = 1.0, .rewire_p = 0.5, .seed = 42};
    const Graph g = hsnet::generate_hierarchical_modular(spec, &stats);

    const Graph base = hsnet::generate_modular({.n = 100, .modules = 5, .density = 1.0, .seed = 42});
    CHECK(base.edge_count() - g.edge_count() <= stats.skipped);
    CHECK(g.edge_count() == base.edge_count());  // skipped moves keep the original edge

    // inter-module edges ~ Binomial(950, 0.5) minus the skipped moves
    const double expectation = 950.0 * 0.5;
    const double sigma = std::sqrt(950.0 * 0.25);
    const auto crossing = static_cast<double>(count_inter_module(g, 20));
    CHECK(crossing > expectation - 3.0 * sigma - static_cast<double>(stats.skipped));
    CHECK(crossing < expectation + 3.0 * sigma);

    CHECK(g.largest_component_size() == 100);  // connected at p=0.5
}

TEST_CASE("rewired edge count concentrates around p per edge") {
    // small p: mean rewired over 30 seeds tracks 950 * p
    const double p = 0.01;
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        RewireStats stats;
        hsnet::generate_hierarchical_modular(
            {.n = 100, .modules = 5, .density = 1.0, .rewire_p = p, .seed = seed}, &stats);
        total += static_cast<double>(stats.rewired);
    }
    const double mean = total / 30.0;
    const double expectation = 950.0 * p;  // 9.5
    const double se = std::sqrt(950.0 * p * (1 - p) / 30.0);
    CHECK(std::abs(mean - expectation) < 4.0 * se + 0.5);
}

TEST_CASE("p=1 leaves almost no intra-module edges") {
    RewireStats stats;
    const Graph g = hsnet::generate_hierarchical_modular(
        {.n = 100, .modules = 5, .density = 1.0, .rewire_p = 1.0, .seed = 7}, &stats);
    const NodeId intra = static_cast<NodeId>(g.edge_count()) - count_inter_module(g, 20);
    CHECK(static_cast<std::size_t>(intra) <= stats.skipped);
}

TEST_CASE("scale-free edge count identity") {
    const Graph g = hsnet::generate_scale_free({.n = 470, .m_attach = 2, .seed = 5});
    CHECK(g.node_count() == 470);
    CHECK(g.edge_count() == 2 * (470 - 3) + 3);
    CHECK(g.largest_component_size() == 470);  // connected by construction
}

TEST_CASE("scale-free saturation and validation") {
    const Graph k5 = hsnet::generate_scale_free({.n = 5, .m_attach = 4, .seed = 0});
    CHECK(k5.edge_count() == 10);
    CHECK_THROWS_AS(hsnet::generate_scale_free({.n = 3, .m_attach = 3, .seed = 0}),
                    std::invalid_argument);
}

TEST_CASE("scale-free degree distribution has a heavy tail") {
    int heavy = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = hsnet::generate_scale_free({.n = 470, .m_attach = 2, .seed = seed});
        NodeId max_degree = 0;
        double total_degree = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            max_degree = std::max(max_degree, g.degree(v));
            total_degree += g.degree(v);
        }
        if (max_degree > 20) ++heavy;
        CHECK(max_degree >= 3.0 * (total_degree / 470.0));
    }
    CHECK(heavy >= 29);  // >= 95% of seeds
}

TEST_CASE("generators are deterministic given the seed") {
    const ModularSpec m{.n = 40, .modules = 4, .density = 0.8, .rewire_p = 0.3, .seed = 77};
    CHECK(hsnet::generate_hierarchical_modular(m).edges() ==
          hsnet::generate_hierarchical_modular(m).edges());

    const ScaleFreeSpec s{.n = 120, .m_attach = 2, .seed = 77};
    CHECK(hsnet::generate_scale_free(s).edges() == hsnet::generate_scale_free(s).edges());

    // and different seeds actually differ
    ScaleFreeSpec s2 = s;
    s2.seed = 78;
    CHECK(hsnet::generate_scale_free(s).edges() != hsnet::generate_scale_free(s2).edges());
}

TEST_CASE("prune_isolated") {
    SUBCASE("identity on connected input") {
        const Graph g = hsnet::generate_scale_free({.n = 30, .m_attach = 2, .seed = 1});
        const Graph pruned = hsnet::prune_isolated(g);
        CHECK(pruned.edges() == g.edges());
        CHECK(pruned.node_count() == 30);
    }
    SUBCASE("drops isolated nodes and renumbers") {
        const Graph g =
            Graph::from_edge_list(5, std::vector<std::pair<NodeId, NodeId>>{{0, 2}, {2, 4}, {0, 4}});
        const Graph pruned = hsnet::prune_isolated(g);
        CHECK(pruned.node_count() == 3);
        CHECK(pruned.edge_count() == 3);
    }
    SUBCASE("edgeless graph prunes to nothing") {
        CHECK(hsnet::prune_isolated(Graph(5)).node_count() == 0);
    }
}

TEST_CASE("preprune_fraction shrinks the network deterministically") {
    const ScaleFreeSpec spec{.n = 100, .m_attach = 2, .seed = 9, .preprune_fraction = 0.1};
    const Graph a = hsnet::generate_scale_free(spec);
    const Graph b = hsnet::generate_scale_free(spec);
    CHECK(a.edges() == b.edges());
    CHECK(a.node_count() < 100);
    CHECK(a.node_count() >= 80);
    for (NodeId v = 0; v < a.node_count(); ++v) CHECK(a.degree(v) > 0);
}
