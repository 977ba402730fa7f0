#include <acyc/corpus.hpp>
#include <acyc/kappa.hpp>
#include <acyc/orientation.hpp>

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace {

using namespace acyc;

const Multigraph kTriangle(3, {{0, 1}, {1, 2}, {0, 2}});
const Multigraph kDiamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});

std::uint64_t kappa_of(const Multigraph& g) { return kappa(g).value; }

TEST(Kappa, Cycles) {
    for (std::size_t n = 3; n <= 12; ++n) {
        EXPECT_EQ(kappa_of(cycle_graph(n)), n - 1) << n;
    }
}

TEST(Kappa, FrozenValues) {
    EXPECT_EQ(kappa_of(complete_graph(4)), 6u);
    EXPECT_EQ(kappa_of(complete_graph(5)), 24u);
    EXPECT_EQ(kappa_of(kDiamond), 4u);
    EXPECT_EQ(kappa_of(disjoint_union(kTriangle, kTriangle)), 4u);
    EXPECT_EQ(kappa_of(Multigraph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})), 2u);
    EXPECT_EQ(kappa_of(Multigraph(2, {{0, 1}, {0, 1}})), 1u);
}

// (n-1)! for K_n: every edge of a complete graph sits on a triangle
TEST(Kappa, CompleteGraphsGrowFactorially) {
    std::uint64_t expected = 1;
    for (std::size_t n = 2; n <= 9; ++n) {
        EXPECT_EQ(kappa_of(complete_graph(n)), expected) << n;
        expected *= n;
    }
}

TEST(Kappa, ForestsAndEdgeless) {
    EXPECT_EQ(kappa_of(Multigraph(0)), 1u);
    EXPECT_EQ(kappa_of(Multigraph(5)), 1u);
    Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(kappa_of(random_forest(rng)), 1u);
    }
}

TEST(Kappa, RejectsLoopsAndHugeGraphs) {
    EXPECT_THROW(kappa(Multigraph(2, {{0, 1}, {1, 1}})), InputDomainError);
    EXPECT_THROW(kappa(complete_graph(12)), ResourceLimitError);
}

TEST(Kappa, AgreesWithOracleClassCounts) {
    Rng rng(31);
    std::vector<Multigraph> corpus = connected_simple_graphs(5);
    for (int i = 0; i < 60; ++i) {
        corpus.push_back(random_multigraph(rng, 6, 9, false));
    }
    for (const auto& g : corpus) {
        EXPECT_EQ(kappa_of(g), oracle::click_classes(simplify(g).graph).size()) << describe(g);
    }
}

TEST(Kappa, RecursionHoldsForEveryCycleEdge) {
    Rng rng(37);
    for (int trial = 0; trial < 80; ++trial) {
        const Multigraph g = random_connected_graph(rng, {3, 8, 13});
        const auto kinds = classify_edges(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (kinds[e] == EdgeKind::CycleEdge) {
                EXPECT_EQ(kappa_of(g), kappa_of(delete_edge(g, e).graph) + kappa_of(contract_edge(g, e).graph))
                    << describe(g) << " e=" << e;
            }
        }
    }
}

TEST(Kappa, MultiplicativeOverComponentsAndBlindToBridges) {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const Multigraph x = random_connected_graph(rng, {3, 6, 9});
        const Multigraph y = random_connected_graph(rng, {3, 6, 9});
        EXPECT_EQ(kappa_of(disjoint_union(x, y)), kappa_of(x) * kappa_of(y));
        // joining the two by an edge adds a bridge
        std::vector<Edge> edges(x.edges().begin(), x.edges().end());
        for (const Edge& e : y.edges()) {
            edges.emplace_back(e.a + x.vertex_count(), e.b + x.vertex_count());
        }
        edges.emplace_back(0, x.vertex_count());
        EXPECT_EQ(kappa_of(Multigraph(x.vertex_count() + y.vertex_count(), edges)), kappa_of(x) * kappa_of(y));
    }
}

TEST(Kappa, EdgeChoiceDoesNotMatter) {
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const Multigraph g = random_connected_graph(rng, {4, 9, 16});
        const std::uint64_t expected = kappa_of(g);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            KappaOptions options;
            options.edge_choice = EdgeChoice::Random;
            options.seed = seed;
            EXPECT_EQ(kappa(g, options).value, expected);
            options.memoize = false;
            EXPECT_EQ(kappa(g, options).value, expected);
        }
    }
}

TEST(Kappa, MemoIsHitOnSymmetricGraphs) {
    KappaEngine engine;
    const auto first = engine.run(complete_graph(7));
    EXPECT_EQ(first.value, 720u);
    EXPECT_GT(first.cache_stats.hits, 0u);
    EXPECT_EQ(kappa(complete_graph(7), {false}).cache_stats.hits, 0u);
    const auto second = engine.run(complete_graph(7));
    EXPECT_EQ(second.value, 720u);
    EXPECT_EQ(second.cache_stats.misses, 0u);
}

TEST(Kappa, PetersenMatchesBruteForce) {
    const Multigraph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                   {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
    EXPECT_EQ(kappa_of(petersen), kappa_partition_bruteforce(petersen).class_count());
}

// Every node's value follows from its children by the rule it names.
void check_trace(const TraceNode& node) {
    switch (node.rule) {
        case KappaRule::Base:
            EXPECT_EQ(node.value, 1u);
            EXPECT_TRUE(node.children.empty());
            break;
        case KappaRule::BridgePrune:
            ASSERT_EQ(node.children.size(), 1u);
            EXPECT_EQ(node.value, node.children[0].value);
            break;
        case KappaRule::Product: {
            std::uint64_t product = 1;
            for (const auto& c : node.children) {
                product *= c.value;
            }
            EXPECT_GE(node.children.size(), 2u);
            EXPECT_EQ(node.value, product);
            break;
        }
        case KappaRule::Recursion:
            ASSERT_EQ(node.children.size(), 2u);
            ASSERT_TRUE(node.edge.has_value());
            EXPECT_EQ(node.value, node.children[0].value + node.children[1].value);
            break;
    }
    for (const auto& c : node.children) {
        check_trace(c);
    }
}

TEST(KappaTrace, TriangleTree) {
    const auto r = kappa_with_trace(kTriangle);
    ASSERT_TRUE(r.trace.has_value());
    const TraceNode& root = *r.trace;
    EXPECT_EQ(root.key, "3:0-1,1-2,0-2");
    EXPECT_EQ(root.rule, KappaRule::Recursion);
    EXPECT_EQ(root.edge, Edge(0, 1));
    EXPECT_EQ(root.value, 2u);
    // deleting 0-1 leaves a path, contracting it leaves a single edge
    EXPECT_EQ(root.children[0].rule, KappaRule::Base);
    EXPECT_EQ(root.children[1].rule, KappaRule::Base);
    EXPECT_EQ(root.children[1].key, "2:0-1");
}

TEST(KappaTrace, ValuesAreConsistent) {
    Rng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const Multigraph g = disjoint_union(random_connected_graph(rng, {3, 6, 9}), random_forest(rng, 4));
        const auto r = kappa_with_trace(g);
        ASSERT_TRUE(r.trace.has_value());
        EXPECT_EQ(r.trace->value, r.value);
        EXPECT_EQ(r.value, kappa_of(g));
        check_trace(*r.trace);
    }
    EXPECT_FALSE(kappa(kTriangle).trace.has_value());
}

}  // namespace
