#include <acyc/corpus.hpp>
#include <acyc/edge_list.hpp>
#include <acyc/graph_key.hpp>

#include <gtest/gtest.h>

namespace {

using namespace acyc;

std::size_t error_line(const std::string& text) {
    try {
        parse_edge_list(text);
    } catch (const ParseError& ex) {
        return ex.line();
    }
    return 0;
}

TEST(EdgeList, ParsesLoopsAndParallelEdges) {
    const Multigraph g = parse_edge_list("3 4\n0 1\n1 0\n2 2\n1 2\n");
    EXPECT_EQ(g, Multigraph(3, {{0, 1}, {0, 1}, {2, 2}, {1, 2}}));
    EXPECT_EQ(g.loop_count(), 1u);
}

TEST(EdgeList, ToleratesCommentsBlankLinesAndCrlf) {
    const Multigraph g = parse_edge_list("# triangle\r\n\n3 3\r\n0 1\n  1 2  \n# closing edge\n0 2\n\n");
    EXPECT_EQ(g, Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST(EdgeList, EmptyGraph) {
    EXPECT_EQ(parse_edge_list("0 0\n"), Multigraph(0));
    EXPECT_EQ(parse_edge_list("4 0"), Multigraph(4));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line(""), 1u);
    EXPECT_EQ(error_line("3 2\n0 1\n"), 3u);
    EXPECT_EQ(error_line("3 1\n0 1\n1 2\n"), 3u);
    EXPECT_EQ(error_line("3 1\n0 3\n"), 2u);
    EXPECT_EQ(error_line("3 1\n0 -1\n"), 2u);
    EXPECT_EQ(error_line("3 1\n\n0 1 2\n"), 3u);
    EXPECT_EQ(error_line("x 1\n"), 1u);
    EXPECT_EQ(error_line("3\n"), 1u);
    EXPECT_EQ(error_line("99999999999 1\n"), 1u);
}

TEST(EdgeList, ParseErrorIsAnInputDomainError) { EXPECT_THROW(parse_edge_list("1"), InputDomainError); }

TEST(EdgeList, RoundTrip) {
    Rng rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        const Multigraph g = random_multigraph(rng, 8, 12, true);
        EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
    }
}

TEST(EdgeList, HashIsStableAndOrderSensitive) {
    const Multigraph a(3, {{0, 1}, {1, 2}});
    const Multigraph b(3, {{1, 2}, {0, 1}});
    EXPECT_EQ(edge_list_hash(a), edge_list_hash(parse_edge_list("3 2\n1 0\n2 1\n")));
    EXPECT_NE(edge_list_hash(a), edge_list_hash(b));
    // FNV-1a of "0 0\n"
    EXPECT_EQ(hex64(edge_list_hash(Multigraph(0))), "37a83bf99ce7e807");
    EXPECT_EQ(hex64(0x1f), "000000000000001f");
}

TEST(GraphKey, InvariantUnderRelabelingOfSymmetricGraphs) {
    // the memo key need not be a canonical form, but it must be a function of
    // the labeled graph and should collapse the obvious symmetric cases
    EXPECT_EQ(graph_key(cycle_graph(5)), graph_key(Multigraph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})));
    EXPECT_EQ(graph_key(complete_graph(4)), graph_key(complete_graph(4)));
    EXPECT_NE(graph_key(cycle_graph(4)), graph_key(complete_graph(4)));
    EXPECT_EQ(describe(Multigraph(3, {{2, 1}, {0, 0}})), "3:1-2,0-0");
}

}  // namespace
