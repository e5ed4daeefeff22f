#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "signed_spectra/graph_io.hpp"

namespace ss = signed_spectra;
using ss::SignedGraph;

TEST(GraphIo, JsonRoundTrip) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const SignedGraph g = ss::testing::random_signed_graph(rng, trial % 12, 0.4);
        EXPECT_EQ(ss::graph_from_json(ss::to_json(g)), g);
        EXPECT_EQ(ss::parse_graph(ss::to_json(g)), g);
    }
}

TEST(GraphIo, EdgeListRoundTrip) {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const SignedGraph g = ss::testing::random_signed_graph(rng, trial % 12, 0.4);
        EXPECT_EQ(ss::graph_from_edge_list(ss::to_edge_list(g)), g);
        EXPECT_EQ(ss::parse_graph(ss::to_edge_list(g)), g);
    }
}

TEST(GraphIo, EdgeListLayout) {
    const SignedGraph g = SignedGraph::from_edges(3, {{0, 1, -1}, {1, 2, 1}});
    EXPECT_EQ(ss::to_edge_list(g), "3\n0 1 -1\n1 2 1\n");
    EXPECT_EQ(ss::graph_from_edge_list("3\n1 0 -1\n  2 1 1"), g);
}

TEST(GraphIo, JsonAcceptsEdgesInAnyOrder) {
    const SignedGraph g = ss::graph_from_json(R"({"n": 3, "edges": [[2, 1, 1], [0, 1, -1]]})");
    EXPECT_EQ(g, SignedGraph::from_edges(3, {{0, 1, -1}, {1, 2, 1}}));
    EXPECT_EQ(ss::graph_from_json(R"({"n": 2})"), SignedGraph(2));
}

TEST(GraphIo, MalformedInputs) {
    for (const char* text : {"", "x", "-1", "3\n0 1", "3\n0 3 1", "3\n0 0 1", "3\n0 1 2", "3\n0 1 1 junk",
                             "3\n0 1 1\n0 1 -1"}) {
        EXPECT_THROW(ss::graph_from_edge_list(text), ss::FormatError) << text;
    }
    for (const char* text : {"{", "{}", R"({"n": "3"})", R"({"n": -1})", R"({"n": 2, "edges": 4})",
                             R"({"n": 2, "edges": [[0, 1]]})", R"({"n": 2, "edges": [[0, 2, 1]]})"}) {
        EXPECT_THROW(ss::graph_from_json(text), ss::FormatError) << text;
    }
}
