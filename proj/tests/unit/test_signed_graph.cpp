#include <gtest/gtest.h>

#include "signed_spectra/signed_graph.hpp"

namespace ss = signed_spectra;
using ss::SignedGraph;
using ss::VertexSet;

namespace {

SignedGraph triangle(int s01, int s02, int s12) {
    return SignedGraph::from_edges(3, {{0, 1, s01}, {0, 2, s02}, {1, 2, s12}});
}

}  // namespace

TEST(SignedGraph, FromMatrixValidates) {
    EXPECT_NO_THROW(SignedGraph::from_matrix({{0, 1}, {1, 0}}));
    EXPECT_THROW(SignedGraph::from_matrix({{0, 1}, {-1, 0}}), std::invalid_argument);
    EXPECT_THROW(SignedGraph::from_matrix({{1, 0}, {0, 0}}), std::invalid_argument);
    EXPECT_THROW(SignedGraph::from_matrix({{0, 2}, {2, 0}}), std::invalid_argument);
    EXPECT_THROW(SignedGraph::from_matrix({{0, 1}, {1}}), std::invalid_argument);
}

TEST(SignedGraph, FromEdgesRejectsBadEdges) {
    EXPECT_THROW(SignedGraph::from_edges(2, {{0, 0, 1}}), std::invalid_argument);
    EXPECT_THROW(SignedGraph::from_edges(2, {{0, 2, 1}}), std::out_of_range);
    EXPECT_THROW(SignedGraph::from_edges(2, {{0, 1, 0}}), std::invalid_argument);
}

TEST(SignedGraph, Accessors) {
    const SignedGraph g = triangle(1, -1, 1);
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.sign(0, 2), -1);
    EXPECT_EQ(g.sign(2, 0), -1);
    EXPECT_EQ(g.degree(1), 2u);
    ASSERT_EQ(g.edges().size(), 3u);
    EXPECT_EQ(g.edges()[1], (ss::SignedEdge{0, 2, -1}));
}

TEST(SignedGraph, NegateIsInvolutive) {
    const SignedGraph g = triangle(1, -1, 1);
    EXPECT_EQ(ss::negate(g), triangle(-1, 1, -1));
    EXPECT_EQ(ss::negate(ss::negate(g)), g);
}

TEST(SignedGraph, SwitchingNegatesTheCut) {
    const SignedGraph g = triangle(1, 1, 1);
    const SignedGraph h = ss::switch_at(g, VertexSet{0});
    EXPECT_EQ(h, triangle(-1, -1, 1));
    EXPECT_EQ(ss::switch_at(g, VertexSet{}), g);
    EXPECT_EQ(ss::switch_at(g, VertexSet{0, 1, 2}), g);
    EXPECT_THROW(ss::switch_at(g, VertexSet{3}), std::out_of_range);
}

TEST(SignedGraph, SwitchBySignsMatchesSwitchAt) {
    const SignedGraph g = triangle(1, -1, 1);
    const std::vector<int> signs{1, -1, -1};
    EXPECT_EQ(ss::switch_by_signs(g, signs), ss::switch_at(g, VertexSet{1, 2}));
}

TEST(SignedGraph, DisjointUnionAndPadding) {
    const SignedGraph k2 = SignedGraph::from_edges(2, {{0, 1, 1}});
    const SignedGraph g = triangle(1, 1, -1);
    const SignedGraph u = ss::disjoint_union(g, k2);
    EXPECT_EQ(u.order(), 5u);
    EXPECT_EQ(u.sign(3, 4), 1);
    EXPECT_EQ(u.sign(1, 2), -1);
    EXPECT_EQ(ss::add_isolated_edges(g, 2), ss::disjoint_union(ss::disjoint_union(g, k2), k2));
    EXPECT_EQ(ss::add_isolated_edges(g, 0), g);
}

TEST(SignedGraph, Components) {
    const SignedGraph k2 = SignedGraph::from_edges(2, {{0, 1, -1}});
    const SignedGraph g = ss::disjoint_union(ss::disjoint_union(triangle(1, 1, 1), SignedGraph(1)), k2);
    const auto comps = ss::underlying_components(g);
    ASSERT_EQ(comps.size(), 3u);
    EXPECT_EQ(comps[0], (VertexSet{0, 1, 2}));
    EXPECT_EQ(comps[1], (VertexSet{3}));
    EXPECT_EQ(comps[2], (VertexSet{4, 5}));
    EXPECT_FALSE(ss::is_connected(g));
    EXPECT_TRUE(ss::is_connected(triangle(-1, 1, 1)));
    EXPECT_TRUE(ss::is_connected(SignedGraph(0)));
}

TEST(SignedGraph, PermuteAndInducedSubgraph) {
    const SignedGraph g = SignedGraph::from_edges(3, {{0, 1, -1}, {1, 2, 1}});
    const std::vector<std::size_t> perm{2, 0, 1};
    const SignedGraph h = ss::permute(g, perm);
    EXPECT_EQ(h.sign(2, 0), -1);
    EXPECT_EQ(h.sign(0, 1), 1);
    EXPECT_EQ(ss::induced_subgraph(g, VertexSet{1, 2}), SignedGraph::from_edges(2, {{0, 1, 1}}));
}

TEST(SignedGraph, VertexSetComplement) {
    const VertexSet x{3, 1, 1};
    EXPECT_EQ(x.size(), 2u);
    EXPECT_EQ(x.complement(5), (VertexSet{0, 2, 4}));
    EXPECT_TRUE(x.contains(3));
    EXPECT_FALSE(x.contains(2));
}

TEST(SignedGraph, TriangleCounts) {
    const auto balanced = ss::vertex_triangle_counts(triangle(1, -1, -1));
    const auto unbalanced = ss::vertex_triangle_counts(triangle(1, 1, -1));
    EXPECT_EQ(balanced[0], (ss::TriangleCounts{1, 0}));
    EXPECT_EQ(unbalanced[2], (ss::TriangleCounts{0, 1}));
}
