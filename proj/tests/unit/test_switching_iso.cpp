#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "signed_spectra/families.hpp"
#include "signed_spectra/switching_iso.hpp"

namespace ss = signed_spectra;
using ss::SignedGraph;

namespace {

SignedGraph cycle(std::size_t n, int last_sign) {
    std::vector<ss::SignedEdge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({0, n - 1, last_sign});
    return SignedGraph::from_edges(n, edges);
}

}  // namespace

TEST(SwitchingIso, BalancedAndUnbalancedCyclesDiffer) {
    for (std::size_t n = 3; n <= 8; ++n) {
        EXPECT_FALSE(ss::is_switching_isomorphic(cycle(n, 1), cycle(n, -1))) << n;
        EXPECT_TRUE(ss::is_switching_isomorphic(cycle(n, -1), ss::switch_at(cycle(n, -1), ss::VertexSet{0, 2})));
    }
}

TEST(SwitchingIso, DifferentOrdersOrUnderlyingGraphs) {
    EXPECT_FALSE(ss::is_switching_isomorphic(SignedGraph(3), SignedGraph(4)));
    const SignedGraph path = SignedGraph::from_edges(3, {{0, 1, 1}, {1, 2, 1}});
    const SignedGraph edge_plus_vertex = SignedGraph::from_edges(3, {{0, 1, 1}});
    EXPECT_FALSE(ss::is_switching_isomorphic(path, edge_plus_vertex));
}

TEST(SwitchingIso, WitnessReproducesTarget) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 9;
        const SignedGraph g = ss::testing::random_signed_graph(rng, n, 0.6);
        const SignedGraph h = ss::permute(ss::switch_at(g, ss::testing::random_vertex_set(rng, n)),
                                          ss::testing::random_permutation(rng, n));
        const auto w = ss::find_switching_isomorphism(g, h);
        ASSERT_TRUE(w.has_value());
        EXPECT_EQ(ss::permute(ss::switch_by_signs(g, w->signs), w->perm), h);
    }
}

TEST(SwitchingIso, AgreesWithExhaustiveOnRandomPairsUpToTen) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 9;
        const SignedGraph g = ss::testing::random_signed_graph(rng, n, 0.5);
        SignedGraph h = ss::permute(g, ss::testing::random_permutation(rng, n));
        auto edges = h.edges();
        if (!edges.empty() && trial % 2 == 0) {
            edges[trial % edges.size()].sign *= -1;
            h = SignedGraph::from_edges(n, edges);
        }
        EXPECT_EQ(ss::is_switching_isomorphic(g, h), ss::is_switching_isomorphic_exhaustive(g, h)) << trial;
    }
}

TEST(SwitchingIso, ExhaustiveRefusesLargeOrders) {
    EXPECT_THROW(ss::is_switching_isomorphic_exhaustive(SignedGraph(17), SignedGraph(17)), std::invalid_argument);
}

TEST(SwitchingIso, SignedIsomorphismKeepsSigns) {
    const SignedGraph g = SignedGraph::from_edges(3, {{0, 1, -1}, {1, 2, 1}});
    const SignedGraph h = SignedGraph::from_edges(3, {{0, 1, 1}, {1, 2, -1}});
    const auto perm = ss::find_signed_isomorphism(g, h);
    ASSERT_TRUE(perm.has_value());
    EXPECT_EQ(ss::permute(g, *perm), h);
    EXPECT_FALSE(ss::find_signed_isomorphism(g, SignedGraph::from_edges(3, {{0, 1, 1}, {1, 2, 1}})).has_value());
}

TEST(SwitchingIso, FriendshipGraphIsNegativeOfA1) {
    for (int l = 2; l <= 12; ++l) {
        const auto f = ss::construct_literal({ss::FamilyId::A20, {1, l}, false, 0});
        const auto a1 = ss::construct({ss::FamilyId::A1, {1, l}, true, 0});
        EXPECT_TRUE(ss::is_switching_isomorphic(f, a1)) << l;
    }
}

TEST(SwitchingIso, LargeSymmetricGraphsAreFast) {
    const auto f = ss::construct_literal({ss::FamilyId::A20, {1, 100}, false, 0});
    const auto a1 = ss::construct({ss::FamilyId::A1, {1, 100}, true, 0});
    EXPECT_TRUE(ss::is_switching_isomorphic(f, a1));
    const auto a22 = ss::construct({ss::FamilyId::A22, {12}, false, 0});
    const auto ainf = ss::construct({ss::FamilyId::AInf, {12, 12}, false, 0});
    EXPECT_FALSE(ss::is_switching_isomorphic(a22, ainf));
}
