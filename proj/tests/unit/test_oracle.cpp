#include <gtest/gtest.h>

#include <set>

#include "signed_spectra/oracle.hpp"
#include "signed_spectra/spectral.hpp"
#include "signed_spectra/switching_iso.hpp"

namespace ss = signed_spectra;
using ss::SignedGraph;

namespace {

// Every signed graph on n vertices, by bit pattern over the upper triangle.
std::vector<SignedGraph> all_signed_graphs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) total *= 3;
    std::vector<SignedGraph> out;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<ss::SignedEdge> edges;
        std::size_t c = code;
        for (const auto& [u, v] : slots) {
            const std::size_t digit = c % 3;
            c /= 3;
            if (digit) edges.push_back({u, v, digit == 1 ? 1 : -1});
        }
        out.push_back(SignedGraph::from_edges(n, edges));
    }
    return out;
}

}  // namespace

TEST(Oracle, UnderlyingGraphCounts) {
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(ss::nonisomorphic_graphs(n).size(), expected[n - 1]) << n;
}

TEST(Oracle, SwitchingClassCounts) {
    const std::vector<std::size_t> expected{1, 2, 5, 18, 100, 1242};
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(ss::enumerate_switching_classes(n).size(), expected[n - 1]) << n;
}

TEST(Oracle, SevenVertices) {
    ss::OracleOptions opts;
    opts.jobs = 2;
    EXPECT_EQ(ss::enumerate_switching_classes(7, opts).size(), 43425u);
}

TEST(Oracle, TriangleHasTwoClasses) {
    const auto classes = ss::enumerate_switching_classes(3);
    std::size_t triangles = 0;
    for (const auto& g : classes) triangles += g.edge_count() == 3 ? 1 : 0;
    EXPECT_EQ(triangles, 2u);
}

TEST(Oracle, KeysAgreeWithExhaustiveTestUpToFive) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto graphs = all_signed_graphs(n);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            for (std::size_t j = i; j < graphs.size(); ++j) {
                const bool same_key = ss::switching_class_key(graphs[i]) == ss::switching_class_key(graphs[j]);
                ASSERT_EQ(same_key, ss::is_switching_isomorphic_exhaustive(graphs[i], graphs[j])) << n << ' ' << i << ' ' << j;
            }
        }
    }
    // n = 5 has 3^10 graphs; compare key classes against the class representatives instead of all pairs
    const auto reps = ss::enumerate_switching_classes(5);
    std::set<ss::SwitchingClassKey> keys;
    for (const auto& r : reps) keys.insert(ss::switching_class_key(r));
    EXPECT_EQ(keys.size(), reps.size());
    std::set<ss::SwitchingClassKey> seen;
    for (const auto& g : all_signed_graphs(5)) {
        const auto key = ss::switching_class_key(g);
        ASSERT_TRUE(keys.count(key));
        seen.insert(key);
    }
    EXPECT_EQ(seen.size(), reps.size());
}

TEST(Oracle, RepresentativesArePairwiseDistinct) {
    const auto reps = ss::enumerate_switching_classes(5);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            if (reps[i].edge_count() != reps[j].edge_count()) continue;
            EXPECT_FALSE(ss::is_switching_isomorphic_exhaustive(reps[i], reps[j])) << i << ' ' << j;
        }
    }
}

TEST(Oracle, ClassificationUpToSix) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto r = ss::verify_classification(n);
        EXPECT_TRUE(r.passed()) << n << ' ' << r.to_json();
    }
}

TEST(Oracle, ClassificationAtSeven) {
    ss::OracleOptions opts;
    opts.jobs = 2;
    const auto r = ss::verify_classification(7, opts);
    EXPECT_TRUE(r.passed()) << r.to_json();
}

TEST(Oracle, Bounds) {
    EXPECT_THROW(ss::enumerate_switching_classes(0), ss::OracleBoundError);
    EXPECT_THROW(ss::enumerate_switching_classes(8), ss::OracleBoundError);
    EXPECT_THROW(ss::enumerate_switching_classes(9, {true, 0}), ss::OracleBoundError);
    EXPECT_THROW(ss::switching_class_key(SignedGraph(9)), std::invalid_argument);
}
