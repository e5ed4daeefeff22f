#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "signed_spectra/families.hpp"
#include "signed_spectra/switching_iso.hpp"

namespace ss = signed_spectra;
using ss::CharTriple;
using ss::FamilyId;
using ss::FamilySpec;

TEST(Families, NamesRoundTrip) {
    for (FamilyId id : ss::all_families()) {
        EXPECT_EQ(ss::parse_family(ss::family_name(id)), id);
    }
    EXPECT_EQ(ss::parse_family("A∞"), FamilyId::AInf);
    EXPECT_EQ(ss::parse_family("Ainf"), FamilyId::AInf);
    EXPECT_FALSE(ss::parse_family("A26").has_value());
    EXPECT_FALSE(ss::parse_family("B1").has_value());
}

TEST(Families, Arity) {
    EXPECT_EQ(ss::param_arity(FamilyId::A22), 1u);
    EXPECT_EQ(ss::param_arity(FamilyId::A0), 2u);
    EXPECT_EQ(ss::param_arity(FamilyId::A5), 3u);
    EXPECT_EQ(ss::param_arity(FamilyId::A12), 4u);
    EXPECT_EQ(ss::param_arity(FamilyId::A16), 0u);
}

TEST(Families, EveryInstanceUpTo24MatchesItsPolynomial) {
    std::size_t count = 0;
    for (const FamilySpec& base : ss::parameter_sets_up_to(24)) {
        for (const bool negated : {false, true}) {
            FamilySpec spec = base;
            spec.negated = negated;
            const ss::SignedGraph g = ss::construct(spec);
            ASSERT_EQ(static_cast<int>(g.order()), ss::order(spec)) << ss::to_compact(spec);
            EXPECT_EQ(ss::testing::charpoly_by_interpolation(g), ss::predicted_triple(spec).polynomial())
                << ss::to_compact(spec);
            ++count;
        }
    }
    EXPECT_GT(count, 800u);
}

TEST(Families, ClosedFormExamples) {
    EXPECT_EQ(ss::predicted_triple({FamilyId::A0, {2, 2}, false, 0}), CharTriple::make(0, 5, 4));
    EXPECT_EQ(ss::predicted_triple({FamilyId::A22, {6}, false, 0}), CharTriple::make(0, 25, 12));
    EXPECT_EQ(ss::predicted_triple({FamilyId::A1, {1, 3}, true, 0}), CharTriple::make(1, 6, 7));
    EXPECT_EQ(ss::predicted_triple({FamilyId::A3, {4, 4}, false, 2}), CharTriple::make(0, 25, 14));
    EXPECT_EQ(ss::predicted_triple({FamilyId::A12, {6, 4, 3, 4}, false, 0}), CharTriple::make(-1, 92, 17));
}

TEST(Families, A22IsTheCrownGraph) {
    const ss::SignedGraph g = ss::construct({FamilyId::A22, {3}, false, 0});
    for (std::size_t v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 2u);
    EXPECT_TRUE(ss::is_connected(g));
    EXPECT_EQ(ss::triple_of(g), CharTriple::make(0, 4, 6));
}

TEST(Families, PaddingAddsIsolatedEdges) {
    const FamilySpec base{FamilyId::A3, {4, 4}, false, 0};
    FamilySpec padded = base;
    padded.pad = 2;
    EXPECT_EQ(ss::construct(padded), ss::add_isolated_edges(ss::construct(base), 2));
    EXPECT_EQ(ss::order(padded), ss::order(base) + 4);
}

TEST(Families, RestrictionErrors) {
    EXPECT_THROW(ss::construct({FamilyId::A0, {1, 2}, false, 0}), ss::RestrictionError);
    EXPECT_THROW(ss::construct({FamilyId::A0, {2, 3}, false, 0}), ss::RestrictionError);
    EXPECT_THROW(ss::construct({FamilyId::A22, {2}, false, 0}), ss::RestrictionError);
    EXPECT_THROW(ss::construct({FamilyId::A5, {3, 7, 1}, false, 0}), ss::RestrictionError);
    EXPECT_THROW(ss::construct({FamilyId::A12, {6, 3, 3, 5}, false, 0}), ss::RestrictionError);
    EXPECT_THROW(ss::construct({FamilyId::A0, {2}, false, 0}), ss::RestrictionError);
    EXPECT_THROW(ss::construct({FamilyId::A0, {2, 2}, false, -1}), ss::RestrictionError);
    try {
        ss::validate({FamilyId::A1, {3, 1}, false, 0});
        FAIL() << "expected RestrictionError";
    } catch (const ss::RestrictionError& e) {
        EXPECT_EQ(e.family(), FamilyId::A1);
    }
    EXPECT_FALSE(ss::satisfies_restrictions({FamilyId::AInf, {3, 2}, false, 0}));
    EXPECT_TRUE(ss::satisfies_restrictions({FamilyId::AInf, {3, 3}, false, 0}));
}

TEST(Families, LiteralConstructionIgnoresNormalFormRestrictions) {
    const FamilySpec spec{FamilyId::A0, {2, 5}, false, 0};
    EXPECT_EQ(ss::construct_literal(spec).order(), 7u);
    EXPECT_EQ(ss::triple_of(ss::construct_literal(spec)), CharTriple::make(-3, 14, 7));
}

TEST(Families, CompactFormat) {
    const FamilySpec spec{FamilyId::A3, {4, 4}, true, 2};
    EXPECT_EQ(ss::to_compact(spec), "-A3(4,4)+2K2");
    EXPECT_EQ(ss::parse_spec("-A3(4,4)+2K2"), spec);
    EXPECT_EQ(ss::parse_spec(" −A3( 4 , 4 ) + K2 + K2 "), spec);
    EXPECT_EQ(ss::parse_spec("A16"), (FamilySpec{FamilyId::A16, {}, false, 0}));
    EXPECT_EQ(ss::parse_spec("A∞(5,3)+K2"), (FamilySpec{FamilyId::AInf, {5, 3}, false, 1}));
    for (const char* bad : {"", "A3(4,", "A3(4,4)+", "A3(4,4)+xK2", "Q(1)", "A3(4,4) junk"}) {
        EXPECT_ANY_THROW(ss::parse_spec(bad)) << bad;
    }
}

TEST(Families, JsonFormat) {
    const FamilySpec spec{FamilyId::A12, {6, 4, 3, 4}, true, 1};
    EXPECT_EQ(ss::parse_spec(ss::to_json(spec)), spec);
    EXPECT_ANY_THROW(ss::parse_spec(R"({"params": [1]})"));
}

TEST(Families, SignSymmetryMatchesSwitchingIsomorphism) {
    for (const FamilySpec& spec : ss::parameter_sets_up_to(14)) {
        const ss::SignedGraph g = ss::construct(spec);
        EXPECT_EQ(ss::is_sign_symmetric(spec), ss::is_switching_isomorphic(g, ss::negate(g))) << ss::to_compact(spec);
    }
}

TEST(Families, InstanceListIsSortedAndUnique) {
    const auto specs = ss::parameter_sets_up_to(20);
    EXPECT_TRUE(std::is_sorted(specs.begin(), specs.end()));
    EXPECT_EQ(std::set<FamilySpec>(specs.begin(), specs.end()).size(), specs.size());
    for (const auto& s : specs) {
        EXPECT_TRUE(ss::satisfies_restrictions(s));
        EXPECT_LE(ss::order(s), 20);
    }
    EXPECT_EQ(ss::instances_up_to(20).size(), 598u);
    EXPECT_THROW(ss::instances_up_to(3), std::invalid_argument);
}
