#include <gtest/gtest.h>

#include "properties.hpp"

namespace st = signed_spectra::testing;

namespace {

void expect_clean(const st::PropertyResult& r) {
    EXPECT_GE(r.cases, st::kPropertyCases) << r.name;
    EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
}

}  // namespace

TEST(Properties, SwitchingInvolution) { expect_clean(st::property_switching_involution(st::kPropertyCases, 101)); }
TEST(Properties, SwitchingComplement) { expect_clean(st::property_switching_complement(st::kPropertyCases, 102)); }
TEST(Properties, CharPolySwitchingInvariance) {
    expect_clean(st::property_charpoly_switching_invariance(st::kPropertyCases, 103));
}
TEST(Properties, CharPolyPermutationInvariance) {
    expect_clean(st::property_charpoly_permutation_invariance(st::kPropertyCases, 104));
}
TEST(Properties, DisjointUnionMultiplies) {
    expect_clean(st::property_disjoint_union_multiplicative(st::kPropertyCases, 105));
}
TEST(Properties, NegationReflectsCharPoly) {
    expect_clean(st::property_negation_reflects_charpoly(st::kPropertyCases, 106));
}
TEST(Properties, CycleSignsAreSwitchingInvariant) {
    expect_clean(st::property_cycle_sign_invariance(st::kPropertyCases, 107));
}
TEST(Properties, CharPolyMatchesInterpolation) {
    expect_clean(st::property_charpoly_matches_interpolation(st::kPropertyCases, 108));
}
TEST(Properties, SwitchingIsoMatchesExhaustive) {
    expect_clean(st::property_switching_iso_matches_exhaustive(st::kPropertyCases, 109));
}
