#include <gtest/gtest.h>

#include "signed_spectra/polynomial.hpp"

namespace ss = signed_spectra;
using ss::Polynomial;

TEST(Polynomial, TrimsLeadingZeros) {
    const Polynomial p{1, 2, 0, 0};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(Polynomial({0, 0}).degree(), -1);
    EXPECT_EQ(Polynomial{}.to_string(), "0");
}

TEST(Polynomial, Formatting) {
    EXPECT_EQ(Polynomial({-2, -3, 0, 1}).to_string(), "x^3 - 3x - 2");
    EXPECT_EQ(Polynomial({5, 0, -1}).to_string(), "-x^2 + 5");
    EXPECT_EQ(Polynomial({-2, -3, 0, 1}).to_json(), "[-2, -3, 0, 1]");
}

TEST(Polynomial, Arithmetic) {
    const Polynomial a{-1, 1};
    const Polynomial b{1, 1};
    EXPECT_EQ(a * b, Polynomial({-1, 0, 1}));
    EXPECT_EQ(ss::pow(b, 3), Polynomial({1, 3, 3, 1}));
    EXPECT_EQ(ss::pow(b, 0), Polynomial({1}));
    EXPECT_EQ(-a, Polynomial({1, -1}));
    EXPECT_EQ(Polynomial::linear(4), Polynomial({-4, 1}));
}

TEST(Polynomial, EvaluationAndReflection) {
    const Polynomial p{-2, -3, 0, 1};
    EXPECT_EQ(p(2), 0);
    EXPECT_EQ(p(-1), 0);
    EXPECT_EQ(p(3), 16);
    EXPECT_EQ(p.reflected(), Polynomial({-2, 3, 0, -1}));
    EXPECT_TRUE(p.is_monic());
    EXPECT_FALSE(Polynomial({1, 2}).is_monic());
    EXPECT_EQ(p.coefficient(7), 0);
}

TEST(Polynomial, SyntheticDivision) {
    const Polynomial p{-2, -3, 0, 1};
    const auto d = p.divide_by_linear(-1);
    EXPECT_EQ(d.quotient, Polynomial({-2, -1, 1}));
    EXPECT_EQ(d.remainder, 0);
    const auto e = p.divide_by_linear(1);
    EXPECT_EQ(e.remainder, -4);
}

TEST(Polynomial, BigCoefficients) {
    const Polynomial p = ss::pow(Polynomial({1, 1}), 200);
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), 200, 100);
    EXPECT_EQ(p.coefficient(100), binom);
    EXPECT_EQ(p(1), mpz_class(1) << 200);
}
