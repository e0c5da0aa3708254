#include <gtest/gtest.h>

#include "sbrace/square.hpp"

using namespace sbrace;

TEST(Square, TrivialAbelianSquareIsTrivial) {
    EXPECT_TRUE(square_brace(trivial_brace(cyclic_group(2))).is_trivial());
    EXPECT_TRUE(square_brace(trivial_brace(cyclic_group(4))).is_trivial());
}

TEST(Square, TrivialS3Formula) {
    FiniteGroup s3 = symmetric_group3();
    SkewBrace sq = square_brace(trivial_brace(s3));
    bool differs = false;
    for (Elem h1 = 0; h1 < 6; ++h1)
        for (Elem g1 = 0; g1 < 6; ++g1)
            for (Elem h2 = 0; h2 < 6; ++h2)
                for (Elem g2 = 0; g2 < 6; ++g2) {
                    Elem x = pair_index(h1, g1, 6), y = pair_index(h2, g2, 6);
                    Elem odot = pair_index(s3.mul(h1, h2), s3.mul(s3.mul(s3.mul(h1, g2), s3.inv(h1)), g1), 6);
                    ASSERT_EQ(sq.circ(x, y), odot);
                    differs = differs || sq.plus(x, y) != sq.circ(x, y);
                }
    EXPECT_TRUE(differs);
}

TEST(Square, WorkedExampleEntry) {
    SkewBrace sq = square_brace(zbrace(4));
    EXPECT_EQ(sq.plus(pair_index(1, 1, 4), pair_index(1, 1, 4)), 0);
}

TEST(Square, ViaRotaBaxter) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& e : enumerate_braces(n)) EXPECT_EQ(square_via_rb(e.brace), square_brace(e.brace));
    SkewBrace s3 = trivial_brace(symmetric_group3());
    EXPECT_EQ(square_via_rb(s3), square_brace(s3));
}

TEST(Square, LambdaTwoWays) {
    auto p = lambda_square(zbrace(4), pair_index(1, 1, 4), pair_index(1, 0, 4));
    EXPECT_EQ(p.by_conjugation, p.intrinsic);
    for (Elem x = 0; x < 16; ++x) EXPECT_EQ(lambda_square(zbrace(4), x, 0).intrinsic, 0);
    for (const auto& lp : lambda_square_table(trivial_brace(symmetric_group3()))) EXPECT_EQ(lp.by_conjugation, lp.intrinsic);
}

TEST(Double, TrivialDoubleIsTrivial) {
    EXPECT_TRUE(double_brace(trivial_brace(symmetric_group3())).is_trivial());
    EXPECT_TRUE(double_brace(trivial_brace(quaternion_group())).is_trivial());
}

TEST(Double, WorkedExample) {
    SkewBrace b = zbrace(4);
    EXPECT_TRUE(double_precondition(b));
    SquareVsDouble r = square_vs_double(b);
    EXPECT_FALSE(r.tables_equal);
    ASSERT_EQ(r.inner_lambda.size(), 4u);
    EXPECT_FALSE(r.inner_lambda[1]);
    EXPECT_TRUE(r.inner_lambda[0]);
}

TEST(Double, ComparisonOnTrivialBraces) {
    EXPECT_TRUE(square_vs_double(trivial_brace(cyclic_group(2))).tables_equal);
    SquareVsDouble s3 = square_vs_double(trivial_brace(symmetric_group3()));
    EXPECT_FALSE(s3.tables_equal);
    ASSERT_TRUE(s3.isomorphic.has_value());
    EXPECT_FALSE(*s3.isomorphic);
}

TEST(Double, PreconditionFailuresRaise) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& e : enumerate_braces(n)) {
            if (double_precondition(e.brace)) {
                EXPECT_NO_THROW(double_brace(e.brace));
            } else {
                EXPECT_THROW(double_brace(e.brace), AlgebraError);
            }
        }
}

TEST(Square, HomomorphismsLift) {
    SkewBrace b = zbrace(4);
    SkewBrace sq = square_brace(b);
    EXPECT_EQ(square_hom(identity_map(4), b, b), identity_map(16));
    EXPECT_EQ(square_hom(constant_map(4, 0), b, b), constant_map(16, 0));
    for (const auto& f : find_brace_isomorphisms(b, b)) {
        ElementMap lifted = square_hom(f, b, b);
        EXPECT_TRUE(is_brace_homomorphism(lifted, sq, sq));
        EXPECT_TRUE(is_bijective(lifted, 16));
    }
    EXPECT_THROW(square_hom(ElementMap{{0, 2, 1, 3}}, b, b), AlgebraError);
}
