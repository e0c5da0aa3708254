#include <gtest/gtest.h>

#include "sbrace/isoclinism.hpp"
#include "sbrace/square.hpp"

using namespace sbrace;

namespace {

SkewBrace catalog_brace(int n, int k) { return enumerate_braces(n).at(k - 1).brace; }

}  // namespace

TEST(Isoclinism, Annihilators) {
    EXPECT_EQ(annihilator(trivial_brace(cyclic_group(4))), (Subset{0, 1, 2, 3}));
    EXPECT_EQ(annihilator(trivial_brace(symmetric_group3())), (Subset{0}));
    EXPECT_EQ(annihilator(zbrace(4)), (Subset{0, 2}));
    EXPECT_EQ(brace_commutator(trivial_brace(cyclic_group(4))), (Subset{0}));
    EXPECT_EQ(brace_commutator(zbrace(4)), (Subset{0, 2}));
}

TEST(Isoclinism, ThetaMaps) {
    SkewBrace b = zbrace(4);
    for (Elem x = 0; x < 4; ++x)
        for (Elem y = 0; y < 4; ++y) {
            EXPECT_EQ(theta(b, x, y), 0);
            EXPECT_EQ(theta_star(b, x, y), b.plus(b.lambda(x, y), b.add().inv(y)));
        }
}

TEST(Isoclinism, IdentityWitness) {
    SkewBrace b = zbrace(8);
    IsoclinismData d = isoclinism_data(b);
    IsoclinismWitness w{identity_map(d.quotient.brace.order()), identity_map(static_cast<int>(d.commutator.size()))};
    EXPECT_TRUE(check_isoclinism(b, b, w));
    EXPECT_TRUE(find_isoclinism(b, b).has_value());
}

TEST(Isoclinism, TrivialBracesOfD4AndQ8) {
    SkewBrace d4 = trivial_brace(dihedral_group(4)), q8 = trivial_brace(quaternion_group());
    auto w = find_isoclinism(d4, q8);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(check_isoclinism(d4, q8, *w));
    IsoclinismWitness bad = *w;
    ASSERT_EQ(bad.xi2.size(), 2);
    bad.xi2.values = {0, 0};
    EXPECT_FALSE(check_isoclinism(d4, q8, bad));
    IsoclinismWitness lifted = square_isoclinism(d4, q8, *w);
    EXPECT_TRUE(check_isoclinism(square_brace(d4), square_brace(q8), lifted));
}

TEST(Isoclinism, NotIsoclinic) {
    EXPECT_FALSE(find_isoclinism(trivial_brace(cyclic_group(4)), trivial_brace(symmetric_group3())).has_value());
    EXPECT_FALSE(find_isoclinism(trivial_brace(cyclic_group(2)), zbrace(4)).has_value());
}

TEST(Isoclinism, SquareHypothesis) {
    EXPECT_TRUE(square_annihilator_hypothesis(trivial_brace(dihedral_group(4))));
    EXPECT_TRUE(square_annihilator_hypothesis(zbrace(4)));
    SkewBrace bad = catalog_brace(6, 4);
    EXPECT_FALSE(square_annihilator_hypothesis(bad));
    try {
        square_isoclinism(bad, bad, *find_isoclinism(bad, bad));
        ADD_FAILURE() << "expected HypothesisFails";
    } catch (const AlgebraError& e) {
        EXPECT_EQ(e.code(), ErrorCode::HypothesisFails);
    }
    try {
        square_annihilator_hypothesis(trivial_brace(cyclic_group(17)));
        ADD_FAILURE() << "expected OrderTooLarge";
    } catch (const AlgebraError& e) {
        EXPECT_EQ(e.code(), ErrorCode::OrderTooLarge);
    }
}

TEST(Isoclinism, SquareFactsOnSmallBraces) {
    for (int n : {2, 3, 4, 6}) {
        for (const auto& e : enumerate_braces(n)) {
            SquareFacts f = square_facts(e.brace);
            EXPECT_TRUE(f.ann_product_inside) << f.ann_product_inside.witness;
            EXPECT_TRUE(f.ann_product_ideal);
            EXPECT_TRUE(f.ann_inside_fix_center);
            EXPECT_TRUE(f.center_inside_fix_center);
        }
    }
}
