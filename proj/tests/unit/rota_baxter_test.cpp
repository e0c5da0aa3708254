#include <gtest/gtest.h>

#include "sbrace/rota_baxter.hpp"

using namespace sbrace;

namespace {

ElementMap inversion(const FiniteGroup& g) {
    ElementMap m;
    for (Elem x = 0; x < g.order(); ++x) m.values.push_back(g.inv(x));
    return m;
}

RRBGroup conjugation_rrb(const RBOperator& r) {
    std::vector<ElementMap> images;
    for (Elem g = 0; g < r.group.order(); ++g) {
        ElementMap m;
        for (Elem x = 0; x < r.group.order(); ++x) m.values.push_back(r.group.conj(g, x));
        images.push_back(m);
    }
    return validate_rrb(r.group, r.group, GroupAction::make(r.group, r.group, images, false), r.map);
}

}  // namespace

TEST(RotaBaxter, BasicOperators) {
    FiniteGroup c4 = cyclic_group(4), s3 = symmetric_group3();
    EXPECT_TRUE(check_rb(s3, constant_map(6, 0)));
    EXPECT_TRUE(check_rb(c4, inversion(c4)));
    EXPECT_TRUE(brace_from_rb(validate_rb(c4, constant_map(4, 0))).is_trivial());
    EXPECT_TRUE(brace_from_rb(validate_rb(c4, inversion(c4))).is_trivial());
    SkewBrace s = brace_from_rb(validate_rb(s3, inversion(s3)));
    EXPECT_FALSE(s.is_trivial());
}

TEST(RotaBaxter, EnumerationCounts) {
    EXPECT_EQ(enumerate_rb(cyclic_group(2)).size(), 2u);
    // Brute force over all 27 maps on C3.
    FiniteGroup c3 = cyclic_group(3);
    int count = 0;
    for (int code = 0; code < 27; ++code) {
        ElementMap m{{code % 3, code / 3 % 3, code / 9}};
        count += bool(check_rb(c3, m));
    }
    EXPECT_EQ(static_cast<int>(enumerate_rb(c3).size()), count);
    auto c4 = enumerate_rb(cyclic_group(4));
    auto has = [&](const ElementMap& m) {
        return std::any_of(c4.begin(), c4.end(), [&](const RBOperator& r) { return r.map == m; });
    };
    EXPECT_TRUE(has(constant_map(4, 0)));
    EXPECT_TRUE(has(inversion(cyclic_group(4))));
    EXPECT_THROW(enumerate_rb(cyclic_group(7)), AlgebraError);
}

TEST(RotaBaxter, InducedBraceLambdaIsConjugation) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& [name, g] : small_groups(n))
            for (const auto& r : enumerate_rb(g)) {
                SkewBrace b = brace_from_rb(r);
                for (Elem x = 0; x < n; ++x)
                    for (Elem y = 0; y < n; ++y) ASSERT_EQ(b.lambda(x, y), g.conj(r(x), y)) << name;
            }
}

TEST(RelativeRotaBaxter, FromBraces) {
    SkewBrace b = zbrace(4);
    RRBGroup q = rrb_from_brace(b);
    EXPECT_TRUE(check_rrb(q));
    EXPECT_EQ(brace_from_rrb(q), b);
    EXPECT_EQ(descendent_circle(q, 1, 1), 0);
    EXPECT_EQ(descendent_circle(q, 0, 0), 0);
    for (int n = 1; n <= 8; ++n)
        for (const auto& e : enumerate_braces(n)) EXPECT_EQ(brace_from_rrb(rrb_from_brace(e.brace)), e.brace);
}

TEST(RelativeRotaBaxter, ConjugationGroupsMatchRbBraces) {
    for (const auto& r : enumerate_rb(symmetric_group3())) EXPECT_EQ(brace_from_rrb(conjugation_rrb(r)), brace_from_rb(r));
}

TEST(RelativeRotaBaxter, TrivialActionNeedsMultiplicativeR) {
    FiniteGroup c2 = cyclic_group(2), c4 = cyclic_group(4);
    GroupAction triv = GroupAction::trivial(c4, c2, false);
    try {
        validate_rrb(c2, c4, triv, ElementMap{{0, 1}});
        FAIL() << "expected RRBAxiomFails";
    } catch (const AlgebraError& e) {
        EXPECT_EQ(e.code(), ErrorCode::RRBAxiomFails);
    }
    EXPECT_EQ(brace_from_rrb(validate_rrb(c2, c4, triv, ElementMap{{0, 0}})), trivial_brace(c2));
}

TEST(RelativeRotaBaxter, SemidirectOperators) {
    FiniteGroup c2 = cyclic_group(2);
    RRBGroup triv = validate_rrb(c2, c2, GroupAction::trivial(c2, c2, false), constant_map(2, 0));
    EXPECT_TRUE(check_rb(rb_on_semidirect(triv).group, rb_on_semidirect(triv).map));
    for (int n = 1; n <= 8; ++n)
        for (const auto& e : enumerate_braces(n)) {
            RBOperator r = rb_on_semidirect(rrb_from_brace(e.brace));
            EXPECT_EQ(r.group.order(), n * n);
            EXPECT_TRUE(check_rb(r.group, r.map));
        }
    RBOperator s3 = rb_on_semidirect(rrb_from_brace(trivial_brace(symmetric_group3())));
    EXPECT_EQ(s3.group.order(), 36);
    EXPECT_TRUE(check_rb(s3.group, s3.map));
}

TEST(RelativeRotaBaxter, MorphismsLift) {
    SkewBrace b = zbrace(4);
    RRBGroup q = rrb_from_brace(b);
    RBOperator r = rb_on_semidirect(q);
    EXPECT_EQ(map_rrb_hom(identity_map(4), identity_map(4), q, q), identity_map(16));
    for (const auto& f : find_brace_isomorphisms(b, b)) {
        ElementMap lifted = map_rrb_hom(f, f, q, q);
        EXPECT_TRUE(is_rb_homomorphism(lifted, r, r));
    }
    SkewBrace one = trivial_brace(cyclic_group(1));
    RRBGroup q1 = rrb_from_brace(one);
    EXPECT_EQ(map_rrb_hom(constant_map(4, 0), constant_map(4, 0), q, q1), constant_map(16, 0));
    EXPECT_THROW(map_rrb_hom(ElementMap{{0, 3, 2, 1}}, identity_map(4), q, q), AlgebraError);
}
