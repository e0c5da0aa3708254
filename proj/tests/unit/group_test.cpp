#include <gtest/gtest.h>

#include "sbrace/group.hpp"

using namespace sbrace;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const AlgebraError& e) {
        return e.code();
    }
    return ErrorCode::InternalDefect;
}

}  // namespace

TEST(Group, ValidatesSmallTables) {
    EXPECT_EQ(validate_group({{0, 1}, {1, 0}}).order(), 2);
    FiniteGroup c4 = validate_group({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
    EXPECT_EQ(c4, cyclic_group(4));
    ErrorCode c = code_of([] { validate_group({{0, 1}, {1, 1}}); });
    EXPECT_TRUE(c == ErrorCode::NotAssociative || c == ErrorCode::MissingInverse);
}

TEST(Group, RejectsMalformedTables) {
    EXPECT_EQ(code_of([] { validate_group({{0, 1}, {1, 2}}); }), ErrorCode::NotClosed);
    EXPECT_EQ(code_of([] { validate_group({{1, 0}, {0, 1}}); }), ErrorCode::NoIdentityAtZero);
}

TEST(Group, InversesAreInvolutive) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& [name, g] : small_groups(n))
            for (Elem a = 0; a < g.order(); ++a) {
                EXPECT_EQ(g.mul(a, g.inv(a)), 0) << name;
                EXPECT_EQ(g.inv(g.inv(a)), a) << name;
            }
}

TEST(Group, CentersAndDerivedSubgroups) {
    EXPECT_EQ(group_center(cyclic_group(4)), (Subset{0, 1, 2, 3}));
    EXPECT_EQ(group_center(symmetric_group3()), (Subset{0}));
    EXPECT_EQ(group_center(dihedral_group(4)).size(), 2u);
    EXPECT_EQ(derived_subgroup(cyclic_group(4)), (Subset{0}));
    EXPECT_EQ(derived_subgroup(symmetric_group3()).size(), 3u);
    EXPECT_EQ(derived_subgroup(quaternion_group()).size(), 2u);
}

TEST(Group, AutomorphismCounts) {
    EXPECT_EQ(enumerate_automorphisms(cyclic_group(2)), std::vector<ElementMap>{identity_map(2)});
    EXPECT_EQ(enumerate_automorphisms(cyclic_group(4)).size(), 2u);
    EXPECT_EQ(enumerate_automorphisms(direct_product(cyclic_group(2), cyclic_group(2))).size(), 6u);
    EXPECT_EQ(enumerate_automorphisms(symmetric_group3()).size(), 6u);
    EXPECT_EQ(enumerate_automorphisms(dihedral_group(4)).size(), 8u);
    EXPECT_EQ(enumerate_automorphisms(quaternion_group()).size(), 24u);
    auto autos = enumerate_automorphisms(dihedral_group(4));
    EXPECT_TRUE(std::is_sorted(autos.begin(), autos.end()));
}

TEST(Group, Homomorphisms) {
    FiniteGroup c4 = cyclic_group(4);
    EXPECT_TRUE(is_homomorphism(identity_map(4), c4, c4));
    EXPECT_TRUE(is_homomorphism(constant_map(4, 0), c4, c4));
    EXPECT_TRUE(is_homomorphism(ElementMap{{0, 3, 2, 1}}, c4, c4));
    EXPECT_FALSE(is_homomorphism(ElementMap{{0, 2, 1, 3}}, c4, c4));
}

TEST(Group, Actions) {
    FiniteGroup s3 = symmetric_group3();
    EXPECT_NO_THROW(GroupAction::trivial(s3, cyclic_group(3), false));
    std::vector<ElementMap> conj;
    for (Elem g = 0; g < 6; ++g) {
        ElementMap m;
        for (Elem x = 0; x < 6; ++x) m.values.push_back(s3.conj(g, x));
        conj.push_back(m);
    }
    EXPECT_NO_THROW(GroupAction::make(s3, s3, conj, false));
    // Swapping two images breaks the homomorphism law.
    std::swap(conj[1], conj[2]);
    EXPECT_EQ(code_of([&] { GroupAction::make(s3, s3, conj, false); }), ErrorCode::NotHomomorphic);
}

TEST(Group, SemidirectProducts) {
    FiniteGroup c4 = cyclic_group(4), c2 = cyclic_group(2);
    EXPECT_EQ(semidirect_product(c4, c2, GroupAction::trivial(c2, c4, false)), direct_product(c4, c2));
    GroupAction inversion = GroupAction::make(c2, c4, {identity_map(4), ElementMap{{0, 3, 2, 1}}}, false);
    FiniteGroup d4 = semidirect_product(c4, c2, inversion);
    EXPECT_FALSE(d4.is_abelian());
    EXPECT_EQ(group_center(d4).size(), 2u);
    FiniteGroup p = semidirect_product(c2, cyclic_group(3), GroupAction::trivial(cyclic_group(3), c2, false));
    EXPECT_TRUE(p.is_abelian());
    EXPECT_EQ(p.order(), 6);
}

TEST(Group, SmallGroupsAreNonIsomorphic) {
    for (int n = 1; n <= 8; ++n) {
        auto gs = small_groups(n);
        for (std::size_t i = 0; i < gs.size(); ++i)
            for (std::size_t j = i + 1; j < gs.size(); ++j)
                EXPECT_TRUE(enumerate_isomorphisms(gs[i].group, gs[j].group).empty()) << gs[i].name << " " << gs[j].name;
    }
}

TEST(Group, Quotients) {
    FiniteGroup d4 = dihedral_group(4);
    GroupQuotient q = quotient_group(d4, group_center(d4));
    EXPECT_EQ(q.group.order(), 4);
    EXPECT_TRUE(is_homomorphism(q.projection, d4, q.group));
    EXPECT_TRUE(q.group.is_abelian());
}
