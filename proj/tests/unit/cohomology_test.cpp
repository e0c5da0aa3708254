#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "sbrace/cohomology_rb.hpp"
#include "sbrace/cohomology_rrb.hpp"
#include "sbrace/cohomology_sb.hpp"

using namespace sbrace;

namespace {

FiniteGroup c2() { return cyclic_group(2); }

template <class F>
std::vector<std::vector<Elem>> cocycles_of(const SlotSpace& s, F&& is_cocycle) {
    std::vector<std::vector<Elem>> out;
    for_each_assignment(s, kSearchBound, [&](const std::vector<Elem>& v) {
        if (is_cocycle(v)) out.push_back(v);
    });
    return out;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const AlgebraError& e) {
        return e.code();
    }
    return ErrorCode::InternalDefect;
}

}  // namespace

// ---- skew brace cohomology ----

TEST(SbCohomology, TripletValidation) {
    EXPECT_TRUE(check_good_triplet(trivial_triplet(zbrace(4), c2())));
    EXPECT_TRUE(check_good_triplet(trivial_triplet(trivial_brace(symmetric_group3()), cyclic_group(3))));
}

TEST(SbCohomology, ZeroAndC2Scale) {
    ActionTriplet t = trivial_triplet(trivial_brace(c2()), c2());
    SbCochain zero{Cochain2::zero(2, 2), Cochain2::zero(2, 2)};
    EXPECT_TRUE(is_sb_cocycle(t, zero));
    EXPECT_EQ(is_sb_coboundary(t, zero), std::optional<ElementMap>(constant_map(2, 0)));
    SbCochain g11 = zero;
    g11.g.at(1, 1) = 1;
    EXPECT_TRUE(is_sb_cocycle(t, g11));
    EXPECT_FALSE(is_sb_coboundary(t, g11).has_value());
    ClassCount c = h2_sb(t);
    EXPECT_EQ(c.cocycles, 4u);
    EXPECT_EQ(c.coboundaries, 1u);
    EXPECT_EQ(c.classes, 4u);
}

TEST(SbCohomology, DegenerateCases) {
    EXPECT_EQ(h2_sb(trivial_triplet(zbrace(4), cyclic_group(1))).classes, 1u);
    EXPECT_EQ(h2_sb(trivial_triplet(trivial_brace(cyclic_group(1)), c2())).classes, 1u);
}

TEST(SbCohomology, CoboundariesAreCocyclesAndFormAGroup) {
    ActionTriplet t = trivial_triplet(zbrace(4), c2());
    const int n = 4;
    for_each_assignment(sb_theta_slots(t), kSearchBound, [&](const std::vector<Elem>& v) {
        ElementMap theta = theta_from_slots(n, v);
        SbCochain c = sb_coboundary(t, theta);
        EXPECT_TRUE(is_sb_cocycle(t, c));
        EXPECT_TRUE(is_sb_coboundary(t, c).has_value());
    });
    auto space = sb_slots(trivial_triplet(trivial_brace(c2()), c2()));
    ActionTriplet small = trivial_triplet(trivial_brace(c2()), c2());
    auto z = cocycles_of(space, [&](const auto& v) { return bool(is_sb_cocycle(small, sb_from_slots(small, v))); });
    for (const auto& a : z)
        for (const auto& b : z) EXPECT_TRUE(is_sb_cocycle(small, sb_from_slots(small, space.add(a, b))));
}

TEST(SbCohomology, ExtensionRoundTrip) {
    SkewBrace e = zbrace(4);
    SbExtension x = sb_extension_from_ideal(e, {0, 2});
    EXPECT_TRUE(check_sb_extension(x));
    ElementMap s = canonical_section(x.projection, x.base.order());
    ActionTriplet t = triplet_from_extension(x, s);
    EXPECT_TRUE(check_good_triplet(t));
    SbCochain c = sb_cocycle_from_extension(x, s);
    EXPECT_TRUE(is_sb_cocycle(t, c));
    SbExtension rebuilt = extension_from_sb_cocycle(t, c);
    EXPECT_TRUE(check_sb_extension(rebuilt));
    EXPECT_TRUE(find_sb_equivalence(x, rebuilt).has_value());
    ElementMap other = s;
    for (Elem m = 1; m < x.base.order(); ++m) other.values[m] = x.total.plus(s(m), x.inclusion(1));
    ActionTriplet t2 = triplet_from_extension(x, other);
    EXPECT_TRUE(t2.xi == t.xi && t2.zeta == t.zeta && t2.eps == t.eps);
    SbCochain c2c = sb_cocycle_from_extension(x, other);
    SlotSpace space = sb_slots(t);
    EXPECT_TRUE(is_sb_coboundary(t, sb_from_slots(t, space.sub(sb_to_slots(c2c), sb_to_slots(c)))).has_value());
}

TEST(SbCohomology, DirectProductIsTheZeroClass) {
    ActionTriplet t = trivial_triplet(zbrace(4), c2());
    SbExtension x = extension_from_sb_cocycle(t, SbCochain{Cochain2::zero(4, 4), Cochain2::zero(4, 4)});
    EXPECT_EQ(x.total.order(), 8);
    SbCochain back = sb_cocycle_from_extension(x, canonical_section(x.projection, 4));
    EXPECT_EQ(back, (SbCochain{Cochain2::zero(4, 4), Cochain2::zero(4, 4)}));
}

TEST(SbCohomology, RejectsNonCocycles) {
    ActionTriplet t = trivial_triplet(zbrace(4), c2());
    SbCochain c{Cochain2::zero(4, 4), Cochain2::zero(4, 4)};
    c.g.at(1, 2) = 1;
    Verdict v = is_sb_cocycle(t, c);
    EXPECT_FALSE(v.holds);
    EXPECT_FALSE(v.witness.empty());
    EXPECT_EQ(code_of([&] { extension_from_sb_cocycle(t, c); }), ErrorCode::NotCocycle);
}

// ---- Rota-Baxter cohomology ----

TEST(RbCohomology, ModuleLaw) {
    RBOperator base = validate_rb(c2(), constant_map(2, 0));
    EXPECT_TRUE(check_rb_module(trivial_rb_module(base, c2(), constant_map(2, 0))));
    EXPECT_TRUE(check_rb_module(trivial_rb_module(base, c2(), identity_map(2))));
    FiniteGroup s3 = symmetric_group3();
    RBModule nonabelian{base, s3, constant_map(6, 0), GroupAction::trivial(c2(), s3, true)};
    EXPECT_FALSE(check_rb_module(nonabelian));
}

TEST(RbCohomology, C2Scale) {
    RBModule m = trivial_rb_module(validate_rb(c2(), constant_map(2, 0)), c2(), constant_map(2, 0));
    ClassCount c = h2_rb(m);
    EXPECT_EQ(c.cocycles, 4u);
    EXPECT_EQ(c.coboundaries, 1u);
    EXPECT_EQ(c.classes, 4u);
    RbCochain zero = rb_coboundary(m, constant_map(2, 0));
    EXPECT_EQ(zero, (RbCochain{Cochain2::zero(2, 2), constant_map(2, 0)}));
    // theta(1) = 1: Phi1(theta)(1) = R_I(gamma_0(1)) - theta(0) = 0, and delta theta(1,1) = 1 + 1 - 0 = 0.
    RbCochain b = rb_coboundary(m, ElementMap{{0, 1}});
    EXPECT_EQ(b.r(1), 0);
    EXPECT_TRUE(is_rb_cocycle(m, b));
    EXPECT_EQ(h2_rb(trivial_rb_module(m.base, cyclic_group(1), constant_map(1, 0))).classes, 1u);
}

TEST(RbCohomology, ExtensionRoundTrip) {
    FiniteGroup c4 = cyclic_group(4);
    RBOperator e = validate_rb(c4, ElementMap{{0, 3, 2, 1}});
    RbExtension x = rb_extension_from_ideal(e, {0, 2});
    EXPECT_TRUE(check_rb_extension(x));
    ElementMap s = canonical_section(x.projection, x.base.group.order());
    RBModule m = rb_module_from_extension(x, s);
    EXPECT_TRUE(check_rb_module(m));
    RbCochain c = rb_cocycle_from_extension(x, s);
    EXPECT_TRUE(is_rb_cocycle(m, c));
    RbExtension rebuilt = extension_from_rb_cocycle(m, c);
    EXPECT_TRUE(check_rb_extension(rebuilt));
    EXPECT_TRUE(find_rb_equivalence(x, rebuilt).has_value());
    // The induced braces form an extension as well.
    EXPECT_TRUE(is_brace_homomorphism(x.projection, brace_from_rb(x.total), brace_from_rb(x.base)));
    EXPECT_TRUE(is_brace_homomorphism(x.inclusion, brace_from_rb(x.kernel), brace_from_rb(x.total)));
}

TEST(RbCohomology, SectionChangeIsACoboundary) {
    FiniteGroup c4 = cyclic_group(4);
    RbExtension x = rb_extension_from_ideal(validate_rb(c4, ElementMap{{0, 3, 2, 1}}), {0, 2});
    ElementMap s = canonical_section(x.projection, 2);
    ElementMap other = s;
    other.values[1] = x.total.group.mul(s(1), x.inclusion(1));
    RBModule m = rb_module_from_extension(x, s);
    SlotSpace space = rb_slots(m);
    auto diff = space.sub(rb_to_slots(rb_cocycle_from_extension(x, other)), rb_to_slots(rb_cocycle_from_extension(x, s)));
    EXPECT_TRUE(is_rb_coboundary(m, rb_from_slots(m, diff)).has_value());
}

// ---- relative Rota-Baxter cohomology ----

TEST(RrbCohomology, C2Scale) {
    RRBModule m = trivial_rrb_module(rrb_from_brace(trivial_brace(c2())), c2(), c2(), identity_map(2));
    EXPECT_TRUE(check_rrb_module(m));
    ClassCount c = h2_rrb(m);
    EXPECT_EQ(c.cocycles, 8u);
    EXPECT_EQ(c.coboundaries, 2u);
    EXPECT_EQ(c.classes, 4u);
    EXPECT_EQ(rrb_slots(m).count(kSearchBound), std::optional<std::uint64_t>(16));
}

TEST(RrbCohomology, CoboundariesAreCocycles) {
    RRBModule m = trivial_rrb_module(rrb_from_brace(zbrace(4)), c2(), c2(), identity_map(2));
    for_each_assignment(rrb_kappa_slots(m), kSearchBound, [&](const std::vector<Elem>& v) {
        auto [k1, k2] = kappa_from_slots(m, v);
        RrbCochain c = rrb_coboundary(m, k1, k2);
        EXPECT_TRUE(is_rrb_cocycle(m, c));
        EXPECT_TRUE(is_rrb_coboundary(m, c).has_value());
    });
}

TEST(RrbCohomology, CocycleMapMatchesEnumeration) {
    RRBModule m = trivial_rrb_module(rrb_from_brace(trivial_brace(c2())), c2(), c2(), identity_map(2));
    auto z = rrb_cocycle_map(m);
    ASSERT_TRUE(z.has_value());
    EXPECT_EQ(1u << z->kernel_dim(), h2_rrb(m).cocycles);
    RRBModule big = trivial_rrb_module(rrb_from_brace(zbrace(4)), c2(), c2(), identity_map(2));
    auto zb = rrb_cocycle_map(big);
    ASSERT_TRUE(zb.has_value());
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) EXPECT_TRUE(is_rrb_cocycle(big, rrb_from_slots(big, zb->random_kernel_element(rng))));
}

TEST(RrbCohomology, ExtensionRoundTrip) {
    RRBGroup q = rrb_from_brace(zbrace(4));
    RrbExtension x = rrb_extension_from_ideal(q, {0, 2}, {0, 2});
    EXPECT_TRUE(check_rrb_extension(x));
    ElementMap sh = canonical_section(x.proj_h, x.base.h.order());
    ElementMap sg = canonical_section(x.proj_g, x.base.g.order());
    RRBModule m = rrb_module_from_extension(x, sh, sg);
    EXPECT_TRUE(check_rrb_module(m));
    EXPECT_TRUE(check_rrb_phi_compatibility(m));
    RrbCochain c = rrb_cocycle_from_extension(x, sh, sg);
    EXPECT_TRUE(is_rrb_cocycle(m, c));
    RrbExtension rebuilt = extension_from_rrb_cocycle(m, c);
    EXPECT_TRUE(check_rrb_extension(rebuilt));
    EXPECT_TRUE(find_rrb_equivalence(x, rebuilt).has_value());
}

TEST(RrbCohomology, ZeroCochainGivesDirectProduct) {
    RRBModule m = trivial_rrb_module(rrb_from_brace(trivial_brace(c2())), c2(), c2(), identity_map(2));
    RrbCochain zero{Cochain2::zero(2, 2), Cochain2::zero(2, 2), Cochain2::zero(2, 2), constant_map(2, 0)};
    EXPECT_TRUE(is_rrb_cocycle(m, zero));
    RrbExtension x = extension_from_rrb_cocycle(m, zero);
    EXPECT_TRUE(x.total.h.is_abelian());
    EXPECT_EQ(x.total.h.order(), 4);
    EXPECT_EQ(x.total.g.order(), 4);
    SlotSpace space = rrb_slots(m);
    int rejected = 0;
    for_each_assignment(space, kSearchBound, [&](const std::vector<Elem>& v) {
        RrbCochain c = rrb_from_slots(m, v);
        if (is_rrb_cocycle(m, c)) return;
        ++rejected;
        EXPECT_EQ(code_of([&] { extension_from_rrb_cocycle(m, c); }), ErrorCode::NotCocycle);
    });
    EXPECT_EQ(rejected, 8);
}

TEST(RrbCohomology, PhiCompatibilityDecidesExtensionValidity) {
    // Trivial actions, S = 0, f(1, -) any homomorphism A -> C2: the module
    // conditions hold, and the zero cocycle yields an extension exactly when
    // f is compatible with beta.
    int compatible = 0, incompatible = 0;
    for (const auto& e : enumerate_braces(4)) {
        RRBGroup q = rrb_from_brace(e.brace);
        for (int code = 0; code < 8; ++code) {
            ElementMap f1{{0, code & 1, (code >> 1) & 1, (code >> 2) & 1}};
            if (!is_homomorphism(f1, q.h, c2())) continue;
            RRBModule m = trivial_rrb_module(q, c2(), c2(), constant_map(2, 0));
            for (Elem a = 0; a < 4; ++a) m.f.at(1, a) = f1(a);
            ASSERT_TRUE(check_rrb_module(m));
            RrbCochain zero{Cochain2::zero(4, 4), Cochain2::zero(4, 4), Cochain2::zero(4, 4), constant_map(4, 0)};
            if (check_rrb_phi_compatibility(m)) {
                ++compatible;
                EXPECT_TRUE(check_rrb_extension(extension_from_rrb_cocycle(m, zero)));
            } else {
                ++incompatible;
                EXPECT_EQ(code_of([&] { extension_from_rrb_cocycle(m, zero); }), ErrorCode::ModuleConditionFails);
                EXPECT_FALSE(check_rrb_tables(m, rrb_extension_tables(m, zero)));
            }
        }
    }
    EXPECT_GT(compatible, 0);
    EXPECT_GT(incompatible, 0);
}
