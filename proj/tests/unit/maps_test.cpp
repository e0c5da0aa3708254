#include <gtest/gtest.h>

#include <random>

#include "sbrace/cohomology_maps.hpp"
#include "sbrace/square.hpp"

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

std::vector<RrbCochain> rrb_cocycles(const RRBModule& m) {
    std::vector<RrbCochain> out;
    for_each_assignment(rrb_slots(m), kSearchBound, [&](const std::vector<Elem>& v) {
        RrbCochain c = rrb_from_slots(m, v);
        if (is_rrb_cocycle(m, c)) out.push_back(c);
    });
    return out;
}

}  // namespace

TEST(CohomologyMaps, InducedContextsAreValid) {
    DiagramInstance inst = make_diagram_instance(trivial_triplet(zbrace(4), cyclic_group(2)));
    EXPECT_TRUE(check_rrb_module(inst.rrb));
    EXPECT_TRUE(check_rb_module(inst.rb));
    EXPECT_TRUE(check_good_triplet(inst.square_triplet));
    EXPECT_EQ(inst.rb.coeff.order(), 4);
    EXPECT_EQ(inst.rb.base.group.order(), 16);
    ActionTriplet back = triplet_from_rrb_module(inst.rrb);
    EXPECT_TRUE(back.xi == inst.triplet.xi && back.zeta == inst.triplet.zeta && back.eps == inst.triplet.eps);
}

TEST(CohomologyMaps, ZeroGoesToZero) {
    ActionTriplet t = trivial_triplet(trivial_brace(cyclic_group(2)), cyclic_group(2));
    DiagramInstance inst = make_diagram_instance(t);
    RrbCochain zero{Cochain2::zero(2, 2), Cochain2::zero(2, 2), Cochain2::zero(2, 2), constant_map(2, 0)};
    EXPECT_EQ(omega_rb(inst.rrb, zero), (RbCochain{Cochain2::zero(4, 4), constant_map(4, 0)}));
    EXPECT_EQ(psi(inst.rrb, zero), (SbCochain{Cochain2::zero(2, 2), Cochain2::zero(2, 2)}));
    SbCochain sz{Cochain2::zero(2, 2), Cochain2::zero(2, 2)};
    EXPECT_EQ(omega_sb(t, sz), (SbCochain{Cochain2::zero(4, 4), Cochain2::zero(4, 4)}));
}

TEST(CohomologyMaps, ImagesAreCocyclesAndMapsAreAdditive) {
    ActionTriplet t = trivial_triplet(trivial_brace(cyclic_group(2)), cyclic_group(2));
    DiagramInstance inst = make_diagram_instance(t);
    auto z = rrb_cocycles(inst.rrb);
    ASSERT_EQ(z.size(), 8u);
    SlotSpace rrb = rrb_slots(inst.rrb), rb = rb_slots(inst.rb), sb = sb_slots(t);
    for (const auto& a : z) {
        RbCochain w = omega_rb(inst.rrb, a);
        EXPECT_TRUE(is_rb_cocycle(inst.rb, w));
        SbCochain p = psi(inst.rrb, a);
        EXPECT_TRUE(is_sb_cocycle(t, p));
        EXPECT_TRUE(is_sb_cocycle(inst.square_triplet, omega_sb(t, p)));
        EXPECT_TRUE(is_sb_cocycle(inst.square_triplet, psi_tilde(inst.rb, w)));
        for (const auto& b : z) {
            RrbCochain s = rrb_from_slots(inst.rrb, rrb.add(rrb_to_slots(a), rrb_to_slots(b)));
            EXPECT_EQ(rb_to_slots(omega_rb(inst.rrb, s)),
                      rb.add(rb_to_slots(w), rb_to_slots(omega_rb(inst.rrb, b))));
            EXPECT_EQ(sb_to_slots(psi(inst.rrb, s)), sb.add(sb_to_slots(p), sb_to_slots(psi(inst.rrb, b))));
        }
    }
}

TEST(CohomologyMaps, CoboundariesMapToCoboundaries) {
    ActionTriplet t = trivial_triplet(trivial_brace(cyclic_group(2)), cyclic_group(2));
    DiagramInstance inst = make_diagram_instance(t);
    for_each_assignment(rrb_kappa_slots(inst.rrb), kSearchBound, [&](const std::vector<Elem>& v) {
        auto [k1, k2] = kappa_from_slots(inst.rrb, v);
        RrbCochain b = rrb_coboundary(inst.rrb, k1, k2);
        EXPECT_TRUE(is_rb_coboundary(inst.rb, omega_rb(inst.rrb, b)).has_value());
        EXPECT_TRUE(is_sb_coboundary(t, psi(inst.rrb, b)).has_value());
    });
}

TEST(CohomologyMaps, DiagramCommutesAtC2Scale) {
    ActionTriplet t = trivial_triplet(trivial_brace(cyclic_group(2)), cyclic_group(2));
    DiagramInstance inst = make_diagram_instance(t);
    for (const auto& c : rrb_cocycles(inst.rrb)) {
        DiagramResult r = diagram_check(inst, c);
        EXPECT_EQ(r.witness, "explicit");
        EXPECT_EQ(sb_coboundary(inst.square_triplet, r.theta), r.difference);
        EXPECT_EQ(r.theta, diagram_witness(inst, c));
    }
}

TEST(CohomologyMaps, DiagramCommutesOnSampledCocycles) {
    DiagramInstance inst = make_diagram_instance(trivial_triplet(zbrace(4), cyclic_group(2)));
    auto z = rrb_cocycle_map(inst.rrb);
    ASSERT_TRUE(z.has_value());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
        RrbCochain c = rrb_from_slots(inst.rrb, z->random_kernel_element(rng));
        EXPECT_EQ(diagram_check(inst, c).witness, "explicit");
    }
}

TEST(CohomologyMaps, RejectsNonCocycles) {
    DiagramInstance inst = make_diagram_instance(trivial_triplet(trivial_brace(cyclic_group(2)), cyclic_group(2)));
    bool found = false;
    for_each_assignment(rrb_slots(inst.rrb), kSearchBound, [&](const std::vector<Elem>& v) {
        RrbCochain c = rrb_from_slots(inst.rrb, v);
        if (found || is_rrb_cocycle(inst.rrb, c)) return;
        found = true;
        EXPECT_EQ(code_of([&] { diagram_check(inst, c); }), ErrorCode::NotCocycle);
    });
    EXPECT_TRUE(found);
}

TEST(CohomologyMaps, TripletFromRrbModuleNeedsIdentityS) {
    RRBGroup q = rrb_from_brace(trivial_brace(cyclic_group(2)));
    RRBModule m = trivial_rrb_module(q, cyclic_group(2), cyclic_group(2), constant_map(2, 0));
    EXPECT_EQ(code_of([&] { triplet_from_rrb_module(m); }), ErrorCode::PreconditionFails);
    RRBModule k = trivial_rrb_module(q, cyclic_group(2), cyclic_group(1), constant_map(2, 0));
    EXPECT_EQ(code_of([&] { triplet_from_rrb_module(k); }), ErrorCode::PreconditionFails);
}
