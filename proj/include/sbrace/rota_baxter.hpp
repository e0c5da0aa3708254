#pragma once

#include <vector>

#include "sbrace/brace.hpp"

namespace sbrace {

// Weight-1 Rota-Baxter operator: R(x)R(y) = R(x R(x) y R(x)^-1).
struct RBOperator {
    FiniteGroup group;
    ElementMap map;

    Elem operator()(Elem x) const { return map(x); }
    // x o_R y = x R(x) y R(x)^-1
    Elem circ(Elem x, Elem y) const { return group.mul(x, group.conj(map(x), y)); }
};

Verdict check_rb(const FiniteGroup& g, const ElementMap& r);
RBOperator validate_rb(const FiniteGroup& g, const ElementMap& r);
SkewBrace brace_from_rb(const RBOperator& r);

constexpr int kRBEnumerationBound = 6;
// All RB operators, sorted lexicographically by map values.
std::vector<RBOperator> enumerate_rb(const FiniteGroup& g, int bound = kRBEnumerationBound);

// Relative Rota-Baxter group (H, G, phi, R): R(h1)R(h2) = R(h1 phi_{R(h1)}(h2)).
struct RRBGroup {
    FiniteGroup h;
    FiniteGroup g;
    GroupAction phi;  // covariant action of G on H
    ElementMap r;     // H -> G

    // h1 o_R h2 = h1 phi_{R(h1)}(h2)
    Elem circ(Elem h1, Elem h2) const { return h.mul(h1, phi.apply(r(h1), h2)); }
};

Verdict check_rrb(const RRBGroup& q);
RRBGroup validate_rrb(const FiniteGroup& h, const FiniteGroup& g, const GroupAction& phi,
                      const ElementMap& r);
SkewBrace brace_from_rrb(const RRBGroup& q);
// (H., H o, lambda, id)
RRBGroup rrb_from_brace(const SkewBrace& b);
// R~(h,g) = (1, g^-1 R(h)) on H x_phi G.
RBOperator rb_on_semidirect(const RRBGroup& q);
Elem descendent_circle(const RRBGroup& q, Elem h1, Elem h2);

// Morphism (f1, f2) of RRB groups; returns f~(h,g) = (f1(h), f2(g)).
ElementMap map_rrb_hom(const ElementMap& f1, const ElementMap& f2, const RRBGroup& src,
                       const RRBGroup& dst);
Verdict check_rrb_hom(const ElementMap& f1, const ElementMap& f2, const RRBGroup& src,
                      const RRBGroup& dst);

Verdict is_rb_homomorphism(const ElementMap& f, const RBOperator& src, const RBOperator& dst);

}  // namespace sbrace
