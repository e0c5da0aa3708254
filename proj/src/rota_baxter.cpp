#include "sbrace/rota_baxter.hpp"

#include <string>

namespace sbrace {

namespace {

std::string pair_str(Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

Verdict check_rb(const FiniteGroup& g, const ElementMap& r) {
    if (r.size() != g.order()) return Verdict::no("map size differs from group order");
    for (Elem v : r.values)
        if (v < 0 || v >= g.order()) return Verdict::no("value out of range");
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y) {
            Elem rx = r(x);
            if (g.mul(rx, r(y)) != r(g.mul(x, g.conj(rx, y)))) return Verdict::no("pair " + pair_str(x, y));
        }
    return Verdict::ok();
}

RBOperator validate_rb(const FiniteGroup& g, const ElementMap& r) {
    if (auto v = check_rb(g, r); !v) fail(ErrorCode::RBAxiomFails, v.witness);
    return RBOperator{g, r};
}

SkewBrace brace_from_rb(const RBOperator& r) {
    const int n = r.group.order();
    std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) mul[static_cast<std::size_t>(x) * n + y] = r.circ(x, y);
    return SkewBrace::make(r.group, FiniteGroup::from_flat(n, std::move(mul)));
}

std::vector<RBOperator> enumerate_rb(const FiniteGroup& g, int bound) {
    const int n = g.order();
    if (n > bound) fail(ErrorCode::OrderTooLarge, "order " + std::to_string(n));
    // R(1)R(1) = R(1) forces R(1) = 1; remaining values range over G.
    std::vector<RBOperator> out;
    ElementMap r = constant_map(n, 0);
    while (true) {
        if (check_rb(g, r)) out.push_back(RBOperator{g, r});
        int i = n - 1;
        while (i >= 1 && r.values[i] == n - 1) r.values[i--] = 0;
        if (i < 1) break;
        ++r.values[i];
    }
    return out;
}

Verdict check_rrb(const RRBGroup& q) {
    if (q.phi.contravariant()) return Verdict::no("phi must be covariant");
    if (q.phi.actor().order() != q.g.order() || q.phi.space().order() != q.h.order())
        return Verdict::no("phi has the wrong actor or space");
    if (auto v = q.phi.check(); !v) return Verdict::no("phi: " + v.witness);
    if (q.r.size() != q.h.order()) return Verdict::no("R has the wrong domain");
    for (Elem v : q.r.values)
        if (v < 0 || v >= q.g.order()) return Verdict::no("R value out of range");
    for (Elem h1 = 0; h1 < q.h.order(); ++h1)
        for (Elem h2 = 0; h2 < q.h.order(); ++h2)
            if (q.g.mul(q.r(h1), q.r(h2)) != q.r(q.circ(h1, h2))) return Verdict::no("pair " + pair_str(h1, h2));
    return Verdict::ok();
}

RRBGroup validate_rrb(const FiniteGroup& h, const FiniteGroup& g, const GroupAction& phi, const ElementMap& r) {
    if (phi.contravariant() || phi.actor().order() != g.order() || phi.space().order() != h.order())
        fail(ErrorCode::ActionInvalid, "phi must be a covariant action of G on H");
    if (auto v = phi.check(); !v) fail(ErrorCode::ActionInvalid, v.witness);
    RRBGroup q{h, g, phi, r};
    if (auto v = check_rrb(q); !v) fail(ErrorCode::RRBAxiomFails, v.witness);
    return q;
}

SkewBrace brace_from_rrb(const RRBGroup& q) {
    const int n = q.h.order();
    std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) mul[static_cast<std::size_t>(x) * n + y] = q.circ(x, y);
    return SkewBrace::make(q.h, FiniteGroup::from_flat(n, std::move(mul)));
}

RRBGroup rrb_from_brace(const SkewBrace& b) {
    return RRBGroup{b.add(), b.mul(), b.lambda_action(), identity_map(b.order())};
}

RBOperator rb_on_semidirect(const RRBGroup& q) {
    FiniteGroup total = semidirect_product(q.h, q.g, q.phi);
    const int ng = q.g.order();
    ElementMap r;
    r.values.resize(total.order());
    for (Elem h = 0; h < q.h.order(); ++h)
        for (Elem g = 0; g < ng; ++g) r.values[pair_index(h, g, ng)] = pair_index(0, q.g.mul(q.g.inv(g), q.r(h)), ng);
    return validate_rb(total, r);
}

Elem descendent_circle(const RRBGroup& q, Elem h1, Elem h2) { return q.circ(h1, h2); }

Verdict is_rb_homomorphism(const ElementMap& f, const RBOperator& src, const RBOperator& dst) {
    if (auto v = is_homomorphism(f, src.group, dst.group); !v) return v;
    for (Elem x = 0; x < src.group.order(); ++x)
        if (f(src(x)) != dst(f(x))) return Verdict::no("f R != S f at " + std::to_string(x));
    return Verdict::ok();
}

Verdict check_rrb_hom(const ElementMap& f1, const ElementMap& f2, const RRBGroup& src, const RRBGroup& dst) {
    if (auto v = is_homomorphism(f1, src.h, dst.h); !v) return Verdict::no("f1: " + v.witness);
    if (auto v = is_homomorphism(f2, src.g, dst.g); !v) return Verdict::no("f2: " + v.witness);
    for (Elem h = 0; h < src.h.order(); ++h)
        if (f2(src.r(h)) != dst.r(f1(h))) return Verdict::no("f2 R != S f1 at " + std::to_string(h));
    for (Elem g = 0; g < src.g.order(); ++g)
        for (Elem h = 0; h < src.h.order(); ++h)
            if (f1(src.phi.apply(g, h)) != dst.phi.apply(f2(g), f1(h)))
                return Verdict::no("f1 phi_g != phi'_f2(g) f1 at " + pair_str(g, h));
    return Verdict::ok();
}

ElementMap map_rrb_hom(const ElementMap& f1, const ElementMap& f2, const RRBGroup& src, const RRBGroup& dst) {
    if (auto v = check_rrb_hom(f1, f2, src, dst); !v) fail(ErrorCode::NotRRBHom, v.witness);
    const int ng = src.g.order(), ng2 = dst.g.order();
    ElementMap f;
    f.values.resize(static_cast<std::size_t>(src.h.order()) * ng);
    for (Elem h = 0; h < src.h.order(); ++h)
        for (Elem g = 0; g < ng; ++g) f.values[pair_index(h, g, ng)] = pair_index(f1(h), f2(g), ng2);
    return f;
}

}  // namespace sbrace
