#include "sbrace/cohomology_maps.hpp"

#include "sbrace/square.hpp"

namespace sbrace {

namespace {

ElementMap identity_on(int n) { return identity_map(n); }

Cochain2 cochain_sub(const FiniteGroup& coeff, const Cochain2& a, const Cochain2& b) {
    Additive I(coeff);
    Cochain2 out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = I.sub(a.values[i], b.values[i]);
    return out;
}

}  // namespace

GroupAction induced_gamma(const RRBModule& m) {
    const auto& A = m.base.h;
    const auto& B = m.base.g;
    const int na = A.order(), nb = B.order(), nk = m.k.order(), nl = m.l.order();
    Additive K(m.k);
    auto actor = semidirect_product(A, B, m.base.phi);
    auto space = direct_product(m.k, m.l);
    std::vector<ElementMap> images(static_cast<std::size_t>(na) * nb);
    for (Elem a = 0; a < na; ++a)
        for (Elem b = 0; b < nb; ++b) {
            auto& img = images[pair_index(a, b, nb)].values;
            img.resize(static_cast<std::size_t>(nk) * nl);
            for (Elem k = 0; k < nk; ++k)
                for (Elem l = 0; l < nl; ++l)
                    img[pair_index(k, l, nl)] = pair_index(
                        m.nu.apply_inverse(b, K.add(m.mu.apply(a, k), m.f(l, a))), m.sigma.apply(b, l), nl);
        }
    return GroupAction::make(actor, space, std::move(images), true);
}

RBModule induced_rb_module(const RRBModule& m) {
    const int nk = m.k.order(), nl = m.l.order();
    Additive L(m.l);
    ElementMap r_i = constant_map(nk * nl, 0);
    for (Elem k = 0; k < nk; ++k)
        for (Elem l = 0; l < nl; ++l) r_i.values[pair_index(k, l, nl)] = L.sub(m.s_op(k), l);
    return validate_rb_module(rb_on_semidirect(m.base), direct_product(m.k, m.l), r_i, induced_gamma(m));
}

RbCochain omega_rb(const RRBModule& m, const RrbCochain& c) {
    if (auto v = is_rrb_cocycle(m, c); !v) fail(ErrorCode::NotCocycle, v.witness);
    const auto& A = m.base.h;
    const auto& B = m.base.g;
    const auto& beta = m.base.phi;
    const int na = A.order(), nb = B.order(), nl = m.l.order();
    const int n = na * nb;
    Additive K(m.k);
    Additive L(m.l);
    RbCochain out{Cochain2::zero(n, n), constant_map(n, 0)};
    for (Elem a1 = 0; a1 < na; ++a1)
        for (Elem b1 = 0; b1 < nb; ++b1)
            for (Elem a2 = 0; a2 < na; ++a2)
                for (Elem b2 = 0; b2 < nb; ++b2) {
                    Elem k = m.nu.apply_inverse(B.mul(b1, b2),
                                                K.add(c.tau1(a1, beta.apply(b1, a2)), c.rho(a2, b1)));
                    out.tau.at(pair_index(a1, b1, nb), pair_index(a2, b2, nb)) =
                        pair_index(k, c.tau2(b1, b2), nl);
                }
    for (Elem a = 0; a < na; ++a)
        for (Elem b = 0; b < nb; ++b) {
            Elem l = L.sub(c.chi(a), c.tau2(b, B.mul(B.inv(b), m.base.r(a))));
            out.r.values[pair_index(a, b, nb)] = pair_index(0, l, nl);
        }
    return out;
}

ActionTriplet induced_triplet_square(const ActionTriplet& t) {
    const auto& H = t.base;
    const int n = H.order(), ni = t.coeff.order();
    Additive I(t.coeff);
    auto sq = square_brace(H);
    auto coeff = direct_product(t.coeff, t.coeff);
    std::vector<ElementMap> xi(n * n), zeta(n * n), eps(n * n);
    for (Elem h = 0; h < n; ++h)
        for (Elem g = 0; g < n; ++g) {
            const Elem x = pair_index(h, g, n);
            const Elem gh = H.circ(H.dagger(g), h);
            const Elem hg = H.circ(H.dagger(h), g);
            for (auto* v : {&xi[x].values, &zeta[x].values, &eps[x].values}) v->resize(ni * ni);
            for (Elem a = 0; a < ni; ++a)
                for (Elem b = 0; b < ni; ++b) {
                    const Elem y = pair_index(a, b, ni);
                    xi[x].values[y] = pair_index(t.xi.apply(gh, a), t.eps.apply(hg, b), ni);
                    Elem z = I.sum({t.zeta.apply(h, a), I.neg(t.zeta.apply(h, b)), t.xi.apply(h, t.eps.apply(h, b))});
                    zeta[x].values[y] = pair_index(t.xi.apply_inverse(g, z), t.eps.apply(g, b), ni);
                    Elem e = t.eps.apply(h, I.add(a, t.eps.apply_inverse(g, I.sub(b, a))));
                    eps[x].values[y] = pair_index(t.eps.apply(h, a), e, ni);
                }
        }
    return validate_good_triplet(sq, coeff, GroupAction::make(sq.mul(), coeff, std::move(xi), false),
                                 GroupAction::make(sq.add(), coeff, std::move(zeta), true),
                                 GroupAction::make(sq.mul(), coeff, std::move(eps), true));
}

SbCochain omega_sb(const ActionTriplet& t, const SbCochain& c) {
    if (auto v = is_sb_cocycle(t, c); !v) fail(ErrorCode::NotCocycle, v.witness);
    const auto& H = t.base;
    const int n = H.order(), ni = t.coeff.order();
    Additive I(t.coeff);
    SbCochain out{Cochain2::zero(n * n, n * n), Cochain2::zero(n * n, n * n)};
    for (Elem h1 = 0; h1 < n; ++h1)
        for (Elem g1 = 0; g1 < n; ++g1)
            for (Elem h2 = 0; h2 < n; ++h2)
                for (Elem g2 = 0; g2 < n; ++g2) {
                    const Elem x1 = pair_index(h1, g1, n), x2 = pair_index(h2, g2, n);
                    const Elem g12 = H.circ(g1, g2);
                    const Elem g1h2 = H.circ(g1, h2);
                    Elem first = I.sum({c.g(h1, H.lambda(g1, h2)), c.g(H.minus(g1), g1h2),
                                        I.neg(t.zeta.apply(g1h2, c.g(g1, H.minus(g1)))), c.f(g1, h2)});
                    out.g.at(x1, x2) =
                        pair_index(t.xi.apply_inverse(g12, first), t.xi.apply_inverse(g12, c.f(g1, g2)), ni);

                    const Elem h1g2 = H.circ(h1, g2);
                    const Elem hd_g1 = H.circ(H.dagger(h1), g1);
                    const Elem big = H.circ(h1g2, hd_g1);
                    Elem second = I.sum({t.xi.apply_inverse(big, c.f(h1g2, hd_g1)),
                                         t.eps.apply(hd_g1, t.xi.apply_inverse(h1g2, c.f(h1, g2))),
                                         I.neg(t.xi.apply_inverse(g1, c.f(h1, hd_g1)))});
                    out.f.at(x1, x2) = pair_index(t.xi.apply_inverse(big, c.f(h1, h2)), second, ni);
                }
    return out;
}

ActionTriplet triplet_from_rb_module(const RBModule& m) {
    const auto& G = m.base.group;
    const int n = G.order(), ni = m.coeff.order();
    Additive I(m.coeff);
    auto brace = brace_from_rb(m.base);
    std::vector<ElementMap> xi(n), eps(n);
    for (Elem x = 0; x < n; ++x) {
        const Elem rx = m.base(x);
        xi[x].values.resize(ni);
        eps[x].values.resize(ni);
        for (Elem y = 0; y < ni; ++y) {
            xi[x].values[y] = m.gamma.apply_inverse(rx, y);
            eps[x].values[y] = I.sub(m.gamma.apply(G.mul(x, rx), I.add(y, m.r_i(y))), m.gamma.apply(rx, m.r_i(y)));
        }
    }
    return validate_good_triplet(brace, m.coeff, GroupAction::make(brace.mul(), m.coeff, std::move(xi), false),
                                 GroupAction::make(brace.add(), m.coeff, m.gamma.images(), true),
                                 GroupAction::make(brace.mul(), m.coeff, std::move(eps), true));
}

SbCochain psi_tilde(const RBModule& m, const RbCochain& c) {
    if (auto v = is_rb_cocycle(m, c); !v) fail(ErrorCode::NotCocycle, v.witness);
    const auto& G = m.base.group;
    const int n = G.order();
    Additive I(m.coeff);
    SbCochain out{c.tau, Cochain2::zero(n, n)};
    for (Elem x1 = 0; x1 < n; ++x1) {
        const Elem X = m.base(x1);
        const Elem Xi = G.inv(X);
        for (Elem x2 = 0; x2 < n; ++x2) {
            const Elem Xx2 = G.mul(X, x2);
            Elem inner = I.sum({c.tau(X, x2), m.gamma.apply(x2, c.r(x1)), I.neg(c.r(x1))});
            out.f.at(x1, x2) = I.sum({c.tau(x1, G.mul(Xx2, Xi)), c.tau(Xx2, Xi), m.gamma.apply(Xi, inner),
                                      I.neg(c.tau(X, Xi))});
        }
    }
    return out;
}

ActionTriplet triplet_from_rrb_module(const RRBModule& m) {
    if (!(m.k == m.l) || m.s_op != identity_on(m.k.order()))
        fail(ErrorCode::PreconditionFails, "coefficients must be (I, I, trivial, id)");
    if (m.base.h.order() != m.base.g.order() || m.base.r != identity_on(m.base.h.order()))
        fail(ErrorCode::PreconditionFails, "base operator must be the identity");
    auto brace = brace_from_rrb(m.base);
    return validate_good_triplet(brace, m.k, GroupAction::make(brace.mul(), m.k, m.nu.images(), false),
                                 GroupAction::make(brace.add(), m.k, m.mu.images(), true),
                                 GroupAction::make(brace.mul(), m.k, m.sigma.images(), true));
}

SbCochain psi(const RRBModule& m, const RrbCochain& c) {
    triplet_from_rrb_module(m);
    if (auto v = is_rrb_cocycle(m, c); !v) fail(ErrorCode::NotCocycle, v.witness);
    const int n = m.base.h.order();
    Additive I(m.k);
    SbCochain out{c.tau1, Cochain2::zero(n, n)};
    for (Elem h1 = 0; h1 < n; ++h1)
        for (Elem h2 = 0; h2 < n; ++h2)
            out.f.at(h1, h2) = I.sum({c.tau1(h1, m.base.phi.apply(h1, h2)), c.rho(h2, h1),
                                      m.nu.apply(h1, m.f(c.chi(h1), h2))});
    return out;
}

RRBModule rrb_module_from_triplet(const ActionTriplet& t) {
    const int n = t.base.order(), ni = t.coeff.order();
    Additive I(t.coeff);
    auto base = rrb_from_brace(t.base);
    Cochain2 f = Cochain2::zero(ni, n);
    for (Elem k = 0; k < ni; ++k)
        for (Elem h = 0; h < n; ++h) f.at(k, h) = I.add(I.neg(t.zeta.apply(h, k)), t.xi.apply(h, t.eps.apply(h, k)));
    return validate_rrb_module(base, t.coeff, t.coeff, identity_on(ni), GroupAction::make(base.g, t.coeff, t.xi.images(), false),
                               GroupAction::make(base.h, t.coeff, t.zeta.images(), true),
                               GroupAction::make(base.g, t.coeff, t.eps.images(), true), f);
}

DiagramInstance make_diagram_instance(const ActionTriplet& t) {
    DiagramInstance inst{t, rrb_module_from_triplet(t), {}, induced_triplet_square(t)};
    inst.rb = induced_rb_module(inst.rrb);
    auto via_rb = triplet_from_rb_module(inst.rb);
    const auto& sq = inst.square_triplet;
    if (!(via_rb.base == sq.base) || !(via_rb.coeff == sq.coeff))
        fail(ErrorCode::DiagramFails, "square brace differs between the two routes");
    if (!(via_rb.xi == sq.xi)) fail(ErrorCode::DiagramFails, "induced xi differs between the two routes");
    if (!(via_rb.zeta == sq.zeta)) fail(ErrorCode::DiagramFails, "induced zeta differs between the two routes");
    if (!(via_rb.eps == sq.eps)) fail(ErrorCode::DiagramFails, "induced eps differs between the two routes");
    return inst;
}

ElementMap diagram_witness(const DiagramInstance& inst, const RrbCochain& c) {
    const int n = inst.triplet.base.order();
    Additive I(inst.triplet.coeff);
    ElementMap theta = constant_map(n * n, 0);
    for (Elem h = 0; h < n; ++h)
        for (Elem g = 0; g < n; ++g) theta.values[pair_index(h, g, n)] = I.neg(c.chi(g));
    return theta;
}

DiagramResult diagram_check(const DiagramInstance& inst, const RrbCochain& c, std::uint64_t bound) {
    if (auto v = is_rrb_cocycle(inst.rrb, c); !v) fail(ErrorCode::NotCocycle, v.witness);
    auto lhs = psi_tilde(inst.rb, omega_rb(inst.rrb, c));
    auto rhs = omega_sb(inst.triplet, psi(inst.rrb, c));
    const auto& coeff = inst.square_triplet.coeff;
    DiagramResult out;
    out.difference = SbCochain{cochain_sub(coeff, lhs.g, rhs.g), cochain_sub(coeff, lhs.f, rhs.f)};
    out.theta = diagram_witness(inst, c);
    if (sb_coboundary(inst.square_triplet, out.theta) == out.difference) {
        out.witness = "explicit";
        return out;
    }
    auto found = is_sb_coboundary(inst.square_triplet, out.difference, bound);
    if (!found) fail(ErrorCode::DiagramFails, "the two images are not cohomologous");
    out.theta = *found;
    out.witness = "search";
    return out;
}

}  // namespace sbrace
