#include "sbrace/cohomology_rrb.hpp"

#include <algorithm>
#include <string>

#include "sbrace/cohomology_sb.hpp"

namespace sbrace {

const char* const kRrbEquationNames[] = {"first group cocycle equation", "second group cocycle equation",
                                         "action cocycle equation", "automorphism cocycle equation",
                                         "operator cocycle equation"};

namespace {

std::string at2(Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::vector<Elem> preimage_table(const ElementMap& f, int codomain_order) {
    std::vector<Elem> inv(codomain_order, -1);
    for (Elem x = 0; x < f.size(); ++x) inv[f(x)] = x;
    return inv;
}

Verdict action_shape(const GroupAction& a, const FiniteGroup& actor, const FiniteGroup& space, bool contra,
                     const char* name) {
    if (a.contravariant() != contra || !(a.actor() == actor) || !(a.space() == space))
        return Verdict::no(std::string(name) + " has the wrong variance or groups");
    if (auto v = a.check(); !v) return Verdict::no(std::string(name) + ": " + v.witness);
    return Verdict::ok();
}

}  // namespace

Verdict check_rrb_module(const RRBModule& m) {
    const auto& A = m.base.h;
    const auto& B = m.base.g;
    if (auto v = require_abelian(m.k); !v) return v;
    if (auto v = require_abelian(m.l); !v) return v;
    if (auto v = is_homomorphism(m.s_op, m.k, m.l); !v) return Verdict::no("S: " + v.witness);
    if (auto v = action_shape(m.nu, B, m.k, false, "nu"); !v) return v;
    if (auto v = action_shape(m.mu, A, m.k, true, "mu"); !v) return v;
    if (auto v = action_shape(m.sigma, B, m.l, true, "sigma"); !v) return v;
    if (m.f.rows != m.l.order() || m.f.cols != A.order()) return Verdict::no("f has the wrong shape");
    Additive K(m.k);
    Additive L(m.l);
    for (Elem a = 0; a < A.order(); ++a)
        for (Elem l1 = 0; l1 < m.l.order(); ++l1)
            for (Elem l2 = 0; l2 < m.l.order(); ++l2)
                if (m.f(L.add(l1, l2), a) != K.add(m.f(l1, a), m.f(l2, a)))
                    return Verdict::no("f(-," + std::to_string(a) + ") is not a homomorphism");
    for (Elem l = 0; l < m.l.order(); ++l)
        for (Elem a1 = 0; a1 < A.order(); ++a1)
            for (Elem a2 = 0; a2 < A.order(); ++a2)
                if (m.f(l, A.mul(a1, a2)) != K.add(m.mu.apply(a2, m.f(l, a1)), m.f(l, a2)))
                    return Verdict::no("f(" + std::to_string(l) + ",-) is not a derivation");
    for (Elem a = 0; a < A.order(); ++a) {
        Elem ta = m.base.r(a);
        for (Elem x = 0; x < m.k.order(); ++x) {
            Elem sx = m.s_op(x);
            Elem inner = K.add(m.nu.apply_inverse(ta, m.mu.apply(a, x)), m.nu.apply_inverse(ta, m.f(sx, a)));
            if (m.s_op(inner) != m.sigma.apply(ta, sx)) return Verdict::no("operator condition fails at " + at2(a, x));
        }
    }
    for (Elem b = 0; b < B.order(); ++b)
        for (Elem a = 0; a < A.order(); ++a)
            for (Elem x = 0; x < m.k.order(); ++x)
                if (m.nu.apply(b, m.mu.apply(a, x)) != m.mu.apply(m.base.phi.apply(b, a), m.nu.apply(b, x)))
                    return Verdict::no("nu/mu compatibility fails at " + at2(b, a));
    return Verdict::ok();
}

Verdict check_rrb_phi_compatibility(const RRBModule& m) {
    const auto& B = m.base.g;
    for (Elem b1 = 0; b1 < B.order(); ++b1)
        for (Elem b2 = 0; b2 < B.order(); ++b2)
            for (Elem l = 0; l < m.l.order(); ++l)
                for (Elem a = 0; a < m.base.h.order(); ++a)
                    if (m.nu.apply(b1, m.f(l, m.base.phi.apply(b2, a))) !=
                        m.nu.apply(B.mul(b1, b2), m.f(m.sigma.apply(b2, l), a)))
                        return Verdict::no("phi compatibility fails at (b1,b2,l,a)=(" + std::to_string(b1) + "," +
                                           std::to_string(b2) + "," + std::to_string(l) + "," + std::to_string(a) + ")");
    return Verdict::ok();
}

RRBModule validate_rrb_module(const RRBGroup& base, const FiniteGroup& k, const FiniteGroup& l,
                              const ElementMap& s_op, const GroupAction& nu, const GroupAction& mu,
                              const GroupAction& sigma, const Cochain2& f) {
    if (!k.is_abelian() || !l.is_abelian()) fail(ErrorCode::CoeffNotAbelian, "module groups must be abelian");
    RRBModule m{base, k, l, s_op, nu, mu, sigma, f};
    if (auto v = check_rrb_module(m); !v) fail(ErrorCode::ModuleConditionFails, v.witness);
    return m;
}

RRBModule trivial_rrb_module(const RRBGroup& base, const FiniteGroup& k, const FiniteGroup& l, const ElementMap& s_op) {
    return validate_rrb_module(base, k, l, s_op, GroupAction::trivial(base.g, k, false),
                               GroupAction::trivial(base.h, k, true), GroupAction::trivial(base.g, l, true),
                               Cochain2::zero(l.order(), base.h.order()));
}

void rrb_residual(const RRBModule& m, const RrbCochain& c, const ResidualSink& sink) {
    const auto& A = m.base.h;
    const auto& B = m.base.g;
    const auto& beta = m.base.phi;
    const int na = A.order(), nb = B.order();
    Additive K(m.k);
    Additive L(m.l);
    for (Elem a1 = 0; a1 < na; ++a1)
        for (Elem a2 = 0; a2 < na; ++a2)
            for (Elem a3 = 0; a3 < na; ++a3) {
                Elem v = K.sum({c.tau1(a2, a3), c.tau1(a1, A.mul(a2, a3)), K.neg(c.tau1(A.mul(a1, a2), a3)),
                                K.neg(m.mu.apply(a3, c.tau1(a1, a2)))});
                if (!sink({0, {a1, a2, a3}, &m.k, v})) return;
            }
    for (Elem b1 = 0; b1 < nb; ++b1)
        for (Elem b2 = 0; b2 < nb; ++b2)
            for (Elem b3 = 0; b3 < nb; ++b3) {
                Elem v = L.sum({c.tau2(b2, b3), c.tau2(b1, B.mul(b2, b3)), L.neg(c.tau2(B.mul(b1, b2), b3)),
                                L.neg(m.sigma.apply(b3, c.tau2(b1, b2)))});
                if (!sink({1, {b1, b2, b3}, &m.l, v})) return;
            }
    for (Elem a1 = 0; a1 < na; ++a1)
        for (Elem b1 = 0; b1 < nb; ++b1)
            for (Elem b2 = 0; b2 < nb; ++b2) {
                Elem b12 = B.mul(b1, b2);
                Elem v = K.sum({c.rho(beta.apply(b2, a1), b1), m.nu.apply(b1, c.rho(a1, b2)), K.neg(c.rho(a1, b12)),
                                K.neg(m.nu.apply(b12, m.f(c.tau2(b1, b2), a1)))});
                if (!sink({2, {a1, b1, b2}, &m.k, v})) return;
            }
    for (Elem a1 = 0; a1 < na; ++a1)
        for (Elem a2 = 0; a2 < na; ++a2)
            for (Elem b1 = 0; b1 < nb; ++b1) {
                Elem v = K.sum({c.rho(A.mul(a1, a2), b1), m.nu.apply(b1, c.tau1(a1, a2)),
                                K.neg(m.mu.apply(beta.apply(b1, a2), c.rho(a1, b1))), K.neg(c.rho(a2, b1)),
                                K.neg(c.tau1(beta.apply(b1, a1), beta.apply(b1, a2)))});
                if (!sink({3, {a1, a2, b1}, &m.k, v})) return;
            }
    for (Elem a1 = 0; a1 < na; ++a1)
        for (Elem a2 = 0; a2 < na; ++a2) {
            Elem t1 = m.base.r(a1), t2 = m.base.r(a2);
            Elem circ = m.base.circ(a1, a2);
            Elem delta = L.sum({c.chi(a2), L.neg(c.chi(circ)), m.sigma.apply(t2, c.chi(a1))});
            Elem inner = K.sum({c.rho(a2, t1), c.tau1(a1, beta.apply(t1, a2)), m.nu.apply(t1, m.f(c.chi(a1), a2))});
            Elem rhs = m.s_op(m.nu.apply_inverse(m.base.r(circ), inner));
            Elem v = L.sub(L.add(c.tau2(t1, t2), delta), rhs);
            if (!sink({4, {a1, a2, 0}, &m.l, v})) return;
        }
}

Verdict is_rrb_cocycle(const RRBModule& m, const RrbCochain& c) {
    if (!c.tau1.normalized() || !c.tau2.normalized() || !c.rho.normalized() || c.chi(0) != 0)
        return Verdict::no("cochain is not normalized");
    Verdict out;
    rrb_residual(m, c, [&](const ResidualEntry& e) {
        if (e.value == 0) return true;
        out = Verdict::no(describe(e, kRrbEquationNames));
        return false;
    });
    return out;
}

RrbCochain rrb_coboundary(const RRBModule& m, const ElementMap& kappa1, const ElementMap& kappa2) {
    const auto& A = m.base.h;
    const auto& B = m.base.g;
    const int na = A.order(), nb = B.order();
    Additive K(m.k);
    Additive L(m.l);
    RrbCochain c{Cochain2::zero(na, na), Cochain2::zero(nb, nb), Cochain2::zero(na, nb), constant_map(na, 0)};
    for (Elem a1 = 0; a1 < na; ++a1)
        for (Elem a2 = 0; a2 < na; ++a2)
            c.tau1.at(a1, a2) = K.sum({K.neg(kappa1(A.mul(a1, a2))), kappa1(a2), m.mu.apply(a2, kappa1(a1))});
    for (Elem b1 = 0; b1 < nb; ++b1)
        for (Elem b2 = 0; b2 < nb; ++b2)
            c.tau2.at(b1, b2) = L.sum({L.neg(kappa2(B.mul(b1, b2))), kappa2(b2), m.sigma.apply(b2, kappa2(b1))});
    for (Elem a = 0; a < na; ++a)
        for (Elem b = 0; b < nb; ++b)
            c.rho.at(a, b) = K.sub(m.nu.apply(b, K.add(m.f(kappa2(b), a), kappa1(a))), kappa1(m.base.phi.apply(b, a)));
    for (Elem a = 0; a < na; ++a) {
        Elem ta = m.base.r(a);
        c.chi.values[a] = L.sub(m.s_op(m.nu.apply_inverse(ta, kappa1(a))), kappa2(ta));
    }
    return c;
}

SlotSpace rrb_slots(const RRBModule& m) {
    const int na = m.base.h.order() - 1, nb = m.base.g.order() - 1;
    SlotSpace s;
    s.groups.insert(s.groups.end(), na * na, &m.k);
    s.groups.insert(s.groups.end(), nb * nb, &m.l);
    s.groups.insert(s.groups.end(), na * nb, &m.k);
    s.groups.insert(s.groups.end(), na, &m.l);
    return s;
}

SlotSpace rrb_kappa_slots(const RRBModule& m) {
    SlotSpace s;
    s.groups.insert(s.groups.end(), m.base.h.order() - 1, &m.k);
    s.groups.insert(s.groups.end(), m.base.g.order() - 1, &m.l);
    return s;
}

std::vector<Elem> rrb_to_slots(const RrbCochain& c) {
    std::vector<Elem> v;
    for (const auto* part : {&c.tau1, &c.tau2, &c.rho})
        for (Elem a = 1; a < part->rows; ++a)
            for (Elem b = 1; b < part->cols; ++b) v.push_back((*part)(a, b));
    v.insert(v.end(), c.chi.values.begin() + 1, c.chi.values.end());
    return v;
}

RrbCochain rrb_from_slots(const RRBModule& m, const std::vector<Elem>& v) {
    const int na = m.base.h.order(), nb = m.base.g.order();
    RrbCochain c{Cochain2::zero(na, na), Cochain2::zero(nb, nb), Cochain2::zero(na, nb), constant_map(na, 0)};
    std::size_t k = 0;
    for (auto* part : {&c.tau1, &c.tau2, &c.rho})
        for (Elem a = 1; a < part->rows; ++a)
            for (Elem b = 1; b < part->cols; ++b) part->at(a, b) = v[k++];
    for (Elem a = 1; a < na; ++a) c.chi.values[a] = v[k++];
    return c;
}

std::pair<ElementMap, ElementMap> kappa_from_slots(const RRBModule& m, const std::vector<Elem>& v) {
    const int na = m.base.h.order(), nb = m.base.g.order();
    ElementMap k1 = constant_map(na, 0), k2 = constant_map(nb, 0);
    std::size_t k = 0;
    for (Elem a = 1; a < na; ++a) k1.values[a] = v[k++];
    for (Elem b = 1; b < nb; ++b) k2.values[b] = v[k++];
    return {k1, k2};
}

std::optional<std::pair<ElementMap, ElementMap>> is_rrb_coboundary(const RRBModule& m, const RrbCochain& c,
                                                                   std::uint64_t bound) {
    auto space = rrb_kappa_slots(m);
    if (space.count(bound)) {
        std::optional<std::pair<ElementMap, ElementMap>> found;
        for_each_assignment(space, bound, [&](const std::vector<Elem>& v) {
            if (found) return;
            auto [k1, k2] = kappa_from_slots(m, v);
            if (rrb_coboundary(m, k1, k2) == c) found = std::make_pair(k1, k2);
        });
        return found;
    }
    auto map = linear::FpLinearMap::build(space, rrb_slots(m), [&](const std::vector<Elem>& v) {
        auto [k1, k2] = kappa_from_slots(m, v);
        return rrb_to_slots(rrb_coboundary(m, k1, k2));
    });
    if (!map) fail(ErrorCode::SearchTooLarge, "kappa space exceeds the bound and K, L are not elementary abelian");
    auto sol = map->solve(rrb_to_slots(c));
    if (!sol) return std::nullopt;
    return kappa_from_slots(m, *sol);
}

std::optional<linear::FpLinearMap> rrb_cocycle_map(const RRBModule& m) {
    const auto domain = rrb_slots(m);
    auto residual = [&](const std::vector<Elem>& v) {
        std::vector<Elem> out;
        rrb_residual(m, rrb_from_slots(m, v), [&](const ResidualEntry& e) {
            out.push_back(e.value);
            return true;
        });
        return out;
    };
    SlotSpace codomain;
    rrb_residual(m, rrb_from_slots(m, std::vector<Elem>(domain.size(), 0)), [&](const ResidualEntry& e) {
        codomain.groups.push_back(e.group);
        return true;
    });
    return linear::FpLinearMap::build(domain, codomain, residual);
}

ClassCount h2_rrb(const RRBModule& m, std::uint64_t bound) {
    auto space = rrb_slots(m);
    if (!space.count(bound)) fail(ErrorCode::SearchTooLarge, "cochain space exceeds the bound");
    std::vector<std::vector<Elem>> cob;
    for_each_assignment(rrb_kappa_slots(m), bound, [&](const std::vector<Elem>& v) {
        auto [k1, k2] = kappa_from_slots(m, v);
        cob.push_back(rrb_to_slots(rrb_coboundary(m, k1, k2)));
    });
    return classify(space, bound, [&](const std::vector<Elem>& v) { return bool(is_rrb_cocycle(m, rrb_from_slots(m, v))); },
                    cob);
}

RrbTables rrb_extension_tables(const RRBModule& m, const RrbCochain& c) {
    const auto& A = m.base.h;
    const auto& B = m.base.g;
    const int na = A.order(), nb = B.order(), nk = m.k.order(), nl = m.l.order();
    const int nh = na * nk, ng = nb * nl;
    Additive K(m.k);
    Additive L(m.l);
    RrbTables t;
    t.h.resize(static_cast<std::size_t>(nh) * nh);
    t.g.resize(static_cast<std::size_t>(ng) * ng);
    for (Elem a1 = 0; a1 < na; ++a1)
        for (Elem k1 = 0; k1 < nk; ++k1)
            for (Elem a2 = 0; a2 < na; ++a2)
                for (Elem k2 = 0; k2 < nk; ++k2)
                    t.h[static_cast<std::size_t>(pair_index(a1, k1, nk)) * nh + pair_index(a2, k2, nk)] =
                        pair_index(A.mul(a1, a2), K.sum({c.tau1(a1, a2), m.mu.apply(a2, k1), k2}), nk);
    for (Elem b1 = 0; b1 < nb; ++b1)
        for (Elem l1 = 0; l1 < nl; ++l1)
            for (Elem b2 = 0; b2 < nb; ++b2)
                for (Elem l2 = 0; l2 < nl; ++l2)
                    t.g[static_cast<std::size_t>(pair_index(b1, l1, nl)) * ng + pair_index(b2, l2, nl)] =
                        pair_index(B.mul(b1, b2), L.sum({c.tau2(b1, b2), m.sigma.apply(b2, l1), l2}), nl);
    t.phi.resize(ng);
    for (Elem b = 0; b < nb; ++b)
        for (Elem l = 0; l < nl; ++l) {
            auto& img = t.phi[pair_index(b, l, nl)].values;
            img.resize(nh);
            for (Elem a = 0; a < na; ++a)
                for (Elem k = 0; k < nk; ++k)
                    img[pair_index(a, k, nk)] =
                        pair_index(m.base.phi.apply(b, a), K.add(c.rho(a, b), m.nu.apply(b, K.add(m.f(l, a), k))), nk);
        }
    t.r.values.resize(nh);
    for (Elem a = 0; a < na; ++a) {
        Elem ta = m.base.r(a);
        for (Elem k = 0; k < nk; ++k)
            t.r.values[pair_index(a, k, nk)] = pair_index(ta, L.add(c.chi(a), m.s_op(m.nu.apply_inverse(ta, k))), nl);
    }
    return t;
}

Verdict check_rrb_tables(const RRBModule& m, const RrbTables& t) {
    const int nh = m.base.h.order() * m.k.order(), ng = m.base.g.order() * m.l.order();
    try {
        auto h = FiniteGroup::from_flat(nh, t.h);
        auto g = FiniteGroup::from_flat(ng, t.g);
        auto phi = GroupAction::unchecked(g, h, t.phi, false);
        if (auto v = phi.check(); !v) return Verdict::no("phi: " + v.witness);
        return check_rrb(RRBGroup{h, g, phi, t.r});
    } catch (const AlgebraError& e) {
        return Verdict::no(e.what());
    }
}

RrbExtension extension_from_rrb_cocycle(const RRBModule& m, const RrbCochain& c) {
    if (auto v = is_rrb_cocycle(m, c); !v) fail(ErrorCode::NotCocycle, v.witness);
    if (auto v = check_rrb_phi_compatibility(m); !v) fail(ErrorCode::ModuleConditionFails, v.witness);
    auto t = rrb_extension_tables(m, c);
    if (auto v = check_rrb_tables(m, t); !v) fail(ErrorCode::InternalDefect, "cocycle produced no RRB group: " + v.witness);
    const int na = m.base.h.order(), nb = m.base.g.order(), nk = m.k.order(), nl = m.l.order();
    RrbExtension e;
    auto h = FiniteGroup::from_flat(na * nk, std::move(t.h));
    auto g = FiniteGroup::from_flat(nb * nl, std::move(t.g));
    e.total = RRBGroup{h, g, GroupAction::unchecked(g, h, std::move(t.phi), false), t.r};
    e.base = m.base;
    e.kernel = RRBGroup{m.k, m.l, GroupAction::trivial(m.l, m.k, false), m.s_op};
    e.incl_h = identity_map(nk);
    e.incl_g = identity_map(nl);
    e.proj_h.values.resize(static_cast<std::size_t>(na) * nk);
    for (Elem x = 0; x < na * nk; ++x) e.proj_h.values[x] = x / nk;
    e.proj_g.values.resize(static_cast<std::size_t>(nb) * nl);
    for (Elem x = 0; x < nb * nl; ++x) e.proj_g.values[x] = x / nl;
    return e;
}

Verdict check_rrb_extension(const RrbExtension& e) {
    if (auto v = check_rrb_hom(e.incl_h, e.incl_g, e.kernel, e.total); !v) return Verdict::no("inclusion: " + v.witness);
    if (auto v = check_rrb_hom(e.proj_h, e.proj_g, e.total, e.base); !v) return Verdict::no("projection: " + v.witness);
    auto exact = [](const ElementMap& incl, const ElementMap& proj, int total, int kernel, int base) {
        auto pre = preimage_table(incl, total);
        int count = 0;
        for (Elem x = 0; x < total; ++x) {
            bool in_kernel = proj(x) == 0;
            count += in_kernel;
            if (in_kernel != (pre[x] >= 0)) return false;
        }
        return count == kernel && total == kernel * base;
    };
    if (!exact(e.incl_h, e.proj_h, e.total.h.order(), e.kernel.h.order(), e.base.h.order()))
        return Verdict::no("first sequence is not exact");
    if (!exact(e.incl_g, e.proj_g, e.total.g.order(), e.kernel.g.order(), e.base.g.order()))
        return Verdict::no("second sequence is not exact");
    return Verdict::ok();
}

RRBModule rrb_module_from_extension(const RrbExtension& e, const ElementMap& s_h, const ElementMap& s_g) {
    if (auto v = check_section(s_h, e.proj_h, e.base.h.order()); !v) fail(ErrorCode::NotASection, v.witness);
    if (auto v = check_section(s_g, e.proj_g, e.base.g.order()); !v) fail(ErrorCode::NotASection, v.witness);
    const auto& H = e.total.h;
    const auto& G = e.total.g;
    const auto& phi = e.total.phi;
    auto pre_k = preimage_table(e.incl_h, H.order());
    auto pre_l = preimage_table(e.incl_g, G.order());
    const int na = e.base.h.order(), nb = e.base.g.order(), nk = e.kernel.h.order(), nl = e.kernel.g.order();
    auto lookup = [](const std::vector<Elem>& pre, Elem x) {
        if (pre[x] < 0) fail(ErrorCode::NotAnExtension, "value outside the kernel");
        return pre[x];
    };
    std::vector<ElementMap> nu(nb), mu(na), sigma(nb);
    for (Elem b = 0; b < nb; ++b) {
        nu[b].values.resize(nk);
        sigma[b].values.resize(nl);
        for (Elem k = 0; k < nk; ++k) nu[b].values[k] = lookup(pre_k, phi.apply(s_g(b), e.incl_h(k)));
        for (Elem l = 0; l < nl; ++l) sigma[b].values[l] = lookup(pre_l, G.mul(G.mul(G.inv(s_g(b)), e.incl_g(l)), s_g(b)));
    }
    for (Elem a = 0; a < na; ++a) {
        mu[a].values.resize(nk);
        for (Elem k = 0; k < nk; ++k) mu[a].values[k] = lookup(pre_k, H.mul(H.mul(H.inv(s_h(a)), e.incl_h(k)), s_h(a)));
    }
    Cochain2 f = Cochain2::zero(nl, na);
    for (Elem l = 0; l < nl; ++l)
        for (Elem a = 0; a < na; ++a) f.at(l, a) = lookup(pre_k, H.mul(H.inv(s_h(a)), phi.apply(e.incl_g(l), s_h(a))));
    return validate_rrb_module(e.base, e.kernel.h, e.kernel.g, e.kernel.r, GroupAction::make(e.base.g, e.kernel.h, nu, false),
                               GroupAction::make(e.base.h, e.kernel.h, mu, true),
                               GroupAction::make(e.base.g, e.kernel.g, sigma, true), f);
}

RrbCochain rrb_cocycle_from_extension(const RrbExtension& e, const ElementMap& s_h, const ElementMap& s_g) {
    if (auto v = check_section(s_h, e.proj_h, e.base.h.order()); !v) fail(ErrorCode::NotASection, v.witness);
    if (auto v = check_section(s_g, e.proj_g, e.base.g.order()); !v) fail(ErrorCode::NotASection, v.witness);
    const auto& H = e.total.h;
    const auto& G = e.total.g;
    const auto& A = e.base.h;
    const auto& B = e.base.g;
    auto pre_k = preimage_table(e.incl_h, H.order());
    auto pre_l = preimage_table(e.incl_g, G.order());
    auto lookup = [](const std::vector<Elem>& pre, Elem x, const char* what) {
        if (pre[x] < 0) fail(ErrorCode::NotAnExtension, std::string(what) + " value outside the kernel");
        return pre[x];
    };
    const int na = A.order(), nb = B.order();
    RrbCochain c{Cochain2::zero(na, na), Cochain2::zero(nb, nb), Cochain2::zero(na, nb), constant_map(na, 0)};
    for (Elem a1 = 0; a1 < na; ++a1)
        for (Elem a2 = 0; a2 < na; ++a2)
            c.tau1.at(a1, a2) = lookup(pre_k, H.mul(H.inv(s_h(A.mul(a1, a2))), H.mul(s_h(a1), s_h(a2))), "tau1");
    for (Elem b1 = 0; b1 < nb; ++b1)
        for (Elem b2 = 0; b2 < nb; ++b2)
            c.tau2.at(b1, b2) = lookup(pre_l, G.mul(G.inv(s_g(B.mul(b1, b2))), G.mul(s_g(b1), s_g(b2))), "tau2");
    for (Elem a = 0; a < na; ++a)
        for (Elem b = 0; b < nb; ++b)
            c.rho.at(a, b) = lookup(pre_k, H.mul(H.inv(s_h(e.base.phi.apply(b, a))), e.total.phi.apply(s_g(b), s_h(a))), "rho");
    for (Elem a = 0; a < na; ++a)
        c.chi.values[a] = lookup(pre_l, G.mul(G.inv(s_g(e.base.r(a))), e.total.r(s_h(a))), "chi");
    return c;
}

RrbExtension rrb_extension_from_ideal(const RRBGroup& e, const Subset& k, const Subset& l) {
    const auto& H = e.h;
    const auto& G = e.g;
    if (!is_normal_subgroup(H, k) || !is_normal_subgroup(G, l)) fail(ErrorCode::NotAnIdeal, "subsets must be normal subgroups");
    for (Elem x : k)
        for (Elem y : k)
            if (H.mul(x, y) != H.mul(y, x)) fail(ErrorCode::CoeffNotAbelian, "K is not abelian");
    for (Elem x : l)
        for (Elem y : l)
            if (G.mul(x, y) != G.mul(y, x)) fail(ErrorCode::CoeffNotAbelian, "L is not abelian");
    for (Elem g = 0; g < G.order(); ++g)
        for (Elem x : k)
            if (!contains(k, e.phi.apply(g, x))) fail(ErrorCode::NotAnIdeal, "K is not phi-invariant");
    for (Elem y : l) {
        for (Elem x : k)
            if (e.phi.apply(y, x) != x) fail(ErrorCode::NotAnIdeal, "L acts nontrivially on K");
        for (Elem h = 0; h < H.order(); ++h)
            if (!contains(k, H.mul(e.phi.apply(y, h), H.inv(h)))) fail(ErrorCode::NotAnIdeal, "L acts nontrivially on H/K");
    }
    for (Elem x : k)
        if (!contains(l, e.r(x))) fail(ErrorCode::NotAnIdeal, "R(K) is not inside L");
    auto qh = quotient_group(H, k);
    auto qg = quotient_group(G, l);
    const int na = qh.group.order(), nb = qg.group.order();
    std::vector<ElementMap> beta(nb, constant_map(na, -1));
    ElementMap t = constant_map(na, -1);
    for (Elem h = 0; h < H.order(); ++h) {
        Elem a = qh.projection(h);
        Elem ta = qg.projection(e.r(h));
        if (t(a) != -1 && t(a) != ta) fail(ErrorCode::NotAnIdeal, "R does not descend to the quotient");
        t.values[a] = ta;
        for (Elem g = 0; g < G.order(); ++g) {
            Elem b = qg.projection(g);
            Elem v = qh.projection(e.phi.apply(g, h));
            if (beta[b](a) != -1 && beta[b](a) != v) fail(ErrorCode::NotAnIdeal, "phi does not descend to the quotient");
            beta[b].values[a] = v;
        }
    }
    RrbExtension out;
    out.total = e;
    out.base = validate_rrb(qh.group, qg.group, GroupAction::make(qg.group, qh.group, beta, false), t);
    auto kg = subgroup(H, k);
    auto lg = subgroup(G, l);
    ElementMap s = constant_map(kg.order(), 0);
    for (std::size_t i = 0; i < k.size(); ++i)
        s.values[i] = static_cast<Elem>(std::lower_bound(l.begin(), l.end(), e.r(k[i])) - l.begin());
    out.kernel = validate_rrb(kg, lg, GroupAction::trivial(lg, kg, false), s);
    out.incl_h = ElementMap{k};
    out.incl_g = ElementMap{l};
    out.proj_h = qh.projection;
    out.proj_g = qg.projection;
    if (auto v = check_rrb_extension(out); !v) fail(ErrorCode::InternalDefect, v.witness);
    return out;
}

std::optional<std::pair<ElementMap, ElementMap>> find_rrb_equivalence(const RrbExtension& a, const RrbExtension& b,
                                                                      std::uint64_t bound) {
    const auto& HA = a.total.h;
    const auto& GA = a.total.g;
    const auto& HB = b.total.h;
    const auto& GB = b.total.g;
    if (HA.order() != HB.order() || GA.order() != GB.order()) return std::nullopt;
    const int na = a.base.h.order(), nb = a.base.g.order();
    auto sha = canonical_section(a.proj_h, na), sga = canonical_section(a.proj_g, nb);
    auto shb = canonical_section(b.proj_h, na), sgb = canonical_section(b.proj_g, nb);
    auto pre_k = preimage_table(a.incl_h, HA.order());
    auto pre_l = preimage_table(a.incl_g, GA.order());
    SlotSpace space;
    space.groups.insert(space.groups.end(), na - 1, &a.kernel.h);
    space.groups.insert(space.groups.end(), nb - 1, &a.kernel.g);
    std::optional<std::pair<ElementMap, ElementMap>> found;
    for_each_assignment(space, bound, [&](const std::vector<Elem>& v) {
        if (found) return;
        ElementMap k1 = constant_map(na, 0), k2 = constant_map(nb, 0);
        std::size_t i = 0;
        for (Elem x = 1; x < na; ++x) k1.values[x] = v[i++];
        for (Elem y = 1; y < nb; ++y) k2.values[y] = v[i++];
        ElementMap fh = constant_map(HA.order(), 0), fg = constant_map(GA.order(), 0);
        for (Elem x = 0; x < HA.order(); ++x) {
            Elem m = a.proj_h(x);
            Elem y = pre_k[HA.mul(HA.inv(sha(m)), x)];
            fh.values[x] = HB.mul(HB.mul(shb(m), b.incl_h(k1(m))), b.incl_h(y));
        }
        for (Elem x = 0; x < GA.order(); ++x) {
            Elem m = a.proj_g(x);
            Elem y = pre_l[GA.mul(GA.inv(sga(m)), x)];
            fg.values[x] = GB.mul(GB.mul(sgb(m), b.incl_g(k2(m))), b.incl_g(y));
        }
        if (check_rrb_hom(fh, fg, a.total, b.total)) found = std::make_pair(fh, fg);
    });
    return found;
}

}  // namespace sbrace
