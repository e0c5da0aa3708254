#include "sbrace/cohomology_rb.hpp"

#include <algorithm>
#include <string>

#include "sbrace/cohomology_sb.hpp"

namespace sbrace {

const char* const kRbEquationNames[] = {"group cocycle equation", "operator cocycle equation"};

namespace {

std::string at2(Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::vector<Elem> preimage_table(const ElementMap& f, int codomain_order) {
    std::vector<Elem> inv(codomain_order, -1);
    for (Elem x = 0; x < f.size(); ++x) inv[f(x)] = x;
    return inv;
}

}  // namespace

Verdict check_rb_module(const RBModule& m) {
    if (auto v = require_abelian(m.coeff); !v) return v;
    const auto& h = m.base.group;
    if (!m.gamma.contravariant() || !(m.gamma.actor() == h) || !(m.gamma.space() == m.coeff))
        return Verdict::no("gamma must be a contravariant action of H on I");
    if (auto v = m.gamma.check(); !v) return Verdict::no("gamma: " + v.witness);
    if (auto v = is_homomorphism(m.r_i, m.coeff, m.coeff); !v) return Verdict::no("R_I: " + v.witness);
    Additive i(m.coeff);
    for (Elem x = 0; x < h.order(); ++x) {
        Elem rx = m.base(x);
        Elem xr = h.mul(x, rx);
        for (Elem z = 0; z < m.coeff.order(); ++z) {
            Elem rz = m.r_i(z);
            Elem lhs = m.gamma.apply(rx, rz);
            Elem rhs = m.r_i(i.sub(m.gamma.apply(xr, i.add(z, rz)), m.gamma.apply(rx, rz)));
            if (lhs != rhs) return Verdict::no("module law fails at " + at2(x, z));
        }
    }
    return Verdict::ok();
}

RBModule validate_rb_module(const RBOperator& base, const FiniteGroup& coeff, const ElementMap& r_i,
                            const GroupAction& gamma) {
    if (!coeff.is_abelian()) fail(ErrorCode::CoeffNotAbelian, "coefficient group is not abelian");
    if (auto v = is_homomorphism(r_i, coeff, coeff); !v) fail(ErrorCode::NotEndomorphism, v.witness);
    if (!gamma.contravariant() || !(gamma.actor() == base.group) || !(gamma.space() == coeff) || !gamma.check())
        fail(ErrorCode::NotAntiAction, "gamma must be a contravariant action of H on I");
    RBModule m{base, coeff, r_i, gamma};
    if (auto v = check_rb_module(m); !v) fail(ErrorCode::ModuleLawFails, v.witness);
    return m;
}

RBModule trivial_rb_module(const RBOperator& base, const FiniteGroup& coeff, const ElementMap& r_i) {
    return validate_rb_module(base, coeff, r_i, GroupAction::trivial(base.group, coeff, true));
}

void rb_residual(const RBModule& m, const RbCochain& c, const ResidualSink& sink) {
    const auto& h = m.base.group;
    const auto& R = m.base;
    const int n = h.order();
    Additive i(m.coeff);
    const auto& tau = c.tau;
    const auto& g = m.gamma;
    for (Elem h1 = 0; h1 < n; ++h1)
        for (Elem h2 = 0; h2 < n; ++h2)
            for (Elem h3 = 0; h3 < n; ++h3) {
                Elem v = i.sum({tau(h2, h3), i.neg(tau(h.mul(h1, h2), h3)), tau(h1, h.mul(h2, h3)),
                                i.neg(g.apply(h3, tau(h1, h2)))});
                if (!sink({0, {h1, h2, h3}, &m.coeff, v})) return;
            }
    for (Elem h1 = 0; h1 < n; ++h1)
        for (Elem h2 = 0; h2 < n; ++h2) {
            Elem r1 = R(h1), r2 = R(h2), r1i = h.inv(r1);
            Elem circ = R.circ(h1, h2);
            Elem r1v = c.r(h1);
            Elem d1 = i.sum({c.r(h2), i.neg(c.r(circ)), g.apply(r2, r1v)});
            Elem twist = m.r_i(i.sub(g.apply(r2, g.apply(h2, r1v)), g.apply(r2, r1v)));
            Elem inner = i.sum({tau(h.mul(h1, r1), h.mul(h2, r1i)), g.apply(h.mul(h2, r1i), tau(h1, r1)),
                                tau(h2, r1i), i.neg(tau(r1, r1i))});
            Elem phi2 = i.sub(tau(r1, r2), m.r_i(g.apply(R(circ), inner)));
            Elem v = i.sum({d1, i.neg(twist), phi2});
            if (!sink({1, {h1, h2, 0}, &m.coeff, v})) return;
        }
}

Verdict is_rb_cocycle(const RBModule& m, const RbCochain& c) {
    if (!c.tau.normalized() || c.r(0) != 0) return Verdict::no("cochain is not normalized");
    Verdict out;
    rb_residual(m, c, [&](const ResidualEntry& e) {
        if (e.value == 0) return true;
        out = Verdict::no(describe(e, kRbEquationNames));
        return false;
    });
    return out;
}

RbCochain rb_coboundary(const RBModule& m, const ElementMap& theta) {
    const auto& h = m.base.group;
    const int n = h.order();
    Additive i(m.coeff);
    RbCochain c{Cochain2::zero(n, n), constant_map(n, 0)};
    for (Elem h1 = 0; h1 < n; ++h1)
        for (Elem h2 = 0; h2 < n; ++h2)
            c.tau.at(h1, h2) = i.sum({theta(h2), i.neg(theta(h.mul(h1, h2))), m.gamma.apply(h2, theta(h1))});
    for (Elem x = 0; x < n; ++x) {
        Elem rx = m.base(x);
        c.r.values[x] = i.sub(m.r_i(m.gamma.apply(rx, theta(x))), theta(rx));
    }
    return c;
}

SlotSpace rb_slots(const RBModule& m) {
    const int n = m.base.group.order();
    return SlotSpace{std::vector<const FiniteGroup*>((n - 1) * (n - 1) + (n - 1), &m.coeff)};
}

SlotSpace rb_theta_slots(const RBModule& m) {
    return SlotSpace{std::vector<const FiniteGroup*>(m.base.group.order() - 1, &m.coeff)};
}

std::vector<Elem> rb_to_slots(const RbCochain& c) {
    std::vector<Elem> v;
    for (Elem a = 1; a < c.tau.rows; ++a)
        for (Elem b = 1; b < c.tau.cols; ++b) v.push_back(c.tau(a, b));
    v.insert(v.end(), c.r.values.begin() + 1, c.r.values.end());
    return v;
}

RbCochain rb_from_slots(const RBModule& m, const std::vector<Elem>& v) {
    const int n = m.base.group.order();
    RbCochain c{Cochain2::zero(n, n), constant_map(n, 0)};
    std::size_t k = 0;
    for (Elem a = 1; a < n; ++a)
        for (Elem b = 1; b < n; ++b) c.tau.at(a, b) = v[k++];
    for (Elem a = 1; a < n; ++a) c.r.values[a] = v[k++];
    return c;
}

std::optional<ElementMap> is_rb_coboundary(const RBModule& m, const RbCochain& c, std::uint64_t bound) {
    const int n = m.base.group.order();
    auto space = rb_theta_slots(m);
    if (space.count(bound)) {
        std::optional<ElementMap> found;
        for_each_assignment(space, bound, [&](const std::vector<Elem>& v) {
            if (found) return;
            auto theta = theta_from_slots(n, v);
            if (rb_coboundary(m, theta) == c) found = theta;
        });
        return found;
    }
    auto map = linear::FpLinearMap::build(space, rb_slots(m), [&](const std::vector<Elem>& v) {
        return rb_to_slots(rb_coboundary(m, theta_from_slots(n, v)));
    });
    if (!map) fail(ErrorCode::SearchTooLarge, "theta space exceeds the bound and I is not elementary abelian");
    auto sol = map->solve(rb_to_slots(c));
    if (!sol) return std::nullopt;
    return theta_from_slots(n, *sol);
}

ClassCount h2_rb(const RBModule& m, std::uint64_t bound) {
    const int n = m.base.group.order();
    auto space = rb_slots(m);
    if (!space.count(bound)) fail(ErrorCode::SearchTooLarge, "cochain space exceeds the bound");
    std::vector<std::vector<Elem>> cob;
    for_each_assignment(rb_theta_slots(m), bound, [&](const std::vector<Elem>& v) {
        cob.push_back(rb_to_slots(rb_coboundary(m, theta_from_slots(n, v))));
    });
    return classify(space, bound, [&](const std::vector<Elem>& v) { return bool(is_rb_cocycle(m, rb_from_slots(m, v))); },
                    cob);
}

std::pair<std::vector<Elem>, ElementMap> rb_extension_tables(const RBModule& m, const RbCochain& c) {
    const auto& h = m.base.group;
    const int n = h.order(), k = m.coeff.order(), size = n * k;
    Additive i(m.coeff);
    std::vector<Elem> mul(static_cast<std::size_t>(size) * size);
    ElementMap r;
    r.values.resize(size);
    for (Elem h1 = 0; h1 < n; ++h1)
        for (Elem y1 = 0; y1 < k; ++y1) {
            Elem x = pair_index(h1, y1, k);
            Elem rh = m.base(h1);
            r.values[x] = pair_index(rh, i.add(c.r(h1), m.r_i(m.gamma.apply(rh, y1))), k);
            for (Elem h2 = 0; h2 < n; ++h2)
                for (Elem y2 = 0; y2 < k; ++y2)
                    mul[static_cast<std::size_t>(x) * size + pair_index(h2, y2, k)] =
                        pair_index(h.mul(h1, h2), i.sum({c.tau(h1, h2), m.gamma.apply(h2, y1), y2}), k);
        }
    return {std::move(mul), std::move(r)};
}

Verdict check_rb_extension(const RbExtension& e) {
    if (auto v = is_rb_homomorphism(e.inclusion, e.kernel, e.total); !v) return Verdict::no("inclusion: " + v.witness);
    if (auto v = is_rb_homomorphism(e.projection, e.total, e.base); !v) return Verdict::no("projection: " + v.witness);
    auto pre = preimage_table(e.inclusion, e.total.group.order());
    int kernel = 0;
    for (Elem x = 0; x < e.total.group.order(); ++x) {
        bool in_kernel = e.projection(x) == 0;
        kernel += in_kernel;
        if (in_kernel != (pre[x] >= 0)) return Verdict::no("image of inclusion differs from kernel");
    }
    if (kernel != e.kernel.group.order()) return Verdict::no("inclusion is not injective");
    if (e.total.group.order() != e.base.group.order() * kernel) return Verdict::no("projection is not surjective");
    return Verdict::ok();
}

RbExtension extension_from_rb_cocycle(const RBModule& m, const RbCochain& c) {
    if (auto v = is_rb_cocycle(m, c); !v) fail(ErrorCode::NotCocycle, v.witness);
    auto [mul, r] = rb_extension_tables(m, c);
    const int n = m.base.group.order(), k = m.coeff.order();
    RbExtension e;
    try {
        e.total = validate_rb(FiniteGroup::from_flat(n * k, std::move(mul)), r);
    } catch (const AlgebraError& err) {
        fail(ErrorCode::InternalDefect, std::string("cocycle produced no RB group: ") + err.what());
    }
    e.base = m.base;
    e.kernel = validate_rb(m.coeff, m.r_i);
    e.inclusion = identity_map(k);
    e.projection.values.resize(static_cast<std::size_t>(n) * k);
    for (Elem x = 0; x < n * k; ++x) e.projection.values[x] = x / k;
    return e;
}

RBModule rb_module_from_extension(const RbExtension& e, const ElementMap& section) {
    const auto& base = e.base.group;
    if (auto v = check_section(section, e.projection, base.order()); !v) fail(ErrorCode::NotASection, v.witness);
    const auto& E = e.total.group;
    auto pre = preimage_table(e.inclusion, E.order());
    const int n = base.order(), k = e.kernel.group.order();
    std::vector<ElementMap> gamma(n);
    for (Elem h = 0; h < n; ++h) {
        Elem s = section(h);
        gamma[h].values.resize(k);
        for (Elem y = 0; y < k; ++y) {
            Elem v = pre[E.mul(E.mul(E.inv(s), e.inclusion(y)), s)];
            if (v < 0) fail(ErrorCode::NotAnExtension, "kernel is not normal");
            gamma[h].values[y] = v;
        }
    }
    return validate_rb_module(e.base, e.kernel.group, e.kernel.map,
                              GroupAction::make(base, e.kernel.group, gamma, true));
}

RbCochain rb_cocycle_from_extension(const RbExtension& e, const ElementMap& section) {
    const auto& base = e.base.group;
    if (auto v = check_section(section, e.projection, base.order()); !v) fail(ErrorCode::NotASection, v.witness);
    const auto& E = e.total.group;
    auto pre = preimage_table(e.inclusion, E.order());
    const int n = base.order();
    RbCochain c{Cochain2::zero(n, n), constant_map(n, 0)};
    for (Elem h1 = 0; h1 < n; ++h1) {
        for (Elem h2 = 0; h2 < n; ++h2) {
            Elem t = E.mul(E.inv(section(base.mul(h1, h2))), E.mul(section(h1), section(h2)));
            if (pre[t] < 0) fail(ErrorCode::NotAnExtension, "cocycle value outside the kernel at " + at2(h1, h2));
            c.tau.at(h1, h2) = pre[t];
        }
        Elem r = E.mul(E.inv(section(e.base(h1))), e.total(section(h1)));
        if (pre[r] < 0) fail(ErrorCode::NotAnExtension, "operator value outside the kernel at " + std::to_string(h1));
        c.r.values[h1] = pre[r];
    }
    return c;
}

RbExtension rb_extension_from_ideal(const RBOperator& e, const Subset& ideal) {
    const auto& g = e.group;
    if (!is_normal_subgroup(g, ideal)) fail(ErrorCode::NotAnIdeal, "subset is not normal");
    for (Elem a : ideal) {
        if (!contains(ideal, e(a))) fail(ErrorCode::NotAnIdeal, "R does not preserve the subgroup");
        for (Elem b : ideal)
            if (g.mul(a, b) != g.mul(b, a)) fail(ErrorCode::CoeffNotAbelian, "subgroup is not abelian");
    }
    auto q = quotient_group(g, ideal);
    ElementMap rq = constant_map(q.group.order(), 0);
    for (Elem x = 0; x < g.order(); ++x) {
        Elem c = q.projection(x);
        Elem v = q.projection(e(x));
        if (x == q.representative[c]) rq.values[c] = v;
        else if (rq(c) != v) fail(ErrorCode::NotAnIdeal, "R does not descend to the quotient");
    }
    RbExtension out;
    out.total = e;
    out.base = validate_rb(q.group, rq);
    auto sub = subgroup(g, ideal);
    ElementMap ri = constant_map(sub.order(), 0);
    for (std::size_t i = 0; i < ideal.size(); ++i)
        ri.values[i] = static_cast<Elem>(std::lower_bound(ideal.begin(), ideal.end(), e(ideal[i])) - ideal.begin());
    out.kernel = validate_rb(sub, ri);
    out.inclusion = ElementMap{ideal};
    out.projection = q.projection;
    if (auto v = check_rb_extension(out); !v) fail(ErrorCode::InternalDefect, v.witness);
    return out;
}

std::optional<ElementMap> find_rb_equivalence(const RbExtension& a, const RbExtension& b, std::uint64_t bound) {
    const auto& A = a.total.group;
    const auto& B = b.total.group;
    if (A.order() != B.order() || a.base.group.order() != b.base.group.order()) return std::nullopt;
    const int n = a.base.group.order();
    auto sa = canonical_section(a.projection, n);
    auto sb = canonical_section(b.projection, n);
    auto pre = preimage_table(a.inclusion, A.order());
    SlotSpace space{std::vector<const FiniteGroup*>(n - 1, &a.kernel.group)};
    std::optional<ElementMap> found;
    for_each_assignment(space, bound, [&](const std::vector<Elem>& v) {
        if (found) return;
        auto theta = theta_from_slots(n, v);
        ElementMap phi = constant_map(A.order(), 0);
        for (Elem x = 0; x < A.order(); ++x) {
            Elem m = a.projection(x);
            Elem y = pre[A.mul(A.inv(sa(m)), x)];
            phi.values[x] = B.mul(B.mul(sb(m), b.inclusion(theta(m))), b.inclusion(y));
        }
        if (is_rb_homomorphism(phi, a.total, b.total)) found = phi;
    });
    return found;
}

}  // namespace sbrace
