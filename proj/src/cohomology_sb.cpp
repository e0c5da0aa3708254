#include "sbrace/cohomology_sb.hpp"

#include <string>

namespace sbrace {

const char* const kSbEquationNames[] = {"additive cocycle equation", "multiplicative cocycle equation",
                                        "compatibility equation"};

namespace {

std::string at2(Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Verdict check_action_shape(const GroupAction& a, const FiniteGroup& actor, const FiniteGroup& space,
                           bool contravariant, const char* name) {
    if (a.contravariant() != contravariant)
        return Verdict::no(std::string(name) + (contravariant ? " must be contravariant" : " must be covariant"));
    if (!(a.actor() == actor) || !(a.space() == space))
        return Verdict::no(std::string(name) + " acts with the wrong groups");
    if (auto v = a.check(); !v) return Verdict::no(std::string(name) + ": " + v.witness);
    return Verdict::ok();
}

// Inverse of an injective map, -1 off the image.
std::vector<Elem> preimage_table(const ElementMap& f, int codomain_order) {
    std::vector<Elem> inv(codomain_order, -1);
    for (Elem x = 0; x < f.size(); ++x) inv[f(x)] = x;
    return inv;
}

}  // namespace

Verdict check_good_triplet(const ActionTriplet& t) {
    if (auto v = require_abelian(t.coeff); !v) return v;
    const auto& m = t.base;
    if (auto v = check_action_shape(t.xi, m.mul(), t.coeff, false, "xi"); !v) return v;
    if (auto v = check_action_shape(t.zeta, m.add(), t.coeff, true, "zeta"); !v) return v;
    if (auto v = check_action_shape(t.eps, m.mul(), t.coeff, true, "eps"); !v) return v;
    Additive i(t.coeff);
    const int n = m.order();
    for (Elem m1 = 0; m1 < n; ++m1)
        for (Elem m2 = 0; m2 < n; ++m2) {
            Elem m12 = m.plus(m1, m2);
            Elem shifted = m.plus(m.minus(m1), m.circ(m1, m2));
            for (Elem y = 0; y < t.coeff.order(); ++y) {
                Elem lhs = i.add(t.xi.apply(m12, t.eps.apply(m12, y)), t.zeta.apply(m2, y));
                Elem rhs = i.add(t.zeta.apply(m2, t.xi.apply(m1, t.eps.apply(m1, y))),
                                 t.xi.apply(m2, t.eps.apply(m2, y)));
                if (lhs != rhs) return Verdict::no("first compatibility fails at " + at2(m1, m2));
                if (t.zeta.apply(shifted, t.xi.apply(m1, y)) != t.xi.apply(m1, t.zeta.apply(m2, y)))
                    return Verdict::no("second compatibility fails at " + at2(m1, m2));
            }
        }
    return Verdict::ok();
}

ActionTriplet validate_good_triplet(const SkewBrace& base, const FiniteGroup& coeff, const GroupAction& xi,
                                    const GroupAction& zeta, const GroupAction& eps) {
    if (!coeff.is_abelian()) fail(ErrorCode::CoeffNotAbelian, "coefficient group is not abelian");
    ActionTriplet t{base, coeff, xi, zeta, eps};
    if (auto v = check_good_triplet(t); !v) fail(ErrorCode::NotGoodTriplet, v.witness);
    return t;
}

ActionTriplet trivial_triplet(const SkewBrace& base, const FiniteGroup& coeff) {
    return validate_good_triplet(base, coeff, GroupAction::trivial(base.mul(), coeff, false),
                                 GroupAction::trivial(base.add(), coeff, true),
                                 GroupAction::trivial(base.mul(), coeff, true));
}

void sb_residual(const ActionTriplet& t, const SbCochain& c, const ResidualSink& sink) {
    const auto& m = t.base;
    const int n = m.order();
    Additive i(t.coeff);
    const auto& g = c.g;
    const auto& f = c.f;
    for (Elem m1 = 0; m1 < n; ++m1)
        for (Elem m2 = 0; m2 < n; ++m2)
            for (Elem m3 = 0; m3 < n; ++m3) {
                Elem a = i.sum({g(m2, m3), i.neg(g(m.plus(m1, m2), m3)), g(m1, m.plus(m2, m3)),
                                i.neg(t.zeta.apply(m3, g(m1, m2)))});
                if (!sink({0, {m1, m2, m3}, &t.coeff, a})) return;
            }
    for (Elem m1 = 0; m1 < n; ++m1)
        for (Elem m2 = 0; m2 < n; ++m2)
            for (Elem m3 = 0; m3 < n; ++m3) {
                Elem m12 = m.circ(m1, m2), m123 = m.circ(m12, m3);
                Elem twist = t.xi.apply(m123, t.eps.apply(m3, t.xi.apply_inverse(m12, f(m1, m2))));
                Elem b = i.sum({t.xi.apply(m1, f(m2, m3)), i.neg(f(m12, m3)), f(m1, m.circ(m2, m3)), i.neg(twist)});
                if (!sink({1, {m1, m2, m3}, &t.coeff, b})) return;
            }
    for (Elem m1 = 0; m1 < n; ++m1) {
        Elem neg1 = m.minus(m1);
        for (Elem m2 = 0; m2 < n; ++m2)
            for (Elem m3 = 0; m3 < n; ++m3) {
                Elem c12 = m.circ(m1, m2), c13 = m.circ(m1, m3);
                Elem v = i.sum({t.xi.apply(m1, g(m2, m3)), t.zeta.apply(c13, g(m1, neg1)),
                                i.neg(t.zeta.apply(c13, g(c12, neg1))), i.neg(g(m.plus(c12, neg1), c13)),
                                i.neg(t.zeta.apply(m.plus(neg1, c13), f(m1, m2))), f(m1, m.plus(m2, m3)),
                                i.neg(f(m1, m3))});
                if (!sink({2, {m1, m2, m3}, &t.coeff, v})) return;
            }
    }
}

Verdict is_sb_cocycle(const ActionTriplet& t, const SbCochain& c) {
    if (!c.g.normalized() || !c.f.normalized()) return Verdict::no("cochain is not normalized");
    Verdict out;
    sb_residual(t, c, [&](const ResidualEntry& e) {
        if (e.value == 0) return true;
        out = Verdict::no(describe(e, kSbEquationNames));
        return false;
    });
    return out;
}

SbCochain sb_coboundary(const ActionTriplet& t, const ElementMap& theta) {
    const auto& m = t.base;
    const int n = m.order();
    Additive i(t.coeff);
    SbCochain c{Cochain2::zero(n, n), Cochain2::zero(n, n)};
    for (Elem m1 = 0; m1 < n; ++m1)
        for (Elem m2 = 0; m2 < n; ++m2) {
            c.g.at(m1, m2) = i.sum({i.neg(theta(m.plus(m1, m2))), t.zeta.apply(m2, theta(m1)), theta(m2)});
            Elem m12 = m.circ(m1, m2);
            c.f.at(m1, m2) = i.sum({i.neg(theta(m12)),
                                    t.xi.apply(m12, t.eps.apply(m2, t.xi.apply_inverse(m1, theta(m1)))),
                                    t.xi.apply(m1, theta(m2))});
        }
    return c;
}

SlotSpace sb_slots(const ActionTriplet& t) {
    const int n = t.base.order();
    return SlotSpace{std::vector<const FiniteGroup*>(2 * (n - 1) * (n - 1), &t.coeff)};
}

SlotSpace sb_theta_slots(const ActionTriplet& t) {
    return SlotSpace{std::vector<const FiniteGroup*>(t.base.order() - 1, &t.coeff)};
}

std::vector<Elem> sb_to_slots(const SbCochain& c) {
    std::vector<Elem> v;
    for (const auto* part : {&c.g, &c.f})
        for (Elem a = 1; a < part->rows; ++a)
            for (Elem b = 1; b < part->cols; ++b) v.push_back((*part)(a, b));
    return v;
}

SbCochain sb_from_slots(const ActionTriplet& t, const std::vector<Elem>& v) {
    const int n = t.base.order();
    SbCochain c{Cochain2::zero(n, n), Cochain2::zero(n, n)};
    std::size_t k = 0;
    for (auto* part : {&c.g, &c.f})
        for (Elem a = 1; a < n; ++a)
            for (Elem b = 1; b < n; ++b) part->at(a, b) = v[k++];
    return c;
}

ElementMap theta_from_slots(int n, const std::vector<Elem>& v) {
    ElementMap theta = constant_map(n, 0);
    for (Elem a = 1; a < n; ++a) theta.values[a] = v[a - 1];
    return theta;
}

std::vector<Elem> theta_to_slots(const ElementMap& theta) {
    return std::vector<Elem>(theta.values.begin() + 1, theta.values.end());
}

std::optional<ElementMap> is_sb_coboundary(const ActionTriplet& t, const SbCochain& c, std::uint64_t bound) {
    const int n = t.base.order();
    auto space = sb_theta_slots(t);
    if (space.count(bound)) {
        std::optional<ElementMap> found;
        for_each_assignment(space, bound, [&](const std::vector<Elem>& v) {
            if (found) return;
            auto theta = theta_from_slots(n, v);
            if (sb_coboundary(t, theta) == c) found = theta;
        });
        return found;
    }
    auto map = linear::FpLinearMap::build(space, sb_slots(t), [&](const std::vector<Elem>& v) {
        return sb_to_slots(sb_coboundary(t, theta_from_slots(n, v)));
    });
    if (!map) fail(ErrorCode::SearchTooLarge, "theta space exceeds the bound and I is not elementary abelian");
    auto sol = map->solve(sb_to_slots(c));
    if (!sol) return std::nullopt;
    auto theta = theta_from_slots(n, *sol);
    if (!(sb_coboundary(t, theta) == c)) fail(ErrorCode::InternalDefect, "linear solve disagrees with coboundary");
    return theta;
}

ClassCount h2_sb(const ActionTriplet& t, std::uint64_t bound) {
    if (!t.coeff.is_abelian()) fail(ErrorCode::CoeffNotAbelian, "coefficient group is not abelian");
    const int n = t.base.order();
    auto space = sb_slots(t);
    if (!space.count(bound)) fail(ErrorCode::SearchTooLarge, "cochain space exceeds the bound");
    std::vector<std::vector<Elem>> cob;
    for_each_assignment(sb_theta_slots(t), bound, [&](const std::vector<Elem>& v) {
        cob.push_back(sb_to_slots(sb_coboundary(t, theta_from_slots(n, v))));
    });
    return classify(space, bound, [&](const std::vector<Elem>& v) { return bool(is_sb_cocycle(t, sb_from_slots(t, v))); },
                    cob);
}

std::pair<std::vector<Elem>, std::vector<Elem>> sb_extension_tables(const ActionTriplet& t, const SbCochain& c) {
    const auto& m = t.base;
    const int n = m.order(), k = t.coeff.order(), size = n * k;
    Additive i(t.coeff);
    std::vector<Elem> add(static_cast<std::size_t>(size) * size), mul(add.size());
    for (Elem m1 = 0; m1 < n; ++m1)
        for (Elem y1 = 0; y1 < k; ++y1)
            for (Elem m2 = 0; m2 < n; ++m2)
                for (Elem y2 = 0; y2 < k; ++y2) {
                    std::size_t at = static_cast<std::size_t>(pair_index(m1, y1, k)) * size + pair_index(m2, y2, k);
                    add[at] = pair_index(m.plus(m1, m2), i.sum({c.g(m1, m2), t.zeta.apply(m2, y1), y2}), k);
                    Elem m12 = m.circ(m1, m2);
                    Elem carried = t.xi.apply(m12, t.eps.apply(m2, t.xi.apply_inverse(m1, y1)));
                    mul[at] = pair_index(m12, i.sum({c.f(m1, m2), carried, t.xi.apply(m1, y2)}), k);
                }
    return {std::move(add), std::move(mul)};
}

Verdict check_section(const ElementMap& s, const ElementMap& projection, int base_order) {
    if (s.size() != base_order) return Verdict::no("section has the wrong domain");
    if (s(0) != 0) return Verdict::no("section does not send 0 to 0");
    for (Elem m = 0; m < base_order; ++m)
        if (s(m) < 0 || s(m) >= projection.size() || projection(s(m)) != m)
            return Verdict::no("section is not a lift at " + std::to_string(m));
    return Verdict::ok();
}

ElementMap canonical_section(const ElementMap& projection, int base_order) {
    ElementMap s = constant_map(base_order, -1);
    for (Elem e = projection.size() - 1; e >= 0; --e) s.values[projection(e)] = e;
    return s;
}

Verdict check_sb_extension(const SbExtension& e) {
    const int k = e.coeff.order();
    if (!e.coeff.is_abelian()) return Verdict::no("kernel is not abelian");
    if (auto v = is_brace_homomorphism(e.inclusion, trivial_brace(e.coeff), e.total); !v)
        return Verdict::no("inclusion: " + v.witness);
    if (auto v = is_brace_homomorphism(e.projection, e.total, e.base); !v)
        return Verdict::no("projection: " + v.witness);
    auto pre = preimage_table(e.inclusion, e.total.order());
    int kernel = 0;
    for (Elem x = 0; x < e.total.order(); ++x) {
        bool in_kernel = e.projection(x) == 0;
        kernel += in_kernel;
        if (in_kernel != (pre[x] >= 0)) return Verdict::no("image of inclusion differs from kernel");
    }
    if (kernel != k) return Verdict::no("inclusion is not injective");
    if (e.total.order() != e.base.order() * k) return Verdict::no("projection is not surjective");
    return Verdict::ok();
}

SbExtension extension_from_sb_cocycle(const ActionTriplet& t, const SbCochain& c) {
    if (auto v = is_sb_cocycle(t, c); !v) fail(ErrorCode::NotCocycle, v.witness);
    auto [add, mul] = sb_extension_tables(t, c);
    const int n = t.base.order(), k = t.coeff.order();
    SbExtension e;
    try {
        e.total = SkewBrace::make(FiniteGroup::from_flat(n * k, std::move(add)), FiniteGroup::from_flat(n * k, std::move(mul)));
    } catch (const AlgebraError& err) {
        fail(ErrorCode::InternalDefect, std::string("cocycle produced no brace: ") + err.what());
    }
    e.base = t.base;
    e.coeff = t.coeff;
    e.inclusion = identity_map(k);
    e.projection.values.resize(static_cast<std::size_t>(n) * k);
    for (Elem x = 0; x < n * k; ++x) e.projection.values[x] = x / k;
    return e;
}

ActionTriplet triplet_from_extension(const SbExtension& e, const ElementMap& section) {
    if (auto v = check_section(section, e.projection, e.base.order()); !v) fail(ErrorCode::NotASection, v.witness);
    const auto& E = e.total;
    auto pre = preimage_table(e.inclusion, E.order());
    const int n = e.base.order(), k = e.coeff.order();
    std::vector<ElementMap> xi(n), zeta(n), eps(n);
    for (Elem m = 0; m < n; ++m) {
        Elem s = section(m);
        for (auto* img : {&xi[m], &zeta[m], &eps[m]}) img->values.resize(k);
        for (Elem y = 0; y < k; ++y) {
            Elem iy = e.inclusion(y);
            xi[m].values[y] = pre[E.lambda(s, iy)];
            zeta[m].values[y] = pre[E.plus(E.plus(E.minus(s), iy), s)];
            eps[m].values[y] = pre[E.circ(E.circ(E.dagger(s), iy), s)];
        }
    }
    for (const auto* maps : {&xi, &zeta, &eps})
        for (const auto& img : *maps)
            for (Elem v : img.values)
                if (v < 0) fail(ErrorCode::NotAnExtension, "kernel is not invariant");
    return validate_good_triplet(e.base, e.coeff, GroupAction::make(e.base.mul(), e.coeff, xi, false),
                                 GroupAction::make(e.base.add(), e.coeff, zeta, true),
                                 GroupAction::make(e.base.mul(), e.coeff, eps, true));
}

SbCochain sb_cocycle_from_extension(const SbExtension& e, const ElementMap& section) {
    if (auto v = check_section(section, e.projection, e.base.order()); !v) fail(ErrorCode::NotASection, v.witness);
    const auto& E = e.total;
    const auto& M = e.base;
    auto pre = preimage_table(e.inclusion, E.order());
    const int n = M.order();
    SbCochain c{Cochain2::zero(n, n), Cochain2::zero(n, n)};
    for (Elem m1 = 0; m1 < n; ++m1)
        for (Elem m2 = 0; m2 < n; ++m2) {
            Elem s1 = section(m1), s2 = section(m2);
            Elem t1 = E.plus(E.minus(section(M.plus(m1, m2))), E.plus(s1, s2));
            Elem t2 = E.plus(E.minus(section(M.circ(m1, m2))), E.circ(s1, s2));
            if (pre[t1] < 0 || pre[t2] < 0) fail(ErrorCode::NotAnExtension, "cocycle value outside the kernel at " + at2(m1, m2));
            c.g.at(m1, m2) = pre[t1];
            c.f.at(m1, m2) = pre[t2];
        }
    return c;
}

SbExtension sb_extension_from_ideal(const SkewBrace& e, const Subset& ideal) {
    if (!is_ideal(e, ideal)) fail(ErrorCode::NotAnIdeal, "subset is not an ideal");
    for (Elem a : ideal)
        for (Elem b : ideal) {
            if (e.circ(a, b) != e.plus(a, b)) fail(ErrorCode::NotAnExtension, "ideal is not a trivial brace");
            if (e.plus(a, b) != e.plus(b, a)) fail(ErrorCode::CoeffNotAbelian, "ideal is not abelian");
        }
    auto q = quotient_brace(e, ideal);
    SbExtension out;
    out.total = e;
    out.base = q.brace;
    out.coeff = subgroup(e.add(), ideal);
    out.inclusion = ElementMap{ideal};
    out.projection = q.projection;
    if (auto v = check_sb_extension(out); !v) fail(ErrorCode::InternalDefect, v.witness);
    return out;
}

std::optional<ElementMap> find_sb_equivalence(const SbExtension& a, const SbExtension& b, std::uint64_t bound) {
    if (a.total.order() != b.total.order() || a.base.order() != b.base.order()) return std::nullopt;
    const int n = a.base.order();
    const auto& A = a.total;
    const auto& B = b.total;
    auto sa = canonical_section(a.projection, n);
    auto sb = canonical_section(b.projection, n);
    auto pre = preimage_table(a.inclusion, A.order());
    SlotSpace space{std::vector<const FiniteGroup*>(n - 1, &a.coeff)};
    std::optional<ElementMap> found;
    for_each_assignment(space, bound, [&](const std::vector<Elem>& v) {
        if (found) return;
        auto theta = theta_from_slots(n, v);
        ElementMap phi = constant_map(A.order(), 0);
        for (Elem x = 0; x < A.order(); ++x) {
            Elem m = a.projection(x);
            Elem y = pre[A.plus(A.minus(sa(m)), x)];
            phi.values[x] = B.plus(B.plus(sb(m), b.inclusion(theta(m))), b.inclusion(y));
        }
        if (is_brace_homomorphism(phi, A, B)) found = phi;
    });
    return found;
}

}  // namespace sbrace
