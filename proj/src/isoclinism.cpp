#include "sbrace/isoclinism.hpp"

#include <algorithm>

#include "sbrace/square.hpp"

namespace sbrace {

namespace {

Elem position(const Subset& s, Elem x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x) return -1;
    return static_cast<Elem>(it - s.begin());
}

Subset product_set(const Subset& a, const Subset& b, int n) {
    Subset out;
    for (Elem x : a)
        for (Elem y : b) out.push_back(pair_index(x, y, n));
    std::sort(out.begin(), out.end());
    return out;
}

bool subset_of(const Subset& a, const Subset& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// Maps a pair of coset indices of H / Ann to the coset of the square modulo Ann x Ann.
Elem lift_pair(const Quotient& q, const Quotient& sq, int n, Elem x, Elem y) {
    return sq.projection(pair_index(q.representative[x], q.representative[y], n));
}

}  // namespace

Subset lambda_fixed_points(const SkewBrace& b) {
    Subset out;
    for (Elem a = 0; a < b.order(); ++a) {
        bool fixed = true;
        for (Elem x = 0; x < b.order() && fixed; ++x) fixed = b.lambda(x, a) == a;
        if (fixed) out.push_back(a);
    }
    return out;
}

Subset annihilator(const SkewBrace& b) {
    const auto center = group_center(b.add());
    const auto fixed = lambda_fixed_points(b);
    Subset out;
    for (Elem a : center) {
        if (!contains(fixed, a)) continue;
        bool kernel = true;
        for (Elem x = 0; x < b.order() && kernel; ++x) kernel = b.lambda(a, x) == x;
        if (kernel) out.push_back(a);
    }
    return out;
}

Elem theta(const SkewBrace& b, Elem x, Elem y) {
    return b.plus(b.plus(x, y), b.plus(b.minus(x), b.minus(y)));
}

Elem theta_star(const SkewBrace& b, Elem x, Elem y) { return b.plus(b.lambda(x, y), b.minus(y)); }

Subset brace_commutator(const SkewBrace& b) {
    std::vector<Elem> gens;
    for (Elem x = 0; x < b.order(); ++x)
        for (Elem y = 0; y < b.order(); ++y) {
            gens.push_back(theta(b, x, y));
            gens.push_back(theta_star(b, x, y));
        }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return generated_subgroup(b.add(), gens);
}

IsoclinismData isoclinism_data(const SkewBrace& b) {
    auto comm = brace_commutator(b);
    if (!is_ideal(b, comm)) fail(ErrorCode::InternalDefect, "commutator is not an ideal");
    auto sub = subbrace(b, comm);
    return IsoclinismData{quotient_brace(b, annihilator(b)), std::move(comm), std::move(sub)};
}

Verdict check_isoclinism(const SkewBrace& a, const SkewBrace& b, const IsoclinismWitness& w) {
    const auto da = isoclinism_data(a);
    const auto db = isoclinism_data(b);
    const int qa = da.quotient.brace.order(), qb = db.quotient.brace.order();
    if (w.xi1.size() != qa || qa != qb) return Verdict::no("xi1 has the wrong shape");
    if (w.xi2.size() != static_cast<int>(da.commutator.size()) || da.commutator.size() != db.commutator.size())
        return Verdict::no("xi2 has the wrong shape");
    if (!is_bijective(w.xi1, qb)) return Verdict::no("xi1 is not bijective");
    if (!is_bijective(w.xi2, static_cast<int>(db.commutator.size()))) return Verdict::no("xi2 is not bijective");
    if (auto v = is_brace_homomorphism(w.xi1, da.quotient.brace, db.quotient.brace); !v)
        return Verdict::no("xi1: " + v.witness);
    if (auto v = is_brace_homomorphism(w.xi2, da.commutator_brace, db.commutator_brace); !v)
        return Verdict::no("xi2: " + v.witness);
    for (Elem x = 0; x < qa; ++x)
        for (Elem y = 0; y < qa; ++y) {
            const Elem ra = da.quotient.representative[x], sa = da.quotient.representative[y];
            const Elem rb = db.quotient.representative[w.xi1(x)], sb = db.quotient.representative[w.xi1(y)];
            const std::string at = " square fails at (" + std::to_string(x) + "," + std::to_string(y) + ")";
            if (db.commutator[w.xi2(position(da.commutator, theta(a, ra, sa)))] != theta(b, rb, sb))
                return Verdict::no("theta" + at);
            if (db.commutator[w.xi2(position(da.commutator, theta_star(a, ra, sa)))] != theta_star(b, rb, sb))
                return Verdict::no("theta*" + at);
        }
    return Verdict::ok();
}

std::optional<IsoclinismWitness> find_isoclinism(const SkewBrace& a, const SkewBrace& b, int bound) {
    const auto da = isoclinism_data(a);
    const auto db = isoclinism_data(b);
    const int qa = da.quotient.brace.order();
    if (qa != db.quotient.brace.order() || da.commutator.size() != db.commutator.size()) return std::nullopt;
    if (qa > bound) fail(ErrorCode::SearchTooLarge, "quotient order " + std::to_string(qa) + " exceeds the bound");
    const int nc = static_cast<int>(da.commutator.size());
    const auto& ca = da.commutator_brace.add();
    const auto& cb = db.commutator_brace.add();
    for (const auto& xi1 : find_brace_isomorphisms(da.quotient.brace, db.quotient.brace, bound)) {
        // Forced values of xi2 on theta and theta* images, as commutator positions.
        ElementMap xi2 = constant_map(nc, -1);
        xi2.values[0] = 0;
        std::vector<std::pair<Elem, Elem>> gens;
        bool ok = true;
        auto force = [&](Elem src, Elem dst) {
            Elem p = position(da.commutator, src), q = position(db.commutator, dst);
            if (q < 0) return false;
            if (xi2(p) == -1) {
                xi2.values[p] = q;
                gens.emplace_back(p, q);
            }
            return xi2(p) == q;
        };
        for (Elem x = 0; x < qa && ok; ++x)
            for (Elem y = 0; y < qa && ok; ++y) {
                const Elem ra = da.quotient.representative[x], sa = da.quotient.representative[y];
                const Elem rb = db.quotient.representative[xi1(x)], sb = db.quotient.representative[xi1(y)];
                ok = force(theta(a, ra, sa), theta(b, rb, sb)) && force(theta_star(a, ra, sa), theta_star(b, rb, sb));
            }
        if (!ok) continue;
        // Extend additively from the generators.
        std::vector<Elem> frontier;
        for (Elem p = 0; p < nc; ++p)
            if (xi2(p) >= 0) frontier.push_back(p);
        while (!frontier.empty() && ok) {
            std::vector<Elem> next;
            for (Elem p : frontier)
                for (auto [g, h] : gens) {
                    Elem s = ca.mul(p, g), t = cb.mul(xi2(p), h);
                    if (xi2(s) == -1) {
                        xi2.values[s] = t;
                        next.push_back(s);
                    } else if (xi2(s) != t) {
                        ok = false;
                        break;
                    }
                }
            frontier = std::move(next);
        }
        if (!ok || std::count(xi2.values.begin(), xi2.values.end(), -1) > 0) continue;
        IsoclinismWitness w{xi1, xi2};
        if (check_isoclinism(a, b, w)) return w;
    }
    return std::nullopt;
}

bool square_annihilator_hypothesis(const SkewBrace& b) {
    const int n = b.order();
    if (n > kSquareHypothesisBound) fail(ErrorCode::OrderTooLarge, "square of order " + std::to_string(n * n));
    const auto ann = annihilator(b);
    const auto prod = product_set(ann, ann, n);
    const auto ann_sq = annihilator(square_brace(b));
    if (!subset_of(prod, ann_sq)) fail(ErrorCode::InternalDefect, "Ann x Ann is not inside Ann of the square");
    return prod == ann_sq;
}

IsoclinismWitness square_isoclinism(const SkewBrace& a, const SkewBrace& b, const IsoclinismWitness& w) {
    if (auto v = check_isoclinism(a, b, w); !v) fail(ErrorCode::PreconditionFails, "not an isoclinism: " + v.witness);
    if (!square_annihilator_hypothesis(a)) fail(ErrorCode::HypothesisFails, "first brace: Ann(square) != Ann x Ann");
    if (!square_annihilator_hypothesis(b)) fail(ErrorCode::HypothesisFails, "second brace: Ann(square) != Ann x Ann");
    const int na = a.order(), nb = b.order();
    const auto sa = square_brace(a);
    const auto sb = square_brace(b);
    const auto da = isoclinism_data(a);
    const auto db = isoclinism_data(b);
    const auto dsa = isoclinism_data(sa);
    const auto dsb = isoclinism_data(sb);
    const int qa = da.quotient.brace.order();

    IsoclinismWitness lifted{constant_map(dsa.quotient.brace.order(), -1),
                             constant_map(static_cast<int>(dsa.commutator.size()), -1)};
    for (Elem x = 0; x < qa; ++x)
        for (Elem y = 0; y < qa; ++y) {
            Elem src = lift_pair(da.quotient, dsa.quotient, na, x, y);
            lifted.xi1.values[src] = lift_pair(db.quotient, dsb.quotient, nb, w.xi1(x), w.xi1(y));
        }
    for (std::size_t i = 0; i < dsa.commutator.size(); ++i) {
        const Elem e = dsa.commutator[i];
        const Elem p1 = position(da.commutator, e / na), p2 = position(da.commutator, e % na);
        if (p1 < 0 || p2 < 0) fail(ErrorCode::LiftFails, "square commutator element outside H' x H'");
        const Elem img = pair_index(db.commutator[w.xi2(p1)], db.commutator[w.xi2(p2)], nb);
        const Elem q = position(dsb.commutator, img);
        if (q < 0) fail(ErrorCode::LiftFails, "lifted xi2 leaves the square commutator");
        lifted.xi2.values[i] = q;
    }
    if (auto v = check_isoclinism(sa, sb, lifted); !v) fail(ErrorCode::LiftFails, v.witness);
    return lifted;
}

SquareFacts square_facts(const SkewBrace& b) {
    const int n = b.order();
    if (n > kSquareHypothesisBound) fail(ErrorCode::OrderTooLarge, "square of order " + std::to_string(n * n));
    const auto sq = square_brace(b);
    const auto ann = annihilator(b);
    const auto prod = product_set(ann, ann, n);
    const auto ann_sq = annihilator(sq);
    const auto fix_center = product_set(lambda_fixed_points(b), group_center(b.mul()), n);
    auto verdict = [](bool ok, const char* what) { return ok ? Verdict::ok() : Verdict::no(what); };

    SquareFacts f;
    f.ann_product_inside = verdict(subset_of(prod, ann_sq), "Ann x Ann is not inside Ann of the square");
    f.ann_product_ideal = verdict(is_ideal(sq, prod), "Ann x Ann is not an ideal of the square");
    f.ann_inside_fix_center = verdict(subset_of(ann_sq, fix_center), "Ann of the square leaves Fix x Z");
    f.center_inside_fix_center =
        verdict(subset_of(group_center(sq.add()), fix_center), "center of the square leaves Fix x Z");
    f.derived_is_product = verdict(derived_subgroup(sq.add()) ==
                                       product_set(brace_commutator(b), derived_subgroup(b.mul()), n),
                                   "derived subgroup of the square differs from H' x (H, o)'");

    const auto q = quotient_brace(b, ann);
    const auto qs = quotient_brace(sq, prod);
    const auto sq_q = square_brace(q.brace);
    const int nq = q.brace.order();
    ElementMap phi = constant_map(qs.brace.order(), 0);
    for (Elem c = 0; c < qs.brace.order(); ++c) {
        const Elem rep = qs.representative[c];
        phi.values[c] = pair_index(q.projection(rep / n), q.projection(rep % n), nq);
    }
    bool iso = is_bijective(phi, sq_q.order()) && bool(is_brace_homomorphism(phi, qs.brace, sq_q));
    f.quotient_is_square = verdict(iso, "square / (Ann x Ann) is not the square of the quotient via (a,b) -> (a,b)");

    bool well_defined = true;
    for (Elem x = 0; x < n && well_defined; ++x)
        for (Elem y = 0; y < n && well_defined; ++y)
            for (Elem u : ann)
                for (Elem v : ann) {
                    const Elem x2 = b.plus(x, u), y2 = b.plus(y, v);
                    if (theta(b, x, y) != theta(b, x2, y2) || theta_star(b, x, y) != theta_star(b, x2, y2)) {
                        well_defined = false;
                        break;
                    }
                }
    f.theta_well_defined = verdict(well_defined, "theta or theta* depends on the coset representative");
    return f;
}

}  // namespace sbrace
