#include "sbrace/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "matcher.hpp"

namespace sbrace {

namespace {

std::string tuple_str(std::initializer_list<Elem> xs) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (Elem x : xs) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << ')';
    return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup() : n_(1), table_{0}, inv_{0} {}

FiniteGroup FiniteGroup::from_flat(int n, std::vector<Elem> flat) {
    if (n < 1 || flat.size() != static_cast<std::size_t>(n) * n)
        fail(ErrorCode::NotClosed, "table is not n x n");
    for (std::size_t i = 0; i < flat.size(); ++i)
        if (flat[i] < 0 || flat[i] >= n)
            fail(ErrorCode::NotClosed,
                 "product " + tuple_str({Elem(i / n), Elem(i % n)}) + " out of range");
    auto at = [&](Elem a, Elem b) { return flat[static_cast<std::size_t>(a) * n + b]; };
    for (Elem a = 0; a < n; ++a)
        if (at(0, a) != a || at(a, 0) != a)
            fail(ErrorCode::NoIdentityAtZero, "0 does not fix " + std::to_string(a));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    fail(ErrorCode::NotAssociative, "triple " + tuple_str({a, b, c}));
    FiniteGroup g;
    g.n_ = n;
    g.inv_.assign(n, -1);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b)
            if (at(a, b) == 0 && at(b, a) == 0) {
                g.inv_[a] = b;
                break;
            }
        if (g.inv_[a] < 0) fail(ErrorCode::MissingInverse, "element " + std::to_string(a));
    }
    g.table_ = std::move(flat);
    return g;
}

FiniteGroup FiniteGroup::from_table(const Table& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<Elem> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) fail(ErrorCode::NotClosed, "table is not square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_flat(n, std::move(flat));
}

FiniteGroup validate_group(const Table& rows) { return FiniteGroup::from_table(rows); }

Table FiniteGroup::rows() const {
    Table out(n_);
    for (int a = 0; a < n_; ++a) out[a].assign(table_.begin() + a * n_, table_.begin() + (a + 1) * n_);
    return out;
}

bool FiniteGroup::is_abelian() const {
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::element_order(Elem a) const {
    int k = 1;
    for (Elem x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

ElementMap identity_map(int n) {
    ElementMap f;
    f.values.resize(n);
    std::iota(f.values.begin(), f.values.end(), 0);
    return f;
}

ElementMap constant_map(int n, Elem value) { return ElementMap{std::vector<Elem>(n, value)}; }

ElementMap compose(const ElementMap& outer, const ElementMap& inner) {
    ElementMap f;
    f.values.reserve(inner.values.size());
    for (Elem x : inner.values) f.values.push_back(outer(x));
    return f;
}

bool is_bijective(const ElementMap& f, int codomain_order) {
    if (f.size() != codomain_order) return false;
    std::vector<char> hit(codomain_order, 0);
    for (Elem y : f.values) {
        if (y < 0 || y >= codomain_order || hit[y]) return false;
        hit[y] = 1;
    }
    return true;
}

ElementMap inverse_permutation(const ElementMap& f) {
    ElementMap g;
    g.values.assign(f.values.size(), 0);
    for (std::size_t i = 0; i < f.values.size(); ++i) g.values[f.values[i]] = static_cast<Elem>(i);
    return g;
}

Verdict is_homomorphism(const ElementMap& f, const FiniteGroup& src, const FiniteGroup& dst) {
    if (f.size() != src.order()) return Verdict::no("map size differs from source order");
    for (Elem y : f.values)
        if (y < 0 || y >= dst.order()) return Verdict::no("value out of range");
    for (Elem a = 0; a < src.order(); ++a)
        for (Elem b = 0; b < src.order(); ++b)
            if (f(src.mul(a, b)) != dst.mul(f(a), f(b)))
                return Verdict::no("pair " + tuple_str({a, b}));
    return Verdict::ok();
}

GroupAction GroupAction::unchecked(const FiniteGroup& actor, const FiniteGroup& space,
                                   std::vector<ElementMap> images, bool contravariant) {
    GroupAction act;
    act.actor_ = actor;
    act.space_ = space;
    act.contravariant_ = contravariant;
    act.images_ = std::move(images);
    act.inverses_.reserve(act.images_.size());
    for (const auto& im : act.images_)
        act.inverses_.push_back(is_bijective(im, space.order()) ? inverse_permutation(im) : im);
    return act;
}

Verdict GroupAction::check() const {
    if (static_cast<int>(images_.size()) != actor_.order())
        return Verdict::no("expected one image per actor element");
    for (Elem g = 0; g < actor_.order(); ++g) {
        if (!is_bijective(images_[g], space_.order()) || !is_homomorphism(images_[g], space_, space_))
            return Verdict::no("image of " + std::to_string(g) + " is not an automorphism");
    }
    for (Elem g1 = 0; g1 < actor_.order(); ++g1)
        for (Elem g2 = 0; g2 < actor_.order(); ++g2) {
            const auto& lhs = images_[actor_.mul(g1, g2)];
            auto rhs = contravariant_ ? compose(images_[g2], images_[g1])
                                      : compose(images_[g1], images_[g2]);
            if (lhs != rhs) return Verdict::no("composition law fails at " + tuple_str({g1, g2}));
        }
    return Verdict::ok();
}

GroupAction GroupAction::make(const FiniteGroup& actor, const FiniteGroup& space,
                              std::vector<ElementMap> images, bool contravariant) {
    GroupAction act = unchecked(actor, space, std::move(images), contravariant);
    if (static_cast<int>(act.images_.size()) != actor.order())
        fail(ErrorCode::ActionInvalid, "expected one image per actor element");
    for (Elem g = 0; g < actor.order(); ++g)
        if (!is_bijective(act.images_[g], space.order()) ||
            !is_homomorphism(act.images_[g], space, space))
            fail(ErrorCode::ImageNotAutomorphism, "image of " + std::to_string(g));
    if (auto v = act.check(); !v) fail(ErrorCode::NotHomomorphic, v.witness);
    return act;
}

GroupAction GroupAction::trivial(const FiniteGroup& actor, const FiniteGroup& space,
                                 bool contravariant) {
    return unchecked(actor, space,
                     std::vector<ElementMap>(actor.order(), identity_map(space.order())),
                     contravariant);
}

bool GroupAction::is_trivial() const {
    const auto id = identity_map(space_.order());
    return std::all_of(images_.begin(), images_.end(), [&](const ElementMap& m) { return m == id; });
}

FiniteGroup semidirect_product(const FiniteGroup& h, const FiniteGroup& g, const GroupAction& phi) {
    if (phi.contravariant()) fail(ErrorCode::ActionInvalid, "semidirect product needs a covariant action");
    const int nh = h.order(), ng = g.order(), n = nh * ng;
    std::vector<Elem> flat(static_cast<std::size_t>(n) * n);
    for (Elem h1 = 0; h1 < nh; ++h1)
        for (Elem g1 = 0; g1 < ng; ++g1)
            for (Elem h2 = 0; h2 < nh; ++h2)
                for (Elem g2 = 0; g2 < ng; ++g2) {
                    Elem a = pair_index(h1, g1, ng), b = pair_index(h2, g2, ng);
                    flat[static_cast<std::size_t>(a) * n + b] =
                        pair_index(h.mul(h1, phi.apply(g1, h2)), g.mul(g1, g2), ng);
                }
    return FiniteGroup::from_flat(n, std::move(flat));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    return semidirect_product(a, b, GroupAction::trivial(b, a, false));
}

std::vector<ElementMap> enumerate_isomorphisms(const FiniteGroup& src, const FiniteGroup& dst, int bound) {
    if (src.order() > bound) fail(ErrorCode::OrderTooLarge, "order " + std::to_string(src.order()));
    std::vector<ElementMap> out;
    if (src.order() != dst.order()) return out;
    detail::Structure a{src.order(), {&src.flat()}, detail::group_invariants(src)};
    detail::Structure b{dst.order(), {&dst.flat()}, detail::group_invariants(dst)};
    detail::search_isomorphisms(a, b, [&](const std::vector<Elem>& f) {
        out.push_back(ElementMap{f});
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElementMap> enumerate_automorphisms(const FiniteGroup& g, int bound) {
    return enumerate_isomorphisms(g, g, bound);
}

bool contains(const Subset& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

Subset group_center(const FiniteGroup& g) {
    Subset out;
    for (Elem x = 0; x < g.order(); ++x) {
        bool central = true;
        for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
        if (central) out.push_back(x);
    }
    return out;
}

Subset generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens) {
    std::vector<char> in(g.order(), 0);
    std::vector<Elem> members{0};
    in[0] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (Elem s : gens) {
            Elem y = g.mul(members[i], s);
            if (!in[y]) {
                in[y] = 1;
                members.push_back(y);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

Subset derived_subgroup(const FiniteGroup& g) {
    std::vector<Elem> gens;
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b)
            gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return generated_subgroup(g, gens);
}

bool is_subgroup(const FiniteGroup& g, const Subset& s) {
    if (s.empty() || s.front() != 0) return false;
    for (Elem a : s)
        for (Elem b : s)
            if (!contains(s, g.mul(a, g.inv(b)))) return false;
    return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const Subset& s) {
    if (!is_subgroup(g, s)) return false;
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem a : s)
            if (!contains(s, g.conj(x, a))) return false;
    return true;
}

FiniteGroup subgroup(const FiniteGroup& g, const Subset& s) {
    std::vector<Elem> pos(g.order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<Elem>(i);
    const int n = static_cast<int>(s.size());
    std::vector<Elem> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem p = pos[g.mul(s[i], s[j])];
            if (p < 0) fail(ErrorCode::NotClosed, "subset is not a subgroup");
            flat[static_cast<std::size_t>(i) * n + j] = p;
        }
    return FiniteGroup::from_flat(n, std::move(flat));
}

FiniteGroup cyclic_group(int n) {
    std::vector<Elem> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return FiniteGroup::from_flat(n, std::move(flat));
}

FiniteGroup dihedral_group(int n) {
    // r^i s^j encoded as i + n*j.
    const int m = 2 * n;
    std::vector<Elem> flat(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
            int i = j1 ? (i1 - i2 + n) % n : (i1 + i2) % n;
            flat[static_cast<std::size_t>(a) * m + b] = i + n * ((j1 + j2) % 2);
        }
    return FiniteGroup::from_flat(m, std::move(flat));
}

FiniteGroup symmetric_group3() { return dihedral_group(3); }

FiniteGroup quaternion_group() {
    // Unit quaternions ±1, ±i, ±j, ±k; element 2*u + s where u in {1,i,j,k}, s = sign bit.
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<Elem> flat(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
            flat[a * 8 + b] = 2 * unit[ua][ub] + (sa ^ sb ^ sign[ua][ub]);
        }
    return FiniteGroup::from_flat(8, std::move(flat));
}

}  // namespace sbrace

namespace sbrace {

std::vector<NamedGroup> small_groups(int n) {
    switch (n) {
        case 1: return {{"c1", cyclic_group(1)}};
        case 2: return {{"c2", cyclic_group(2)}};
        case 3: return {{"c3", cyclic_group(3)}};
        case 4: return {{"c4", cyclic_group(4)}, {"klein", direct_product(cyclic_group(2), cyclic_group(2))}};
        case 5: return {{"c5", cyclic_group(5)}};
        case 6: return {{"c6", cyclic_group(6)}, {"s3", symmetric_group3()}};
        case 7: return {{"c7", cyclic_group(7)}};
        case 8: {
            auto c2 = cyclic_group(2);
            return {{"c8", cyclic_group(8)},
                    {"c4xc2", direct_product(cyclic_group(4), c2)},
                    {"c2xc2xc2", direct_product(direct_product(c2, c2), c2)},
                    {"d4", dihedral_group(4)},
                    {"q8", quaternion_group()}};
        }
        default: fail(ErrorCode::OrderTooLarge, "no group list for order " + std::to_string(n));
    }
}

}  // namespace sbrace

namespace sbrace {

std::vector<Subset> all_subgroups(const FiniteGroup& g) {
    std::set<Subset> seen{Subset{0}};
    std::vector<Subset> queue{Subset{0}};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Elem x = 0; x < g.order(); ++x) {
            if (contains(queue[i], x)) continue;
            auto gens = queue[i];
            gens.push_back(x);
            auto s = generated_subgroup(g, gens);
            if (seen.insert(s).second) queue.push_back(s);
        }
    }
    std::sort(queue.begin(), queue.end(), [](const Subset& a, const Subset& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return queue;
}

}  // namespace sbrace

namespace sbrace {

GroupQuotient quotient_group(const FiniteGroup& g, const Subset& normal) {
    if (!is_normal_subgroup(g, normal)) fail(ErrorCode::InvalidInput, "subset is not a normal subgroup");
    GroupQuotient q;
    q.projection.values.assign(g.order(), -1);
    for (Elem x = 0; x < g.order(); ++x) {
        if (q.projection(x) != -1) continue;
        Elem idx = static_cast<Elem>(q.representative.size());
        q.representative.push_back(x);
        for (Elem i : normal) q.projection.values[g.mul(x, i)] = idx;
    }
    const int m = static_cast<int>(q.representative.size());
    std::vector<Elem> flat(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            flat[static_cast<std::size_t>(i) * m + j] = q.projection(g.mul(q.representative[i], q.representative[j]));
    q.group = FiniteGroup::from_flat(m, std::move(flat));
    return q;
}

}  // namespace sbrace
