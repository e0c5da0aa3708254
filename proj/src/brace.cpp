#include "sbrace/brace.hpp"

#include <algorithm>
#include <set>

#include "matcher.hpp"

namespace sbrace {

namespace {

std::vector<std::uint64_t> brace_invariants(const SkewBrace& b) {
    const int n = b.order();
    auto add_inv = detail::group_invariants(b.add());
    auto mul_inv = detail::group_invariants(b.mul());
    std::set<std::vector<Elem>> inner;
    for (Elem g = 0; g < n; ++g) {
        std::vector<Elem> c(n);
        for (Elem x = 0; x < n; ++x) c[x] = b.add().conj(g, x);
        inner.insert(std::move(c));
    }
    std::vector<std::uint64_t> out(n);
    for (Elem x = 0; x < n; ++x) {
        auto lam = b.lambda_map(x);
        int fixed = 0, stabilizers = 0;
        for (Elem y = 0; y < n; ++y) {
            if (lam(y) == y) ++fixed;
            if (b.lambda(y, x) == x) ++stabilizers;
        }
        int perm_order = 1;
        for (auto p = lam; p != identity_map(n); p = compose(lam, p)) ++perm_order;
        std::uint64_t h = detail::mix(add_inv[x], mul_inv[x]);
        h = detail::mix(h, fixed);
        h = detail::mix(h, stabilizers);
        h = detail::mix(h, perm_order);
        h = detail::mix(h, inner.count(lam.values));
        out[x] = h;
    }
    return out;
}

}  // namespace

SkewBrace::SkewBrace() : lambda_{0}, lambda_inv_{0} {}

Verdict check_brace_axiom(const FiniteGroup& add, const FiniteGroup& mul) {
    const int n = add.order();
    if (mul.order() != n) return Verdict::no("orders differ");
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                Elem lhs = mul.mul(a, add.mul(b, c));
                Elem rhs = add.mul(add.mul(mul.mul(a, b), add.inv(a)), mul.mul(a, c));
                if (lhs != rhs)
                    return Verdict::no("triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                       std::to_string(c) + ")");
            }
    return Verdict::ok();
}

SkewBrace SkewBrace::make(const FiniteGroup& add, const FiniteGroup& mul) {
    if (add.order() != mul.order()) fail(ErrorCode::MulNotGroup, "orders differ");
    if (auto v = check_brace_axiom(add, mul); !v) fail(ErrorCode::BraceAxiomFails, v.witness);
    SkewBrace b;
    b.add_ = add;
    b.mul_ = mul;
    const int n = add.order();
    b.lambda_.resize(static_cast<std::size_t>(n) * n);
    b.lambda_inv_.resize(b.lambda_.size());
    for (Elem a = 0; a < n; ++a)
        for (Elem x = 0; x < n; ++x) {
            Elem y = add.mul(add.inv(a), mul.mul(a, x));
            b.lambda_[static_cast<std::size_t>(a) * n + x] = y;
            b.lambda_inv_[static_cast<std::size_t>(a) * n + y] = x;
        }
    return b;
}

SkewBrace SkewBrace::from_tables(const Table& add, const Table& mul) {
    FiniteGroup a, m;
    try {
        a = FiniteGroup::from_table(add);
    } catch (const AlgebraError& e) {
        fail(ErrorCode::AddNotGroup, e.what());
    }
    try {
        m = FiniteGroup::from_table(mul);
    } catch (const AlgebraError& e) {
        fail(ErrorCode::MulNotGroup, e.what());
    }
    return make(a, m);
}

SkewBrace validate_brace(const Table& add, const Table& mul) { return SkewBrace::from_tables(add, mul); }

ElementMap SkewBrace::lambda_map(Elem a) const {
    const int n = order();
    return ElementMap{std::vector<Elem>(lambda_.begin() + static_cast<std::ptrdiff_t>(a) * n,
                                        lambda_.begin() + static_cast<std::ptrdiff_t>(a + 1) * n)};
}

GroupAction SkewBrace::lambda_action() const {
    std::vector<ElementMap> images;
    for (Elem a = 0; a < order(); ++a) images.push_back(lambda_map(a));
    return GroupAction::unchecked(mul_, add_, std::move(images), false);
}

Elem circle_inverse(const SkewBrace& b, Elem a) { return b.dagger(a); }

SkewBrace trivial_brace(const FiniteGroup& g) { return SkewBrace::make(g, g); }

Verdict is_brace_homomorphism(const ElementMap& f, const SkewBrace& src, const SkewBrace& dst) {
    if (auto v = is_homomorphism(f, src.add(), dst.add()); !v) return Verdict::no("additive " + v.witness);
    if (auto v = is_homomorphism(f, src.mul(), dst.mul()); !v)
        return Verdict::no("multiplicative " + v.witness);
    return Verdict::ok();
}

std::vector<ElementMap> find_brace_isomorphisms(const SkewBrace& src, const SkewBrace& dst, int bound) {
    if (src.order() > bound) fail(ErrorCode::OrderTooLarge, "order " + std::to_string(src.order()));
    std::vector<ElementMap> out;
    if (src.order() != dst.order()) return out;
    detail::Structure a{src.order(), {&src.add().flat(), &src.mul().flat()}, brace_invariants(src)};
    detail::Structure b{dst.order(), {&dst.add().flat(), &dst.mul().flat()}, brace_invariants(dst)};
    detail::search_isomorphisms(a, b, [&](const std::vector<Elem>& f) {
        out.push_back(ElementMap{f});
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<ElementMap> first_brace_isomorphism(const SkewBrace& src, const SkewBrace& dst, int bound) {
    if (src.order() > bound) fail(ErrorCode::OrderTooLarge, "order " + std::to_string(src.order()));
    std::optional<ElementMap> out;
    if (src.order() != dst.order()) return out;
    detail::Structure a{src.order(), {&src.add().flat(), &src.mul().flat()}, brace_invariants(src)};
    detail::Structure b{dst.order(), {&dst.add().flat(), &dst.mul().flat()}, brace_invariants(dst)};
    detail::search_isomorphisms(a, b, [&](const std::vector<Elem>& f) {
        out = ElementMap{f};
        return false;
    });
    return out;
}

bool is_left_ideal(const SkewBrace& b, const Subset& s) {
    if (!is_subgroup(b.add(), s)) return false;
    for (Elem a = 0; a < b.order(); ++a)
        for (Elem x : s)
            if (!contains(s, b.lambda(a, x))) return false;
    return true;
}

bool is_ideal(const SkewBrace& b, const Subset& s) {
    return is_left_ideal(b, s) && is_normal_subgroup(b.add(), s) && is_normal_subgroup(b.mul(), s);
}

SkewBrace subbrace(const SkewBrace& b, const Subset& s) {
    return SkewBrace::make(subgroup(b.add(), s), subgroup(b.mul(), s));
}

Quotient quotient_brace(const SkewBrace& b, const Subset& ideal) {
    if (!is_ideal(b, ideal)) fail(ErrorCode::NotAnIdeal, "subset is not an ideal");
    const int n = b.order();
    Quotient q;
    q.projection.values.assign(n, -1);
    for (Elem x = 0; x < n; ++x) {
        if (q.projection(x) != -1) continue;
        Elem idx = static_cast<Elem>(q.representative.size());
        q.representative.push_back(x);
        for (Elem i : ideal) q.projection.values[b.plus(x, i)] = idx;
    }
    const int m = static_cast<int>(q.representative.size());
    std::vector<Elem> add(static_cast<std::size_t>(m) * m), mul(add.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Elem x = q.representative[i], y = q.representative[j];
            add[static_cast<std::size_t>(i) * m + j] = q.projection(b.plus(x, y));
            mul[static_cast<std::size_t>(i) * m + j] = q.projection(b.circ(x, y));
        }
    q.brace = SkewBrace::make(FiniteGroup::from_flat(m, std::move(add)), FiniteGroup::from_flat(m, std::move(mul)));
    return q;
}

SkewBrace zbrace(int two_k) {
    if (two_k < 2 || two_k % 2) fail(ErrorCode::InvalidInput, "zbrace needs an even order");
    const int n = two_k;
    std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = ((a % 2 ? a - b : a + b) % n + n) % n;
    return SkewBrace::make(cyclic_group(n), FiniteGroup::from_flat(n, std::move(mul)));
}

}  // namespace sbrace
