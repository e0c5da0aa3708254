#include "sbrace/square.hpp"

namespace sbrace {

SkewBrace square_brace(const SkewBrace& b) {
    const int n = b.order(), m = n * n;
    std::vector<Elem> add(static_cast<std::size_t>(m) * m), mul(add.size());
    for (Elem h1 = 0; h1 < n; ++h1)
        for (Elem g1 = 0; g1 < n; ++g1)
            for (Elem h2 = 0; h2 < n; ++h2)
                for (Elem g2 = 0; g2 < n; ++g2) {
                    std::size_t at = static_cast<std::size_t>(pair_index(h1, g1, n)) * m + pair_index(h2, g2, n);
                    add[at] = pair_index(b.plus(h1, b.lambda(g1, h2)), b.circ(g1, g2), n);
                    Elem second = b.circ(b.circ(b.circ(h1, g2), b.dagger(h1)), g1);
                    mul[at] = pair_index(b.circ(h1, h2), second, n);
                }
    return SkewBrace::make(FiniteGroup::from_flat(m, std::move(add)), FiniteGroup::from_flat(m, std::move(mul)));
}

RBOperator square_operator(const SkewBrace& b) { return rb_on_semidirect(rrb_from_brace(b)); }

SkewBrace square_via_rb(const SkewBrace& b) { return brace_from_rb(square_operator(b)); }

Verdict double_precondition(const SkewBrace& b) {
    const int n = b.order();
    for (Elem h = 0; h < n; ++h)
        for (Elem g = 0; g < n; ++g) {
            Elem lg = b.lambda(h, g);
            for (Elem x = 0; x < n; ++x)
                if (b.lambda(h, b.lambda(g, x)) != b.lambda(lg, b.lambda(h, x)))
                    return Verdict::no("h=" + std::to_string(h) + " g=" + std::to_string(g));
        }
    return Verdict::ok();
}

SkewBrace double_brace(const SkewBrace& b) {
    if (auto v = double_precondition(b); !v) fail(ErrorCode::PreconditionFails, v.witness);
    const int n = b.order(), m = n * n;
    std::vector<Elem> add(static_cast<std::size_t>(m) * m), mul(add.size());
    for (Elem h1 = 0; h1 < n; ++h1)
        for (Elem g1 = 0; g1 < n; ++g1)
            for (Elem h2 = 0; h2 < n; ++h2)
                for (Elem g2 = 0; g2 < n; ++g2) {
                    std::size_t at = static_cast<std::size_t>(pair_index(h1, g1, n)) * m + pair_index(h2, g2, n);
                    add[at] = pair_index(b.plus(h1, h2), b.plus(g1, g2), n);
                    mul[at] = pair_index(b.circ(h1, h2), b.circ(g1, b.lambda(h1, g2)), n);
                }
    return SkewBrace::make(FiniteGroup::from_flat(m, std::move(add)), FiniteGroup::from_flat(m, std::move(mul)));
}

bool is_inner_automorphism(const FiniteGroup& g, const ElementMap& f) {
    for (Elem c = 0; c < g.order(); ++c) {
        bool same = true;
        for (Elem x = 0; x < g.order() && same; ++x) same = g.conj(c, x) == f(x);
        if (same) return true;
    }
    return false;
}

SquareVsDouble square_vs_double(const SkewBrace& b, int iso_bound) {
    SkewBrace sq = square_brace(b);
    SkewBrace db = double_brace(b);
    SquareVsDouble r;
    r.tables_equal = sq == db;
    if (sq.order() <= iso_bound) r.isomorphic = first_brace_isomorphism(sq, db, iso_bound).has_value();
    for (Elem h = 0; h < b.order(); ++h) r.inner_lambda.push_back(is_inner_automorphism(b.add(), b.lambda_map(h)));
    return r;
}

ElementMap square_hom(const ElementMap& f, const SkewBrace& src, const SkewBrace& dst) {
    if (auto v = is_brace_homomorphism(f, src, dst); !v) fail(ErrorCode::NotBraceHom, v.witness);
    const int n = src.order(), k = dst.order();
    ElementMap out;
    out.values.resize(static_cast<std::size_t>(n) * n);
    for (Elem h = 0; h < n; ++h)
        for (Elem g = 0; g < n; ++g) out.values[pair_index(h, g, n)] = pair_index(f(h), f(g), k);
    return out;
}

LambdaPair lambda_square(const SkewBrace& b, Elem x, Elem y) {
    SkewBrace sq = square_brace(b);
    RBOperator r = square_operator(b);
    const FiniteGroup& g = sq.add();
    return {g.conj(r(x), y), sq.lambda(x, y)};
}

std::vector<LambdaPair> lambda_square_table(const SkewBrace& b) {
    SkewBrace sq = square_brace(b);
    RBOperator r = square_operator(b);
    const int m = sq.order();
    std::vector<LambdaPair> out;
    out.reserve(static_cast<std::size_t>(m) * m);
    for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y) out.push_back({sq.add().conj(r(x), y), sq.lambda(x, y)});
    return out;
}

}  // namespace sbrace
