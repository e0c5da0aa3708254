#pragma once

#include <optional>
#include <vector>

#include "sbrace/brace.hpp"
#include "sbrace/rota_baxter.hpp"

namespace sbrace {

// Square of a brace on H x H, pair (h,g) encoded as h*n + g:
//   (h1,g1).(h2,g2) = (h1 . lambda_g1(h2), g1 o g2)
//   (h1,g1)o(h2,g2) = (h1 o h2, h1 o g2 o h1^dagger o g1)
SkewBrace square_brace(const SkewBrace& b);
// The same brace obtained as brace_from_rb(rb_on_semidirect(rrb_from_brace(b))).
SkewBrace square_via_rb(const SkewBrace& b);
// R~(h,g) = (1, g^dagger o h) on the additive group of the square.
RBOperator square_operator(const SkewBrace& b);

// lambda_h lambda_g = lambda_{lambda_h(g)} lambda_h for all g, h.
Verdict double_precondition(const SkewBrace& b);
// (h,g).(h',g') = (h.h', g.g'), (h,g)o(h',g') = (h o h', g o lambda_h(g')).
SkewBrace double_brace(const SkewBrace& b);

struct SquareVsDouble {
    bool tables_equal = false;
    std::optional<bool> isomorphic;  // empty when the search was skipped
    std::vector<bool> inner_lambda;  // per h in B: lambda_h is inner on (B, .)
};

constexpr int kSquareIsoBound = 64;
SquareVsDouble square_vs_double(const SkewBrace& b, int iso_bound = kSquareIsoBound);

// f~(h,g) = (f(h), f(g)).
ElementMap square_hom(const ElementMap& f, const SkewBrace& src, const SkewBrace& dst);

struct LambdaPair {
    Elem by_conjugation;  // R~(x) . y . R~(x)^-1
    Elem intrinsic;       // lambda_x(y) of the square brace
};
LambdaPair lambda_square(const SkewBrace& b, Elem x, Elem y);
// All pairs, row-major over the square.
std::vector<LambdaPair> lambda_square_table(const SkewBrace& b);

bool is_inner_automorphism(const FiniteGroup& g, const ElementMap& f);

}  // namespace sbrace
