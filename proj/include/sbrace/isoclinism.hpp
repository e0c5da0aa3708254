#pragma once

#include <optional>
#include <string>

#include "sbrace/brace.hpp"

namespace sbrace {

// ker(lambda) n Z(H, .) n Fix(lambda).
Subset annihilator(const SkewBrace& b);
// Generated in (H, .) by additive commutators and lambda_a(b) - b.
Subset brace_commutator(const SkewBrace& b);
Subset lambda_fixed_points(const SkewBrace& b);

// theta(a,b) = a + b - a - b, theta*(a,b) = lambda_a(b) - b.
Elem theta(const SkewBrace& b, Elem x, Elem y);
Elem theta_star(const SkewBrace& b, Elem x, Elem y);

// The quotient by the annihilator and the commutator sub-brace.
struct IsoclinismData {
    Quotient quotient;
    Subset commutator;
    SkewBrace commutator_brace;  // renumbered by position in `commutator`
};
IsoclinismData isoclinism_data(const SkewBrace& b);

// xi1 on quotient indices, xi2 on positions in the sorted commutators.
struct IsoclinismWitness {
    ElementMap xi1;
    ElementMap xi2;
};

Verdict check_isoclinism(const SkewBrace& a, const SkewBrace& b, const IsoclinismWitness& w);
// xi1 runs over quotient isomorphisms in lexicographic order; xi2 is forced by
// theta on generators. Throws SearchTooLarge for quotients past the bound.
std::optional<IsoclinismWitness> find_isoclinism(const SkewBrace& a, const SkewBrace& b,
                                                 int bound = kAutomorphismBound);

// Ann(square) = Ann x Ann. Throws OrderTooLarge for n > kSquareHypothesisBound and
// InternalDefect if Ann x Ann is not contained in Ann(square).
constexpr int kSquareHypothesisBound = 16;
bool square_annihilator_hypothesis(const SkewBrace& b);

// Lifted witness (xi1 x xi1, xi2 x xi2) on the squares. Throws HypothesisFails
// naming the side, LiftFails if the lift is not an isoclinism.
IsoclinismWitness square_isoclinism(const SkewBrace& a, const SkewBrace& b, const IsoclinismWitness& w);

// Structural facts about the square, each checked exhaustively.
struct SquareFacts {
    Verdict ann_product_inside;      // Ann x Ann <= Ann(square)
    Verdict ann_product_ideal;       // Ann x Ann is an ideal of the square
    Verdict ann_inside_fix_center;   // Ann(square) <= Fix(lambda) x Z(H, o)
    Verdict center_inside_fix_center;  // Z(square, .) <= Fix(lambda) x Z(H, o)
    Verdict derived_is_product;      // (square, .)' = H' x (H, o)'
    Verdict quotient_is_square;      // square / (Ann x Ann) = square of H / Ann via (a,b) -> (a,b)
    Verdict theta_well_defined;      // theta, theta* constant on annihilator cosets
};
SquareFacts square_facts(const SkewBrace& b);

}  // namespace sbrace
