#pragma once

#include <vector>

#include "sbrace/brace.hpp"

namespace sbrace {

// Set-theoretic solution r(x,y) = (left(x,y), right(x,y)) on {0..n-1}.
struct YBESolution {
    int n = 0;
    std::vector<Elem> left;   // flat n*n
    std::vector<Elem> right;  // flat n*n

    Elem l(Elem x, Elem y) const { return left[static_cast<std::size_t>(x) * n + y]; }
    Elem r(Elem x, Elem y) const { return right[static_cast<std::size_t>(x) * n + y]; }
};

// r(x,y) = (lambda_x(y), lambda_x(y)^dagger o x o y), verified before return.
YBESolution gv_solution(const SkewBrace& b);
// r12 r23 r12 = r23 r12 r23 on all triples.
Verdict check_braid(const YBESolution& s);
// Bijective, and both families of sections are bijections.
Verdict check_nondegenerate(const YBESolution& s);

constexpr int kSquareSolutionBound = 144;
// gv_solution of the square; OrderTooLarge past kSquareSolutionBound points.
YBESolution new_solution_from_square(const SkewBrace& b);

}  // namespace sbrace
