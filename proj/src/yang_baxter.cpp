#include "sbrace/yang_baxter.hpp"

#include <string>

#include "sbrace/square.hpp"

namespace sbrace {

YBESolution gv_solution(const SkewBrace& b) {
    const int n = b.order();
    YBESolution s{n, std::vector<Elem>(static_cast<std::size_t>(n) * n), std::vector<Elem>(static_cast<std::size_t>(n) * n)};
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            Elem u = b.lambda(x, y);
            s.left[static_cast<std::size_t>(x) * n + y] = u;
            s.right[static_cast<std::size_t>(x) * n + y] = b.circ(b.circ(b.dagger(u), x), y);
        }
    if (auto v = check_nondegenerate(s); !v) fail(ErrorCode::InternalDefect, "solution is degenerate: " + v.witness);
    if (auto v = check_braid(s); !v) fail(ErrorCode::InternalDefect, "braid relation fails at " + v.witness);
    return s;
}

YBESolution new_solution_from_square(const SkewBrace& b) {
    const int n = b.order();
    if (n * n > kSquareSolutionBound) fail(ErrorCode::OrderTooLarge, "square of order " + std::to_string(n * n));
    return gv_solution(square_brace(b));
}

Verdict check_braid(const YBESolution& s) {
    const int n = s.n;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z) {
                // r12 r23 r12
                Elem a1 = s.l(x, y), b1 = s.r(x, y), c1 = z;
                Elem b2 = s.l(b1, c1), c2 = s.r(b1, c1);
                Elem a3 = s.l(a1, b2), b3 = s.r(a1, b2), c3 = c2;
                // r23 r12 r23
                Elem q1 = x, q2 = s.l(y, z), q3 = s.r(y, z);
                Elem p1 = s.l(q1, q2), p2 = s.r(q1, q2);
                Elem t2 = s.l(p2, q3), t3 = s.r(p2, q3);
                if (a3 != p1 || b3 != t2 || c3 != t3)
                    return Verdict::no("triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                       std::to_string(z) + ")");
            }
    return Verdict::ok();
}

Verdict check_nondegenerate(const YBESolution& s) {
    const int n = s.n;
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            auto& hit = seen[static_cast<std::size_t>(s.l(x, y)) * n + s.r(x, y)];
            if (hit) return Verdict::no("r is not injective");
            hit = 1;
        }
    for (Elem x = 0; x < n; ++x) {
        std::vector<char> l(n, 0), r(n, 0);
        for (Elem y = 0; y < n; ++y) {
            if (l[s.l(x, y)]++) return Verdict::no("left section at " + std::to_string(x) + " not bijective");
            if (r[s.r(y, x)]++) return Verdict::no("right section at " + std::to_string(x) + " not bijective");
        }
    }
    return Verdict::ok();
}

}  // namespace sbrace
