#include <gtest/gtest.h>

#include <array>
#include <functional>

#include "sbrace/square.hpp"
#include "sbrace/yang_baxter.hpp"

using namespace sbrace;

namespace {

YBESolution from_pairs(int n, const std::function<std::pair<Elem, Elem>(Elem, Elem)>& f) {
    YBESolution s;
    s.n = n;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            auto [l, r] = f(x, y);
            s.left.push_back(l);
            s.right.push_back(r);
        }
    return s;
}

}  // namespace

TEST(YangBaxter, FlipOnTrivialAbelianBrace) {
    YBESolution s = gv_solution(trivial_brace(cyclic_group(2)));
    for (Elem x = 0; x < 2; ++x)
        for (Elem y = 0; y < 2; ++y) {
            EXPECT_EQ(s.l(x, y), y);
            EXPECT_EQ(s.r(x, y), x);
        }
}

TEST(YangBaxter, TrivialNonabelianBrace) {
    FiniteGroup s3 = symmetric_group3();
    YBESolution s = gv_solution(trivial_brace(s3));
    for (Elem x = 0; x < 6; ++x)
        for (Elem y = 0; y < 6; ++y) {
            EXPECT_EQ(s.l(x, y), y);
            EXPECT_EQ(s.r(x, y), s3.mul(s3.mul(s3.inv(y), x), y));
        }
    EXPECT_TRUE(check_braid(s));
}

TEST(YangBaxter, WorkedExample) {
    SkewBrace b = zbrace(4);
    YBESolution s = gv_solution(b);
    EXPECT_EQ(s.l(1, 1), 3);
    EXPECT_EQ(s.r(1, 1), b.circ(b.dagger(3), 0));
    EXPECT_TRUE(check_nondegenerate(s));
}

TEST(YangBaxter, CheckersRejectNonSolutions) {
    YBESolution flip = from_pairs(3, [](Elem x, Elem y) { return std::pair{y, x}; });
    YBESolution id = from_pairs(3, [](Elem x, Elem y) { return std::pair{x, y}; });
    EXPECT_TRUE(check_braid(flip));
    EXPECT_TRUE(check_braid(id));
    EXPECT_TRUE(check_nondegenerate(flip));
    YBESolution collapse = from_pairs(3, [](Elem, Elem) { return std::pair{Elem(0), Elem(0)}; });
    EXPECT_FALSE(check_nondegenerate(collapse));
    // Every map on two points, against a direct evaluation of both sides.
    int braided = 0;
    for (int code = 0; code < 256; ++code) {
        YBESolution s = from_pairs(2, [code](Elem x, Elem y) {
            int v = (code >> (2 * (2 * x + y))) & 3;
            return std::pair{Elem(v >> 1), Elem(v & 1)};
        });
        bool holds = true;
        for (Elem x = 0; x < 2; ++x)
            for (Elem y = 0; y < 2; ++y)
                for (Elem z = 0; z < 2; ++z) {
                    std::array<Elem, 3> a{x, y, z}, b{x, y, z};
                    auto r12 = [&](std::array<Elem, 3>& t) { t = {s.l(t[0], t[1]), s.r(t[0], t[1]), t[2]}; };
                    auto r23 = [&](std::array<Elem, 3>& t) { t = {t[0], s.l(t[1], t[2]), s.r(t[1], t[2])}; };
                    r12(a), r23(a), r12(a);
                    r23(b), r12(b), r23(b);
                    holds = holds && a == b;
                }
        Verdict v = check_braid(s);
        EXPECT_EQ(v.holds, holds) << code;
        if (!holds) {
            EXPECT_FALSE(v.witness.empty());
        }
        braided += holds;
    }
    EXPECT_GT(braided, 0);
    EXPECT_LT(braided, 256);
}

TEST(YangBaxter, SolutionsFromSquares) {
    YBESolution c2 = new_solution_from_square(trivial_brace(cyclic_group(2)));
    ASSERT_EQ(c2.n, 4);
    for (Elem x = 0; x < 4; ++x)
        for (Elem y = 0; y < 4; ++y) {
            EXPECT_EQ(c2.l(x, y), y);
            EXPECT_EQ(c2.r(x, y), x);
        }
    EXPECT_EQ(new_solution_from_square(zbrace(4)).n, 16);
    YBESolution s3 = new_solution_from_square(trivial_brace(symmetric_group3()));
    EXPECT_EQ(s3.n, 36);
    EXPECT_TRUE(check_braid(s3));
    EXPECT_THROW(new_solution_from_square(trivial_brace(cyclic_group(13))), AlgebraError);
}

TEST(YangBaxter, IsomorphismsConjugateSolutions) {
    for (int n : {4, 6}) {
        auto bs = enumerate_braces(n);
        for (const auto& e : bs) {
            SkewBrace t = trivial_brace(e.brace.add());
            auto targets = {e.brace, t};
            for (const auto& other : targets) {
                auto f = first_brace_isomorphism(e.brace, other);
                if (!f) continue;
                YBESolution a = gv_solution(e.brace), b = gv_solution(other);
                for (Elem x = 0; x < n; ++x)
                    for (Elem y = 0; y < n; ++y) {
                        EXPECT_EQ((*f)(a.l(x, y)), b.l((*f)(x), (*f)(y)));
                        EXPECT_EQ((*f)(a.r(x, y)), b.r((*f)(x), (*f)(y)));
                    }
            }
        }
    }
}
