#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

#include "sbrace/brace.hpp"

using namespace sbrace;

namespace {

using Tab4 = std::array<std::array<int, 4>, 4>;

// All group tables on {0,1,2,3} with identity 0, by brute force over the 3x3 core.
std::vector<Tab4> group_tables4() {
    std::vector<Tab4> out;
    for (int code = 0; code < 262144; ++code) {
        Tab4 t{};
        for (int a = 0; a < 4; ++a) t[0][a] = t[a][0] = a;
        int c = code;
        for (int a = 1; a < 4; ++a)
            for (int b = 1; b < 4; ++b) {
                t[a][b] = c % 4;
                c /= 4;
            }
        bool ok = true;
        for (int a = 0; a < 4 && ok; ++a) {
            std::set<int> row(t[a].begin(), t[a].end()), col;
            for (int b = 0; b < 4; ++b) col.insert(t[b][a]);
            ok = row.size() == 4 && col.size() == 4;
        }
        for (int a = 0; a < 4 && ok; ++a)
            for (int b = 0; b < 4 && ok; ++b)
                for (int d = 0; d < 4 && ok; ++d) ok = t[t[a][b]][d] == t[a][t[b][d]];
        if (ok) out.push_back(t);
    }
    return out;
}

int inverse_in(const Tab4& t, int a) {
    for (int b = 0; b < 4; ++b)
        if (t[a][b] == 0) return b;
    return -1;
}

bool brace_axiom(const Tab4& add, const Tab4& mul) {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                if (mul[a][add[b][c]] != add[add[mul[a][b]][inverse_in(add, a)]][mul[a][c]]) return false;
    return true;
}

// Number of skew braces of order 4 up to isomorphism, independent of the library.
int brute_force_brace_count4() {
    auto tables = group_tables4();
    std::vector<std::pair<Tab4, Tab4>> braces;
    for (const auto& a : tables)
        for (const auto& m : tables)
            if (brace_axiom(a, m)) braces.emplace_back(a, m);
    std::vector<bool> seen(braces.size());
    int classes = 0;
    for (std::size_t i = 0; i < braces.size(); ++i) {
        if (seen[i]) continue;
        ++classes;
        std::array<int, 3> r{1, 2, 3};
        do {
            const std::array<int, 4> p{0, r[0], r[1], r[2]};
            Tab4 a{}, m{};
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y) {
                    a[p[x]][p[y]] = p[braces[i].first[x][y]];
                    m[p[x]][p[y]] = p[braces[i].second[x][y]];
                }
            for (std::size_t j = 0; j < braces.size(); ++j)
                if (braces[j].first == a && braces[j].second == m) seen[j] = true;
        } while (std::next_permutation(r.begin(), r.end()));
    }
    return classes;
}

SkewBrace b4() { return zbrace(4); }

}  // namespace

TEST(Brace, TrivialAndWorkedExample) {
    EXPECT_TRUE(validate_brace(cyclic_group(2).rows(), cyclic_group(2).rows()).is_trivial());
    SkewBrace b = b4();
    EXPECT_EQ(b.lambda(1, 1), 3);
    for (Elem m = 0; m < 4; ++m) EXPECT_EQ(b.lambda(2, m), m);
    EXPECT_EQ(circle_inverse(b, 1), 1);
    EXPECT_EQ(circle_inverse(trivial_brace(cyclic_group(4)), 1), 3);
    for (const auto& e : enumerate_braces(8)) EXPECT_EQ(circle_inverse(e.brace, 0), 0);
}

TEST(Brace, CyclicWithKleinMultiplication) {
    FiniteGroup c4 = cyclic_group(4), klein = direct_product(cyclic_group(2), cyclic_group(2));
    Verdict v = check_brace_axiom(c4, klein);
    try {
        SkewBrace b = SkewBrace::make(c4, klein);
        EXPECT_TRUE(v.holds);
    } catch (const AlgebraError& e) {
        EXPECT_EQ(e.code(), ErrorCode::BraceAxiomFails);
        EXPECT_FALSE(v.holds);
    }
}

TEST(Brace, LambdaIsAnActionByAutomorphisms) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& e : enumerate_braces(n)) {
            const SkewBrace& b = e.brace;
            EXPECT_TRUE(b.lambda_action().check());
            for (Elem a = 0; a < n; ++a) EXPECT_TRUE(is_homomorphism(b.lambda_map(a), b.add(), b.add()));
        }
    SkewBrace t = trivial_brace(symmetric_group3());
    for (Elem a = 0; a < 6; ++a) EXPECT_EQ(t.lambda_map(a), identity_map(6));
}

TEST(Brace, Homomorphisms) {
    SkewBrace b = b4();
    EXPECT_TRUE(is_brace_homomorphism(identity_map(4), b, b));
    EXPECT_TRUE(is_brace_homomorphism(constant_map(4, 0), b, b));
    EXPECT_TRUE(is_brace_homomorphism(ElementMap{{0, 3, 2, 1}}, b, b));
    // Swapping 1 and 2 preserves (B, o), a Klein group, but not (C4, +).
    EXPECT_TRUE(is_homomorphism(ElementMap{{0, 2, 1, 3}}, b.mul(), b.mul()));
    EXPECT_FALSE(is_brace_homomorphism(ElementMap{{0, 2, 1, 3}}, b, b));
}

TEST(Brace, Isomorphisms) {
    SkewBrace c2 = trivial_brace(cyclic_group(2));
    EXPECT_EQ(find_brace_isomorphisms(c2, c2), std::vector<ElementMap>{identity_map(2)});
    EXPECT_TRUE(find_brace_isomorphisms(b4(), trivial_brace(cyclic_group(4))).empty());
    auto self = find_brace_isomorphisms(b4(), b4());
    EXPECT_NE(std::find(self.begin(), self.end(), identity_map(4)), self.end());
}

TEST(Brace, EnumerationCounts) {
    const int expected[] = {0, 1, 1, 1, 4, 1, 6, 1, 47};
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(static_cast<int>(enumerate_braces(n).size()), expected[n]) << n;
    EXPECT_THROW(enumerate_braces(9), AlgebraError);
}

TEST(Brace, EnumerationMatchesBruteForceAtOrderFour) {
    EXPECT_EQ(static_cast<int>(enumerate_braces(4).size()), brute_force_brace_count4());
}

TEST(Brace, EnumeratedBracesArePairwiseNonIsomorphic) {
    for (int n : {4, 6, 8}) {
        auto bs = enumerate_braces(n);
        for (std::size_t i = 0; i < bs.size(); ++i)
            for (std::size_t j = i + 1; j < bs.size(); ++j)
                EXPECT_FALSE(first_brace_isomorphism(bs[i].brace, bs[j].brace).has_value()) << n << ":" << i << "," << j;
    }
}

TEST(Brace, IdealsAndQuotients) {
    SkewBrace b = b4();
    EXPECT_TRUE(is_ideal(b, {0, 2}));
    Quotient q = quotient_brace(b, {0, 2});
    EXPECT_EQ(q.brace.order(), 2);
    EXPECT_TRUE(is_brace_homomorphism(q.projection, b, q.brace));
    EXPECT_THROW(quotient_brace(b, {0, 1}), AlgebraError);
}
