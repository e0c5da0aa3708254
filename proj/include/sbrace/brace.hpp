#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbrace/group.hpp"

namespace sbrace {

// Skew brace on {0..n-1}: additive group `add` (written a.b) and
// multiplicative group `mul` (written a o b) sharing identity 0.
class SkewBrace {
public:
    SkewBrace();

    // Validates both groups and a o (b.c) = (a o b).a^-1.(a o c).
    static SkewBrace make(const FiniteGroup& add, const FiniteGroup& mul);
    static SkewBrace from_tables(const Table& add, const Table& mul);

    int order() const { return add_.order(); }
    const FiniteGroup& add() const { return add_; }
    const FiniteGroup& mul() const { return mul_; }

    Elem plus(Elem a, Elem b) const { return add_.mul(a, b); }
    Elem minus(Elem a) const { return add_.inv(a); }
    Elem circ(Elem a, Elem b) const { return mul_.mul(a, b); }
    Elem dagger(Elem a) const { return mul_.inv(a); }
    // lambda_a(b) = a^-1 . (a o b)
    Elem lambda(Elem a, Elem b) const { return lambda_[static_cast<std::size_t>(a) * order() + b]; }
    Elem lambda_inverse(Elem a, Elem b) const {
        return lambda_inv_[static_cast<std::size_t>(a) * order() + b];
    }
    ElementMap lambda_map(Elem a) const;
    // lambda as a covariant action of (B, o) on (B, .)
    GroupAction lambda_action() const;

    bool is_trivial() const { return add_ == mul_; }
    bool operator==(const SkewBrace& o) const { return add_ == o.add_ && mul_ == o.mul_; }

private:
    FiniteGroup add_;
    FiniteGroup mul_;
    std::vector<Elem> lambda_;
    std::vector<Elem> lambda_inv_;
};

SkewBrace validate_brace(const Table& add, const Table& mul);
// Checks the brace axiom without throwing.
Verdict check_brace_axiom(const FiniteGroup& add, const FiniteGroup& mul);

Elem circle_inverse(const SkewBrace& b, Elem a);
SkewBrace trivial_brace(const FiniteGroup& g);

Verdict is_brace_homomorphism(const ElementMap& f, const SkewBrace& src, const SkewBrace& dst);

constexpr int kIsomorphismBound = 64;

// All brace isomorphisms src -> dst, sorted lexicographically.
std::vector<ElementMap> find_brace_isomorphisms(const SkewBrace& src, const SkewBrace& dst,
                                                int bound = kAutomorphismBound);
std::optional<ElementMap> first_brace_isomorphism(const SkewBrace& src, const SkewBrace& dst,
                                                  int bound = kIsomorphismBound);

// Element sets and ideals.
bool is_left_ideal(const SkewBrace& b, const Subset& s);
bool is_ideal(const SkewBrace& b, const Subset& s);
// Sub-brace renumbered by position in the sorted subset.
SkewBrace subbrace(const SkewBrace& b, const Subset& s);

struct Quotient {
    SkewBrace brace;
    ElementMap projection;          // B -> B/I
    std::vector<Elem> representative;  // least element of each coset
};

// Cosets numbered by their least element in increasing order.
Quotient quotient_brace(const SkewBrace& b, const Subset& ideal);

// Additive group Z/2k with n o m = n + (-1)^n m.
SkewBrace zbrace(int two_k);

}  // namespace sbrace

namespace sbrace {

constexpr int kBraceEnumerationBound = 8;

struct EnumeratedBrace {
    std::string additive;  // name of the additive group from small_groups
    SkewBrace brace;
};

// Skew braces of order n up to isomorphism, grouped by additive group in
// small_groups order, then by a canonical lambda-map encoding.
std::vector<EnumeratedBrace> enumerate_braces(int n);

}  // namespace sbrace
