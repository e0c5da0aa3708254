#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sbrace/error.hpp"

namespace sbrace {

using Elem = std::int32_t;
using Table = std::vector<std::vector<Elem>>;

// Finite group on {0..n-1} with identity 0, stored as a flat Cayley table.
class FiniteGroup {
public:
    FiniteGroup();

    // Validates and throws AlgebraError on the first violation.
    static FiniteGroup from_table(const Table& rows);
    static FiniteGroup from_flat(int n, std::vector<Elem> flat);

    int order() const { return n_; }
    Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem inv(Elem a) const { return inv_[a]; }
    Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

    const std::vector<Elem>& flat() const { return table_; }
    Table rows() const;
    bool is_abelian() const;
    int element_order(Elem a) const;

    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

private:
    int n_ = 1;
    std::vector<Elem> table_;
    std::vector<Elem> inv_;
};

FiniteGroup validate_group(const Table& rows);

struct ElementMap {
    std::vector<Elem> values;

    Elem operator()(Elem x) const { return values[x]; }
    int size() const { return static_cast<int>(values.size()); }
    bool operator==(const ElementMap& o) const = default;
    auto operator<=>(const ElementMap& o) const = default;
};

ElementMap identity_map(int n);
ElementMap constant_map(int n, Elem value);
ElementMap compose(const ElementMap& outer, const ElementMap& inner);
bool is_bijective(const ElementMap& f, int codomain_order);
ElementMap inverse_permutation(const ElementMap& f);

Verdict is_homomorphism(const ElementMap& f, const FiniteGroup& src, const FiniteGroup& dst);

// Action of `actor` on `space` by automorphisms. Covariant: images compose as
// img(g1 g2) = img(g1) img(g2); contravariant: img(g1 g2) = img(g2) img(g1).
class GroupAction {
public:
    static GroupAction make(const FiniteGroup& actor, const FiniteGroup& space,
                            std::vector<ElementMap> images, bool contravariant);
    static GroupAction trivial(const FiniteGroup& actor, const FiniteGroup& space,
                               bool contravariant);
    // Builds without validation; callers must run check() themselves.
    static GroupAction unchecked(const FiniteGroup& actor, const FiniteGroup& space,
                                 std::vector<ElementMap> images, bool contravariant);

    Verdict check() const;

    Elem apply(Elem g, Elem x) const { return images_[g].values[x]; }
    Elem apply_inverse(Elem g, Elem x) const { return inverses_[g].values[x]; }
    const ElementMap& image(Elem g) const { return images_[g]; }
    const std::vector<ElementMap>& images() const { return images_; }
    bool contravariant() const { return contravariant_; }
    const FiniteGroup& actor() const { return actor_; }
    const FiniteGroup& space() const { return space_; }
    bool is_trivial() const;

    bool operator==(const GroupAction& o) const {
        return contravariant_ == o.contravariant_ && images_ == o.images_;
    }

private:
    FiniteGroup actor_;
    FiniteGroup space_;
    std::vector<ElementMap> images_;
    std::vector<ElementMap> inverses_;
    bool contravariant_ = false;
};

// (h1,g1)(h2,g2) = (h1 phi_g1(h2), g1 g2), pair (h,g) encoded as h*|G| + g.
FiniteGroup semidirect_product(const FiniteGroup& h, const FiniteGroup& g, const GroupAction& phi);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

inline Elem pair_index(Elem first, Elem second, int second_order) {
    return first * second_order + second;
}

constexpr int kAutomorphismBound = 12;

// All automorphisms, sorted lexicographically by image vector.
std::vector<ElementMap> enumerate_automorphisms(const FiniteGroup& g, int bound = kAutomorphismBound);
// All isomorphisms src -> dst, sorted lexicographically.
std::vector<ElementMap> enumerate_isomorphisms(const FiniteGroup& src, const FiniteGroup& dst,
                                               int bound = kAutomorphismBound);

using Subset = std::vector<Elem>;  // sorted element indices

Subset group_center(const FiniteGroup& g);
Subset derived_subgroup(const FiniteGroup& g);
Subset generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens);
bool is_subgroup(const FiniteGroup& g, const Subset& s);
bool is_normal_subgroup(const FiniteGroup& g, const Subset& s);
bool contains(const Subset& s, Elem x);

// Subgroup renumbered by position in the sorted subset (0 stays 0).
FiniteGroup subgroup(const FiniteGroup& g, const Subset& s);

// Standard groups.
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup quaternion_group();
FiniteGroup symmetric_group3();

}  // namespace sbrace

namespace sbrace {

struct NamedGroup {
    std::string name;
    FiniteGroup group;
};

// One representative per isomorphism class, orders 1..8.
std::vector<NamedGroup> small_groups(int n);

}  // namespace sbrace

namespace sbrace {

// Every subgroup, sorted by (size, elements).
std::vector<Subset> all_subgroups(const FiniteGroup& g);

}  // namespace sbrace

namespace sbrace {

struct GroupQuotient {
    FiniteGroup group;
    ElementMap projection;
    std::vector<Elem> representative;  // least element of each coset
};

// Cosets numbered by least element in increasing order.
GroupQuotient quotient_group(const FiniteGroup& g, const Subset& normal);

}  // namespace sbrace
