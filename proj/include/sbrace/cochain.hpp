#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sbrace/group.hpp"

namespace sbrace {

// Abelian group written additively.
class Additive {
public:
    explicit Additive(const FiniteGroup& g) : g_(&g) {}
    Elem add(Elem a, Elem b) const { return g_->mul(a, b); }
    Elem neg(Elem a) const { return g_->inv(a); }
    Elem sub(Elem a, Elem b) const { return g_->mul(a, g_->inv(b)); }
    Elem sum(std::initializer_list<Elem> xs) const {
        Elem s = 0;
        for (Elem x : xs) s = add(s, x);
        return s;
    }
    const FiniteGroup& group() const { return *g_; }

private:
    const FiniteGroup* g_;
};

Verdict require_abelian(const FiniteGroup& g);

// Map from rows x cols into a coefficient group.
struct Cochain2 {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> values;

    static Cochain2 zero(int rows, int cols);
    Elem operator()(Elem a, Elem b) const { return values[static_cast<std::size_t>(a) * cols + b]; }
    Elem& at(Elem a, Elem b) { return values[static_cast<std::size_t>(a) * cols + b]; }
    bool normalized() const;
    bool operator==(const Cochain2& o) const = default;
};

// Free coordinates of a normalized cochain tuple; slot i ranges over groups[i].
struct SlotSpace {
    std::vector<const FiniteGroup*> groups;

    std::size_t size() const { return groups.size(); }
    // Number of assignments, or nullopt if it exceeds `bound`.
    std::optional<std::uint64_t> count(std::uint64_t bound) const;
    std::vector<Elem> add(const std::vector<Elem>& a, const std::vector<Elem>& b) const;
    std::vector<Elem> sub(const std::vector<Elem>& a, const std::vector<Elem>& b) const;
};

constexpr std::uint64_t kSearchBound = std::uint64_t{1} << 20;

// Visits every assignment in lexicographic order; throws SearchTooLarge past `bound`.
void for_each_assignment(const SlotSpace& space, std::uint64_t bound,
                         const std::function<void(const std::vector<Elem>&)>& visit);

struct ClassCount {
    std::uint64_t cocycles = 0;
    std::uint64_t coboundaries = 0;
    std::uint64_t classes = 0;
    std::vector<std::vector<Elem>> representatives;  // lexicographically least per class
};

ClassCount classify(const SlotSpace& space, std::uint64_t bound,
                    const std::function<bool(const std::vector<Elem>&)>& is_cocycle,
                    const std::vector<std::vector<Elem>>& coboundaries);

// Callback for residual equations: equation label, location, group, value.
struct ResidualEntry {
    int equation;
    std::array<Elem, 3> at;
    const FiniteGroup* group;
    Elem value;
};
using ResidualSink = std::function<bool(const ResidualEntry&)>;  // return false to stop

std::string describe(const ResidualEntry& e, const char* const* equation_names);

namespace linear {

// Coordinates of an elementary abelian p-group over F_p.
class FpCoords {
public:
    static std::optional<FpCoords> of(const FiniteGroup& g);
    int p() const { return p_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<int>& coords(Elem x) const { return coords_[x]; }
    Elem element(const int* c) const;

private:
    int p_ = 2;
    std::vector<Elem> basis_;
    std::vector<std::vector<int>> coords_;
    std::vector<Elem> by_code_;
    const FiniteGroup* g_ = nullptr;
};

// Linear map between slot spaces over a common F_p, sampled on unit vectors.
class FpLinearMap {
public:
    using Apply = std::function<std::vector<Elem>(const std::vector<Elem>&)>;

    // Returns nullopt if any slot group is not elementary abelian for one prime.
    static std::optional<FpLinearMap> build(const SlotSpace& domain, const SlotSpace& codomain,
                                            const Apply& apply);

    int rank() const;
    int kernel_dim() const { return domain_dim_ - rank(); }
    // Basis of the kernel as domain slot vectors.
    std::vector<std::vector<Elem>> kernel_basis() const;
    // A preimage of `target`, if any.
    std::optional<std::vector<Elem>> solve(const std::vector<Elem>& target) const;
    // Random element of the kernel.
    std::vector<Elem> random_kernel_element(std::mt19937_64& rng) const;
    int prime() const { return p_; }

private:
    std::vector<int> flatten(const SlotSpace& s, const std::vector<FpCoords>& c,
                             const std::vector<Elem>& v) const;
    std::vector<Elem> unflatten_domain(const std::vector<int>& x) const;

    int p_ = 2;
    int domain_dim_ = 0;
    int codomain_dim_ = 0;
    SlotSpace domain_, codomain_;
    std::vector<FpCoords> dom_coords_, cod_coords_;
    std::vector<std::vector<int>> columns_;  // one per domain coordinate
};

}  // namespace linear

}  // namespace sbrace
