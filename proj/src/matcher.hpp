#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sbrace/group.hpp"

namespace sbrace::detail {

// A set {0..n-1} with binary operations, each a flat n*n table.
struct Structure {
    int n = 0;
    std::vector<const std::vector<Elem>*> ops;
    std::vector<std::uint64_t> invariants;  // per element; must match under any isomorphism
};

// Calls `found` for each bijection preserving all operations; stops when it returns false.
void search_isomorphisms(const Structure& a, const Structure& b,
                         const std::function<bool(const std::vector<Elem>&)>& found);

std::uint64_t mix(std::uint64_t h, std::uint64_t v);

std::vector<std::uint64_t> group_invariants(const FiniteGroup& g);

}  // namespace sbrace::detail
