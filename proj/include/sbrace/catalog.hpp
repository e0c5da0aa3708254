#pragma once

#include <string>
#include <vector>

#include "sbrace/io.hpp"

namespace sbrace {

// Bundled objects addressed as catalog:<name>.
struct CatalogEntry {
    std::string name;
    std::string kind;  // "group" or "skew_brace"
    io::Json payload;
};

// Groups of order <= 8 by name, then trivial-<group>, zbrace4, zbrace8, and
// every enumerated brace as sb<n>-<k> (k counted from 1 in enumeration order).
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

std::vector<std::pair<std::string, FiniteGroup>> catalog_groups(int max_order);
std::vector<std::pair<std::string, SkewBrace>> catalog_braces(int max_order);

// "catalog:<name>" or a file path.
io::Json load_source(const std::string& source);
FiniteGroup load_group(const std::string& source);
SkewBrace load_brace(const std::string& source);

}  // namespace sbrace
