#include "sbrace/catalog.hpp"

namespace sbrace {

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    std::vector<NamedGroup> groups;
    for (int n = 1; n <= kBraceEnumerationBound; ++n)
        for (auto& g : small_groups(n)) groups.push_back(std::move(g));
    for (const auto& g : groups) out.push_back({g.name, "group", io::to_json(g.group)});
    for (const auto& g : groups) out.push_back({"trivial-" + g.name, "skew_brace", io::to_json(trivial_brace(g.group))});
    out.push_back({"zbrace4", "skew_brace", io::to_json(zbrace(4))});
    out.push_back({"zbrace8", "skew_brace", io::to_json(zbrace(8))});
    for (int n = 1; n <= kBraceEnumerationBound; ++n) {
        int k = 0;
        for (const auto& e : enumerate_braces(n))
            out.push_back({"sb" + std::to_string(n) + "-" + std::to_string(++k), "skew_brace", io::to_json(e.brace)});
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    fail(ErrorCode::InvalidInput, "no catalog entry named " + name);
}

std::vector<std::pair<std::string, FiniteGroup>> catalog_groups(int max_order) {
    std::vector<std::pair<std::string, FiniteGroup>> out;
    for (const auto& e : catalog())
        if (e.kind == "group" && e.payload.at("order").get<int>() <= max_order)
            out.emplace_back(e.name, io::group_from_json(e.payload));
    return out;
}

std::vector<std::pair<std::string, SkewBrace>> catalog_braces(int max_order) {
    std::vector<std::pair<std::string, SkewBrace>> out;
    for (const auto& e : catalog())
        if (e.kind == "skew_brace" && e.payload.at("order").get<int>() <= max_order)
            out.emplace_back(e.name, io::brace_from_json(e.payload));
    return out;
}

io::Json load_source(const std::string& source) {
    const std::string prefix = "catalog:";
    if (source.rfind(prefix, 0) == 0) return catalog_entry(source.substr(prefix.size())).payload;
    return io::read_file(source);
}

FiniteGroup load_group(const std::string& source) {
    io::Json j = load_source(source);
    if (io::kind_of(j) == "skew_brace") fail(ErrorCode::InvalidInput, source + " is a brace, not a group");
    return io::group_from_json(j);
}

SkewBrace load_brace(const std::string& source) { return io::brace_from_json(load_source(source)); }

}  // namespace sbrace
