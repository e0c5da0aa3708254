#include <gtest/gtest.h>

#include <filesystem>

#include "sbrace/catalog.hpp"
#include "sbrace/io.hpp"
#include "sbrace/square.hpp"

using namespace sbrace;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const AlgebraError& e) {
        return e.code();
    }
    return ErrorCode::InternalDefect;
}

}  // namespace

TEST(Io, CatalogRoundTrips) {
    EXPECT_EQ(catalog().size(), 92u);
    for (const auto& e : catalog()) {
        if (e.kind == "group") {
            FiniteGroup g = io::group_from_json(e.payload);
            EXPECT_EQ(io::to_json(g), e.payload) << e.name;
        } else {
            SkewBrace b = io::brace_from_json(e.payload);
            EXPECT_EQ(io::to_json(b), e.payload) << e.name;
        }
    }
    EXPECT_EQ(catalog_braces(8).size(), 78u);
    EXPECT_EQ(load_brace("catalog:zbrace4").add(), cyclic_group(4));
}

TEST(Io, StructuredObjectsRoundTrip) {
    SkewBrace b = zbrace(4);
    RBOperator r = square_operator(b);
    EXPECT_EQ(io::rb_from_json(io::to_json(r)).map, r.map);
    RRBGroup q = rrb_from_brace(b);
    RRBGroup q2 = io::rrb_from_json(io::to_json(q));
    EXPECT_EQ(q2.r, q.r);
    EXPECT_EQ(q2.phi, q.phi);
    YBESolution s = gv_solution(b);
    YBESolution s2 = io::ybe_from_json(io::to_json(s));
    EXPECT_EQ(s2.left, s.left);
    EXPECT_EQ(s2.right, s.right);
    ActionTriplet t = trivial_triplet(b, cyclic_group(2));
    SbCochain c{Cochain2::zero(4, 4), Cochain2::zero(4, 4)};
    c.g.at(1, 3) = 1;
    EXPECT_EQ(io::sb_cochain_from_json(io::to_json(c), t), c);
    ActionTriplet t2 = io::triplet_from_json(io::triplet_to_json(t), b, cyclic_group(2));
    EXPECT_TRUE(t2.xi == t.xi && t2.zeta == t.zeta && t2.eps == t.eps);
}

TEST(Io, CanonicalSortsKeys) {
    io::Json j = {{"b", 1}, {"a", {1, 2}}};
    EXPECT_EQ(io::canonical(j), "{\"a\":[1,2],\"b\":1}\n");
}

TEST(Io, MalformedInput) {
    EXPECT_EQ(code_of([] { io::group_from_json(io::Json::parse(R"({"kind":"group"})")); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { io::group_from_json(io::Json::parse(R"({"kind":"group","table":"x"})")); }),
              ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { io::brace_from_json(io::to_json(cyclic_group(2))); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { io::group_from_json(io::Json::parse(R"({"kind":"group","order":2,"table":[[1,0],[0,1]]})")); }),
              ErrorCode::NoIdentityAtZero);
    EXPECT_EQ(code_of([] { catalog_entry("nope"); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { load_source("/nonexistent/file.json"); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { load_brace("catalog:c4"); }), ErrorCode::InvalidInput);
}

TEST(Io, CochainsMustBeNormalizedAndInRange) {
    ActionTriplet t = trivial_triplet(trivial_brace(cyclic_group(2)), cyclic_group(2));
    io::Json unnormalized = io::Json::parse(R"({"kind":"sb2","g":[[1,0],[0,0]],"f":[[0,0],[0,0]]})");
    EXPECT_EQ(code_of([&] { io::sb_cochain_from_json(unnormalized, t); }), ErrorCode::InvalidInput);
    io::Json out_of_range = io::Json::parse(R"({"kind":"sb2","g":[[0,0],[0,2]],"f":[[0,0],[0,0]]})");
    EXPECT_EQ(code_of([&] { io::sb_cochain_from_json(out_of_range, t); }), ErrorCode::InvalidInput);
}

TEST(Io, FileRoundTrip) {
    auto path = std::filesystem::temp_directory_path() / "sbrace_io_test.json";
    io::write_file(path.string(), io::to_json(zbrace(8)));
    SkewBrace b = load_brace(path.string());
    EXPECT_EQ(b.order(), 8);
    std::filesystem::remove(path);
}
