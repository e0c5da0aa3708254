#include "sbrace/io.hpp"

#include <algorithm>
#include <fstream>

namespace sbrace::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::InvalidInput, what); }

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        bad(std::string(what) + ": " + e.what());
    }
}

void expect_kind(const Json& j, const char* kind) {
    if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind)
        bad(std::string("expected an object of kind \"") + kind + "\"");
}

Json table_json(const std::vector<Elem>& flat, int rows, int cols) {
    Json out = Json::array();
    for (int r = 0; r < rows; ++r)
        out.push_back(std::vector<Elem>(flat.begin() + static_cast<std::ptrdiff_t>(r) * cols,
                                        flat.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols));
    return out;
}

std::vector<Elem> flat_from(const Json& j, int rows, int cols, int range, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) bad(std::string(what) + ": wrong number of rows");
    std::vector<Elem> flat;
    flat.reserve(static_cast<std::size_t>(rows) * cols);
    for (const auto& row : j) {
        auto r = row.get<std::vector<Elem>>();
        if (static_cast<int>(r.size()) != cols) bad(std::string(what) + ": wrong number of columns");
        for (Elem x : r)
            if (x < 0 || x >= range) bad(std::string(what) + ": entry " + std::to_string(x) + " out of range");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return flat;
}

Table rows_from(const Json& j) { return j.get<Table>(); }

Cochain2 cochain_from(const Json& j, int rows, int cols, int range, const char* what) {
    Cochain2 c{rows, cols, flat_from(j, rows, cols, range, what)};
    if (!c.normalized()) bad(std::string(what) + ": cochain is not normalized");
    return c;
}

ElementMap sized_map(const Json& j, int size, int range, const char* what) {
    ElementMap m = map_from_json(j);
    if (m.size() != size) bad(std::string(what) + ": map has wrong length");
    for (Elem x : m.values)
        if (x < 0 || x >= range) bad(std::string(what) + ": value out of range");
    return m;
}

}  // namespace

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        bad(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot write " + path);
    out << canonical(j);
}

std::string canonical(const Json& j) { return j.dump() + "\n"; }

std::string kind_of(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) bad("missing \"kind\"");
    return j.at("kind").get<std::string>();
}

Json to_json(const FiniteGroup& g) {
    return {{"kind", "group"}, {"order", g.order()}, {"table", g.rows()}};
}

Json to_json(const ElementMap& m) { return {{"kind", "map"}, {"values", m.values}}; }

Json to_json(const GroupAction& a) {
    Json images = Json::array();
    for (const auto& img : a.images()) images.push_back(img.values);
    return {{"kind", "action"}, {"contravariant", a.contravariant()}, {"images", images}};
}

Json to_json(const SkewBrace& b) {
    return {{"kind", "skew_brace"}, {"order", b.order()}, {"add", b.add().rows()}, {"mul", b.mul().rows()}};
}

Json to_json(const RBOperator& r) { return {{"kind", "rb"}, {"group", to_json(r.group)}, {"map", to_json(r.map)}}; }

Json to_json(const RRBGroup& q) {
    return {{"kind", "rrb"}, {"h", to_json(q.h)}, {"g", to_json(q.g)}, {"phi", to_json(q.phi)}, {"r", to_json(q.r)}};
}

Json to_json(const YBESolution& s) {
    return {{"kind", "ybe"}, {"size", s.n}, {"left", table_json(s.left, s.n, s.n)},
            {"right", table_json(s.right, s.n, s.n)}};
}

Json to_json(const Cochain2& c) { return table_json(c.values, c.rows, c.cols); }

Json to_json(const SbCochain& c) { return {{"kind", "sb2"}, {"g", to_json(c.g)}, {"f", to_json(c.f)}}; }

Json to_json(const RbCochain& c) { return {{"kind", "rb2"}, {"tau", to_json(c.tau)}, {"r", c.r.values}}; }

Json to_json(const RrbCochain& c) {
    return {{"kind", "rrb2"}, {"tau1", to_json(c.tau1)}, {"tau2", to_json(c.tau2)},
            {"rho", to_json(c.rho)}, {"chi", c.chi.values}};
}

Json triplet_to_json(const ActionTriplet& t) {
    return {{"kind", "triplet"}, {"xi", to_json(t.xi)}, {"zeta", to_json(t.zeta)}, {"eps", to_json(t.eps)}};
}

Json rb_module_to_json(const RBModule& m) {
    return {{"kind", "rb_module"}, {"coeff", to_json(m.coeff)}, {"r_i", to_json(m.r_i)}, {"gamma", to_json(m.gamma)}};
}

Json rrb_module_to_json(const RRBModule& m) {
    return {{"kind", "rrb_module"}, {"k", to_json(m.k)},         {"l", to_json(m.l)},
            {"s", to_json(m.s_op)},  {"nu", to_json(m.nu)},       {"mu", to_json(m.mu)},
            {"sigma", to_json(m.sigma)}, {"f", to_json(m.f)}};
}

FiniteGroup group_from_json(const Json& j) {
    return guarded("group", [&] {
        expect_kind(j, "group");
        Table rows = rows_from(j.at("table"));
        if (j.at("order").get<int>() != static_cast<int>(rows.size())) bad("group: order does not match table");
        return validate_group(rows);
    });
}

ElementMap map_from_json(const Json& j) {
    return guarded("map", [&] {
        expect_kind(j, "map");
        return ElementMap{j.at("values").get<std::vector<Elem>>()};
    });
}

GroupAction action_from_json(const Json& j, const FiniteGroup& actor, const FiniteGroup& space) {
    return guarded("action", [&] {
        expect_kind(j, "action");
        const auto& imgs = j.at("images");
        if (!imgs.is_array() || static_cast<int>(imgs.size()) != actor.order())
            bad("action: need one image per actor element");
        std::vector<ElementMap> images;
        for (const auto& img : imgs) {
            ElementMap m{img.get<std::vector<Elem>>()};
            if (m.size() != space.order()) bad("action: image has wrong length");
            for (Elem x : m.values)
                if (x < 0 || x >= space.order()) bad("action: value out of range");
            images.push_back(std::move(m));
        }
        return GroupAction::make(actor, space, std::move(images), j.at("contravariant").get<bool>());
    });
}

SkewBrace brace_from_json(const Json& j) {
    return guarded("skew_brace", [&] {
        expect_kind(j, "skew_brace");
        Table add = rows_from(j.at("add"));
        Table mul = rows_from(j.at("mul"));
        const int n = j.at("order").get<int>();
        if (static_cast<int>(add.size()) != n || static_cast<int>(mul.size()) != n)
            bad("skew_brace: order does not match tables");
        return validate_brace(add, mul);
    });
}

RBOperator rb_from_json(const Json& j) {
    return guarded("rb", [&] {
        expect_kind(j, "rb");
        FiniteGroup g = group_from_json(j.at("group"));
        return validate_rb(g, sized_map(j.at("map"), g.order(), g.order(), "rb"));
    });
}

RRBGroup rrb_from_json(const Json& j) {
    return guarded("rrb", [&] {
        expect_kind(j, "rrb");
        FiniteGroup h = group_from_json(j.at("h"));
        FiniteGroup g = group_from_json(j.at("g"));
        GroupAction phi = action_from_json(j.at("phi"), g, h);
        if (phi.contravariant()) bad("rrb: phi must be covariant");
        return validate_rrb(h, g, phi, sized_map(j.at("r"), h.order(), g.order(), "rrb"));
    });
}

YBESolution ybe_from_json(const Json& j) {
    return guarded("ybe", [&] {
        expect_kind(j, "ybe");
        YBESolution s;
        s.n = j.at("size").get<int>();
        if (s.n < 1) bad("ybe: size must be positive");
        s.left = flat_from(j.at("left"), s.n, s.n, s.n, "ybe left");
        s.right = flat_from(j.at("right"), s.n, s.n, s.n, "ybe right");
        return s;
    });
}

SbCochain sb_cochain_from_json(const Json& j, const ActionTriplet& t) {
    return guarded("sb2", [&] {
        expect_kind(j, "sb2");
        const int n = t.base.order(), q = t.coeff.order();
        return SbCochain{cochain_from(j.at("g"), n, n, q, "sb2 g"), cochain_from(j.at("f"), n, n, q, "sb2 f")};
    });
}

RbCochain rb_cochain_from_json(const Json& j, const RBModule& m) {
    return guarded("rb2", [&] {
        expect_kind(j, "rb2");
        const int n = m.base.group.order(), q = m.coeff.order();
        RbCochain c{cochain_from(j.at("tau"), n, n, q, "rb2 tau"), ElementMap{j.at("r").get<std::vector<Elem>>()}};
        if (c.r.size() != n) bad("rb2 r: wrong length");
        for (Elem x : c.r.values)
            if (x < 0 || x >= q) bad("rb2 r: value out of range");
        if (c.r(0) != 0) bad("rb2 r: not normalized");
        return c;
    });
}

RrbCochain rrb_cochain_from_json(const Json& j, const RRBModule& m) {
    return guarded("rrb2", [&] {
        expect_kind(j, "rrb2");
        const int a = m.base.h.order(), b = m.base.g.order(), k = m.k.order(), l = m.l.order();
        RrbCochain c{cochain_from(j.at("tau1"), a, a, k, "rrb2 tau1"), cochain_from(j.at("tau2"), b, b, l, "rrb2 tau2"),
                     cochain_from(j.at("rho"), a, b, k, "rrb2 rho"), ElementMap{j.at("chi").get<std::vector<Elem>>()}};
        if (c.chi.size() != a) bad("rrb2 chi: wrong length");
        for (Elem x : c.chi.values)
            if (x < 0 || x >= l) bad("rrb2 chi: value out of range");
        if (c.chi(0) != 0) bad("rrb2 chi: not normalized");
        return c;
    });
}

ActionTriplet triplet_from_json(const Json& j, const SkewBrace& base, const FiniteGroup& coeff) {
    return guarded("triplet", [&] {
        expect_kind(j, "triplet");
        return validate_good_triplet(base, coeff, action_from_json(j.at("xi"), base.mul(), coeff),
                                     action_from_json(j.at("zeta"), base.add(), coeff),
                                     action_from_json(j.at("eps"), base.mul(), coeff));
    });
}

RBModule rb_module_from_json(const Json& j, const RBOperator& base) {
    return guarded("rb_module", [&] {
        expect_kind(j, "rb_module");
        FiniteGroup coeff = group_from_json(j.at("coeff"));
        return validate_rb_module(base, coeff, sized_map(j.at("r_i"), coeff.order(), coeff.order(), "rb_module"),
                                  action_from_json(j.at("gamma"), base.group, coeff));
    });
}

RRBModule rrb_module_from_json(const Json& j, const RRBGroup& base) {
    return guarded("rrb_module", [&] {
        expect_kind(j, "rrb_module");
        FiniteGroup k = group_from_json(j.at("k"));
        FiniteGroup l = group_from_json(j.at("l"));
        Cochain2 f{l.order(), base.h.order(), flat_from(j.at("f"), l.order(), base.h.order(), k.order(), "rrb_module f")};
        return validate_rrb_module(base, k, l, sized_map(j.at("s"), k.order(), l.order(), "rrb_module"),
                                   action_from_json(j.at("nu"), base.g, k), action_from_json(j.at("mu"), base.h, k),
                                   action_from_json(j.at("sigma"), base.g, l), f);
    });
}

Json subset_to_json(const Subset& s) { return s; }

Subset subset_from_json(const Json& j, int order) {
    return guarded("subset", [&] {
        Subset s = j.get<Subset>();
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (Elem x : s)
            if (x < 0 || x >= order) bad("subset: element out of range");
        return s;
    });
}

}  // namespace sbrace::io
