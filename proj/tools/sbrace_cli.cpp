#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbrace/acceptance.hpp"
#include "sbrace/catalog.hpp"
#include "sbrace/cohomology_maps.hpp"
#include "sbrace/io.hpp"
#include "sbrace/isoclinism.hpp"
#include "sbrace/square.hpp"
#include "sbrace/yang_baxter.hpp"

using namespace sbrace;
using io::Json;

namespace {

enum Exit { kOk = 0, kFails = 1, kInvalid = 2, kBound = 3 };

int emit(const Json& report, int code = kOk) {
    std::cout << io::canonical(report);
    return code;
}

// Writes to `path`, or to stdout when empty.
int emit_object(const Json& object, const std::string& path, const Json& report) {
    if (path.empty()) return emit(object);
    io::write_file(path, object);
    return emit(report);
}

Json verdict_json(const Verdict& v) {
    Json j = {{"holds", v.holds}};
    if (!v.holds) j["witness"] = v.witness;
    return j;
}

Json table_json(int n, const std::function<Elem(Elem, Elem)>& f) {
    Json rows = Json::array();
    for (Elem x = 0; x < n; ++x) {
        std::vector<Elem> row;
        for (Elem y = 0; y < n; ++y) row.push_back(f(x, y));
        rows.push_back(row);
    }
    return rows;
}

Subset parse_subset(const std::string& text, int order) {
    std::string s = text;
    for (char& c : s)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(s);
    Json list = Json::array();
    for (std::string tok; in >> tok;) {
        try {
            list.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            fail(ErrorCode::InvalidInput, "bad element '" + tok + "' in subset");
        }
    }
    return io::subset_from_json(list, order);
}

Json counts_json(const ClassCount& c) {
    return {{"cocycles", c.cocycles}, {"coboundaries", c.coboundaries}, {"classes", c.classes}};
}

// ---- validate ----

int cmd_validate(const std::string& source) {
    Json j = load_source(source);
    const std::string kind = io::kind_of(j);
    Json report = {{"kind", kind}, {"valid", true}};
    try {
        if (kind == "group") {
            report["order"] = io::group_from_json(j).order();
        } else if (kind == "skew_brace") {
            SkewBrace b = io::brace_from_json(j);
            report["order"] = b.order();
            report["trivial"] = b.is_trivial();
        } else if (kind == "rb") {
            report["order"] = io::rb_from_json(j).group.order();
        } else if (kind == "rrb") {
            RRBGroup q = io::rrb_from_json(j);
            report["order"] = {q.h.order(), q.g.order()};
        } else if (kind == "ybe") {
            YBESolution s = io::ybe_from_json(j);
            Verdict braid = check_braid(s), nd = check_nondegenerate(s);
            report["order"] = s.n;
            report["braid"] = verdict_json(braid);
            report["nondegenerate"] = verdict_json(nd);
            report["valid"] = braid.holds && nd.holds;
            return emit(report, braid.holds && nd.holds ? kOk : kFails);
        } else {
            fail(ErrorCode::InvalidInput, "cannot validate objects of kind " + kind);
        }
    } catch (const AlgebraError& e) {
        if (e.code() == ErrorCode::InvalidInput) throw;
        report["valid"] = false;
        report["error"] = error_name(e.code());
        report["witness"] = e.what();
        return emit(report, kFails);
    }
    return emit(report);
}

// ---- brace constructions ----

int cmd_lambda(const std::string& source) {
    SkewBrace b = load_brace(source);
    return emit({{"order", b.order()}, {"lambda", table_json(b.order(), [&](Elem x, Elem y) { return b.lambda(x, y); })}});
}

int cmd_square(const std::string& source, const std::string& out) {
    SkewBrace sq = square_brace(load_brace(source));
    return emit_object(io::to_json(sq), out, {{"order", sq.order()}, {"written", out}});
}

int cmd_double(const std::string& source, const std::string& out) {
    SkewBrace b = load_brace(source);
    if (auto v = double_precondition(b); !v) return emit({{"precondition", verdict_json(v)}}, kFails);
    SkewBrace d = double_brace(b);
    return emit_object(io::to_json(d), out, {{"order", d.order()}, {"written", out}});
}

int cmd_square_vs_double(const std::string& source) {
    SkewBrace b = load_brace(source);
    if (auto v = double_precondition(b); !v) return emit({{"precondition", verdict_json(v)}}, kFails);
    SquareVsDouble r = square_vs_double(b);
    Json iso = r.isomorphic ? Json(*r.isomorphic) : Json("skipped");
    return emit({{"tables_equal", r.tables_equal}, {"isomorphic", iso}, {"inner_lambda", r.inner_lambda}});
}

// ---- Rota-Baxter ----

int cmd_rb_enumerate(const std::string& source) {
    FiniteGroup g = load_group(source);
    Json ops = Json::array();
    for (const auto& r : enumerate_rb(g)) ops.push_back(r.map.values);
    return emit({{"count", ops.size()}, {"operators", ops}});
}

int cmd_rb_validate(const std::string& source) {
    Json j = load_source(source);
    try {
        RBOperator r = io::rb_from_json(j);
        SkewBrace b = brace_from_rb(r);
        return emit({{"valid", true}, {"brace", io::to_json(b)}});
    } catch (const AlgebraError& e) {
        if (e.code() != ErrorCode::RBAxiomFails) throw;
        return emit({{"valid", false}, {"witness", e.what()}}, kFails);
    }
}

RRBGroup load_rrb(const std::string& source) {
    Json j = load_source(source);
    if (io::kind_of(j) == "skew_brace") return rrb_from_brace(io::brace_from_json(j));
    return io::rrb_from_json(j);
}

int cmd_rrb_validate(const std::string& source) {
    Json j = load_source(source);
    try {
        RRBGroup q = io::rrb_from_json(j);
        return emit({{"valid", true}, {"brace", io::to_json(brace_from_rrb(q))}});
    } catch (const AlgebraError& e) {
        if (e.code() != ErrorCode::RRBAxiomFails) throw;
        return emit({{"valid", false}, {"witness", e.what()}}, kFails);
    }
}

int cmd_rrb_semidirect(const std::string& source, const std::string& out) {
    RBOperator r = rb_on_semidirect(load_rrb(source));
    if (auto v = check_rb(r.group, r.map); !v) fail(ErrorCode::InternalDefect, v.witness);
    return emit_object(io::to_json(r), out, {{"order", r.group.order()}, {"written", out}});
}

// ---- Yang-Baxter ----

int cmd_ybe_check(const std::string& source, bool square, const std::string& out) {
    Json j = load_source(source);
    YBESolution s;
    if (io::kind_of(j) == "ybe") {
        s = io::ybe_from_json(j);
    } else {
        SkewBrace b = io::brace_from_json(j);
        s = square ? new_solution_from_square(b) : gv_solution(b);
    }
    Verdict braid = check_braid(s), nd = check_nondegenerate(s);
    Json report = {{"size", s.n}, {"braid", verdict_json(braid)}, {"nondegenerate", verdict_json(nd)}};
    if (!out.empty()) io::write_file(out, io::to_json(s));
    return emit(report, braid.holds && nd.holds ? kOk : kFails);
}

// ---- cohomology ----

struct CohArgs {
    std::string theory, action;
    std::string base, coeff, module, ri, cocycle, ext, ideal, ideal_g, out;
};

ActionTriplet sb_context(const CohArgs& a) {
    if (a.base.empty() || a.coeff.empty()) fail(ErrorCode::InvalidInput, "--base and --coeff are required");
    SkewBrace b = load_brace(a.base);
    FiniteGroup i = load_group(a.coeff);
    if (a.module.empty()) return trivial_triplet(b, i);
    return io::triplet_from_json(load_source(a.module), b, i);
}

RBModule rb_context(const CohArgs& a) {
    if (a.base.empty()) fail(ErrorCode::InvalidInput, "--base is required");
    Json j = load_source(a.base);
    RBOperator base = io::kind_of(j) == "group" ? validate_rb(io::group_from_json(j), constant_map(io::group_from_json(j).order(), 0))
                                                : io::rb_from_json(j);
    if (!a.module.empty()) return io::rb_module_from_json(load_source(a.module), base);
    if (a.coeff.empty()) fail(ErrorCode::InvalidInput, "--coeff or --module is required");
    FiniteGroup i = load_group(a.coeff);
    ElementMap ri = a.ri.empty() ? constant_map(i.order(), 0) : io::map_from_json(load_source(a.ri));
    return trivial_rb_module(base, i, ri);
}

RRBModule rrb_context(const CohArgs& a) {
    if (a.base.empty()) fail(ErrorCode::InvalidInput, "--base is required");
    RRBGroup base = load_rrb(a.base);
    if (!a.module.empty()) return io::rrb_module_from_json(load_source(a.module), base);
    if (a.coeff.empty()) fail(ErrorCode::InvalidInput, "--coeff or --module is required");
    FiniteGroup i = load_group(a.coeff);
    return trivial_rrb_module(base, i, i, identity_map(i.order()));
}

int coh_check(const Verdict& cocycle, const std::optional<Json>& theta) {
    Json report = {{"cocycle", verdict_json(cocycle)}};
    if (cocycle.holds) report["coboundary"] = theta ? *theta : Json(false);
    return emit(report, cocycle.holds ? kOk : kFails);
}

template <class Cochain>
Json representatives(const std::vector<std::vector<Elem>>& reps, const std::function<Cochain(const std::vector<Elem>&)>& f) {
    Json out = Json::array();
    for (const auto& r : reps) out.push_back(io::to_json(f(r)));
    return out;
}

int cmd_coh_sb(const CohArgs& a) {
    if (a.action == "extract") {
        SkewBrace e = load_brace(a.ext);
        SbExtension x = sb_extension_from_ideal(e, parse_subset(a.ideal, e.order()));
        ElementMap s = canonical_section(x.projection, x.base.order());
        return emit({{"base", io::to_json(x.base)},
                     {"coeff", io::to_json(x.coeff)},
                     {"triplet", io::triplet_to_json(triplet_from_extension(x, s))},
                     {"cocycle", io::to_json(sb_cocycle_from_extension(x, s))}});
    }
    ActionTriplet t = sb_context(a);
    if (a.action == "classes") {
        ClassCount c = h2_sb(t);
        Json report = counts_json(c);
        report["representatives"] = representatives<SbCochain>(c.representatives, [&](const auto& v) { return sb_from_slots(t, v); });
        return emit(report);
    }
    SbCochain c = io::sb_cochain_from_json(load_source(a.cocycle), t);
    if (a.action == "check") {
        Verdict v = is_sb_cocycle(t, c);
        std::optional<Json> theta;
        if (v)
            if (auto th = is_sb_coboundary(t, c)) theta = io::to_json(*th);
        return coh_check(v, theta);
    }
    SbExtension e = extension_from_sb_cocycle(t, c);
    return emit_object(io::to_json(e.total), a.out, {{"order", e.total.order()}, {"written", a.out}});
}

int cmd_coh_rb(const CohArgs& a) {
    if (a.action == "extract") {
        RBOperator e = io::rb_from_json(load_source(a.ext));
        RbExtension x = rb_extension_from_ideal(e, parse_subset(a.ideal, e.group.order()));
        ElementMap s = canonical_section(x.projection, x.base.group.order());
        return emit({{"base", io::to_json(x.base)},
                     {"module", io::rb_module_to_json(rb_module_from_extension(x, s))},
                     {"cocycle", io::to_json(rb_cocycle_from_extension(x, s))}});
    }
    RBModule m = rb_context(a);
    if (a.action == "classes") {
        ClassCount c = h2_rb(m);
        Json report = counts_json(c);
        report["representatives"] = representatives<RbCochain>(c.representatives, [&](const auto& v) { return rb_from_slots(m, v); });
        return emit(report);
    }
    RbCochain c = io::rb_cochain_from_json(load_source(a.cocycle), m);
    if (a.action == "check") {
        Verdict v = is_rb_cocycle(m, c);
        std::optional<Json> theta;
        if (v)
            if (auto th = is_rb_coboundary(m, c)) theta = io::to_json(*th);
        return coh_check(v, theta);
    }
    RbExtension e = extension_from_rb_cocycle(m, c);
    return emit_object(io::to_json(e.total), a.out, {{"order", e.total.group.order()}, {"written", a.out}});
}

int cmd_coh_rrb(const CohArgs& a) {
    if (a.action == "extract") {
        RRBGroup e = load_rrb(a.ext);
        RrbExtension x = rrb_extension_from_ideal(e, parse_subset(a.ideal, e.h.order()), parse_subset(a.ideal_g, e.g.order()));
        ElementMap sh = canonical_section(x.proj_h, x.base.h.order());
        ElementMap sg = canonical_section(x.proj_g, x.base.g.order());
        return emit({{"base", io::to_json(x.base)},
                     {"module", io::rrb_module_to_json(rrb_module_from_extension(x, sh, sg))},
                     {"cocycle", io::to_json(rrb_cocycle_from_extension(x, sh, sg))}});
    }
    RRBModule m = rrb_context(a);
    if (a.action == "classes") {
        ClassCount c = h2_rrb(m);
        Json report = counts_json(c);
        report["representatives"] = representatives<RrbCochain>(c.representatives, [&](const auto& v) { return rrb_from_slots(m, v); });
        return emit(report);
    }
    RrbCochain c = io::rrb_cochain_from_json(load_source(a.cocycle), m);
    if (a.action == "check") {
        Verdict v = is_rrb_cocycle(m, c);
        std::optional<Json> kappa;
        if (v)
            if (auto k = is_rrb_coboundary(m, c)) kappa = Json{io::to_json(k->first), io::to_json(k->second)};
        return coh_check(v, kappa);
    }
    RrbExtension e = extension_from_rrb_cocycle(m, c);
    return emit_object(io::to_json(e.total), a.out, {{"order", {e.total.h.order(), e.total.g.order()}}, {"written", a.out}});
}

int cmd_coh(const CohArgs& a) {
    if (a.action != "check" && a.action != "classes" && a.action != "extend" && a.action != "extract")
        fail(ErrorCode::InvalidInput, "unknown action " + a.action);
    if ((a.action == "check" || a.action == "extend") && a.cocycle.empty())
        fail(ErrorCode::InvalidInput, "--cocycle is required");
    if (a.action == "extract" && (a.ext.empty() || a.ideal.empty()))
        fail(ErrorCode::InvalidInput, "--ext and --ideal are required");
    if (a.theory == "sb") return cmd_coh_sb(a);
    if (a.theory == "rb") return cmd_coh_rb(a);
    if (a.theory == "rrb") {
        if (a.action == "extract" && a.ideal_g.empty()) fail(ErrorCode::InvalidInput, "--ideal-g is required");
        return cmd_coh_rrb(a);
    }
    fail(ErrorCode::InvalidInput, "unknown theory " + a.theory);
}

// ---- diagram ----

struct DiagramArgs {
    std::string brace, coeff, triplet, cocycle;
    bool all = false;
    int sample = 0;
};

Json class_counts(const DiagramInstance& inst) {
    Json out;
    auto count = [&](const char* name, auto&& f) {
        try {
            out[name] = counts_json(f());
        } catch (const AlgebraError& e) {
            if (e.code() != ErrorCode::SearchTooLarge) throw;
            out[name] = "skipped";
        }
    };
    count("rrb", [&] { return h2_rrb(inst.rrb); });
    count("rb", [&] { return h2_rb(inst.rb); });
    count("sb", [&] { return h2_sb(inst.triplet); });
    count("sb_square", [&] { return h2_sb(inst.square_triplet); });
    return out;
}

int cmd_diagram(const DiagramArgs& a, std::uint64_t seed) {
    SkewBrace b = load_brace(a.brace);
    FiniteGroup i = load_group(a.coeff);
    ActionTriplet t = a.triplet.empty() ? trivial_triplet(b, i) : io::triplet_from_json(load_source(a.triplet), b, i);
    DiagramInstance inst = make_diagram_instance(t);

    std::vector<RrbCochain> cocycles;
    if (!a.cocycle.empty()) {
        cocycles.push_back(io::rrb_cochain_from_json(load_source(a.cocycle), inst.rrb));
    } else if (a.sample > 0) {
        auto z = rrb_cocycle_map(inst.rrb);
        if (!z) fail(ErrorCode::InvalidInput, "sampling needs elementary abelian coefficients");
        std::mt19937_64 rng(seed);
        for (int k = 0; k < a.sample; ++k) cocycles.push_back(rrb_from_slots(inst.rrb, z->random_kernel_element(rng)));
    } else {
        for_each_assignment(rrb_slots(inst.rrb), kSearchBound, [&](const std::vector<Elem>& v) {
            RrbCochain c = rrb_from_slots(inst.rrb, v);
            if (is_rrb_cocycle(inst.rrb, c)) cocycles.push_back(c);
        });
    }

    Json counts = class_counts(inst);
    Json results = Json::array();
    bool all_commute = true;
    for (const auto& c : cocycles) {
        Json r = {{"class_counts", counts}};
        try {
            DiagramResult d = diagram_check(inst, c);
            r["commutes"] = true;
            r["witness"] = d.witness;
            r["theta"] = d.theta.values;
        } catch (const AlgebraError& e) {
            if (e.code() != ErrorCode::DiagramFails && e.code() != ErrorCode::NotCocycle) throw;
            all_commute = false;
            r["commutes"] = false;
            r["error"] = error_name(e.code());
            r["witness"] = e.what();
        }
        results.push_back(r);
    }
    return emit({{"results", results}, {"commutes", all_commute}}, all_commute ? kOk : kFails);
}

// ---- isoclinism ----

Json hypothesis_json(const SkewBrace& b) {
    try {
        return square_annihilator_hypothesis(b);
    } catch (const AlgebraError& e) {
        if (e.code() != ErrorCode::OrderTooLarge) throw;
        return "skipped";
    }
}

int cmd_isoclinism(const std::string& sa, const std::string& sb_, bool squares) {
    SkewBrace a = load_brace(sa), b = load_brace(sb_);
    auto w = find_isoclinism(a, b);
    Json ha = hypothesis_json(a), hb = hypothesis_json(b);
    Json report = {{"isoclinic", w.has_value()}, {"square_hypothesis", {ha, hb}}, {"squares_isoclinic", "skipped"}};
    report["witness"] = w ? Json{{"xi1", w->xi1.values}, {"xi2", w->xi2.values}} : Json(nullptr);
    if (squares && w && ha == true && hb == true) {
        IsoclinismWitness lifted = square_isoclinism(a, b, *w);
        report["squares_isoclinic"] = true;
        report["square_witness"] = {{"xi1", lifted.xi1.values}, {"xi2", lifted.xi2.values}};
    }
    return emit(report, w ? kOk : kFails);
}

// ---- catalog / acceptance ----

int cmd_catalog_list() {
    Json list = Json::array();
    for (const auto& e : catalog()) list.push_back({{"name", e.name}, {"kind", e.kind}, {"order", e.payload.at("order")}});
    return emit(list);
}

int cmd_catalog_show(const std::string& name) { return emit(catalog_entry(name).payload); }

int cmd_acceptance(int criterion, int threads) {
    acceptance::Options opt;
    opt.seed = acceptance::seed_from_env();
    opt.threads = threads;
    std::vector<acceptance::CriterionResult> results;
    if (criterion > 0)
        results.push_back(acceptance::run_criterion(criterion, opt));
    else
        results = acceptance::run_all(opt);
    Json list = Json::array();
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed;
        list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        std::cerr << "criterion " << r.id << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.seconds << " s)\n";
    }
    return emit({{"seed", opt.seed}, {"criteria", list}, {"passed", ok}}, ok ? kOk : kFails);
}

int exit_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SearchTooLarge:
        case ErrorCode::OrderTooLarge:
            return kBound;
        case ErrorCode::InternalDefect:
            return kFails;
        default:
            return kInvalid;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite skew braces, Rota-Baxter groups and their cohomology"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "Worker threads for acceptance runs")->check(CLI::PositiveNumber);

    std::string source, other, out, name;
    bool square = false, squares = false;
    int criterion = 0;
    std::function<int()> action;

    auto* validate = app.add_subcommand("validate", "Validate a group, brace, RB, RRB or solution file");
    validate->add_option("source", source)->required();
    validate->callback([&] { action = [&] { return cmd_validate(source); }; });

    auto* lambda = app.add_subcommand("lambda", "Print the lambda table of a brace");
    lambda->add_option("brace", source)->required();
    lambda->callback([&] { action = [&] { return cmd_lambda(source); }; });

    auto* sq = app.add_subcommand("square", "Square of a brace");
    sq->add_option("brace", source)->required();
    sq->add_option("-o,--output", out);
    sq->callback([&] { action = [&] { return cmd_square(source, out); }; });

    auto* dbl = app.add_subcommand("double", "Double of a brace");
    dbl->add_option("brace", source)->required();
    dbl->add_option("-o,--output", out);
    dbl->callback([&] { action = [&] { return cmd_double(source, out); }; });

    auto* svd = app.add_subcommand("square-vs-double", "Compare the square with the double");
    svd->add_option("brace", source)->required();
    svd->callback([&] { action = [&] { return cmd_square_vs_double(source); }; });

    auto* rb = app.add_subcommand("rb", "Rota-Baxter operators");
    rb->require_subcommand(1);
    auto* rb_enum = rb->add_subcommand("enumerate", "All RB operators on a group");
    rb_enum->add_option("group", source)->required();
    rb_enum->callback([&] { action = [&] { return cmd_rb_enumerate(source); }; });
    auto* rb_val = rb->add_subcommand("validate", "Validate an RB file");
    rb_val->add_option("rb", source)->required();
    rb_val->callback([&] { action = [&] { return cmd_rb_validate(source); }; });

    auto* rrb = app.add_subcommand("rrb", "Relative Rota-Baxter groups");
    rrb->require_subcommand(1);
    auto* rrb_val = rrb->add_subcommand("validate", "Validate an RRB file");
    rrb_val->add_option("rrb", source)->required();
    rrb_val->callback([&] { action = [&] { return cmd_rrb_validate(source); }; });
    auto* rrb_semi = rrb->add_subcommand("semidirect", "RB operator on the semidirect product");
    rrb_semi->add_option("rrb", source, "RRB file or brace")->required();
    rrb_semi->add_option("-o,--output", out);
    rrb_semi->callback([&] { action = [&] { return cmd_rrb_semidirect(source, out); }; });

    auto* ybe = app.add_subcommand("ybe", "Yang-Baxter solutions");
    ybe->require_subcommand(1);
    auto* ybe_check = ybe->add_subcommand("check", "Check a solution file or the solution of a brace");
    ybe_check->add_option("source", source)->required();
    ybe_check->add_flag("--square", square, "Use the solution of the square");
    ybe_check->add_option("-o,--output", out, "Write the solution file");
    ybe_check->callback([&] { action = [&] { return cmd_ybe_check(source, square, out); }; });

    CohArgs coh_args;
    auto* coh = app.add_subcommand("coh", "Second cohomology: coh {sb|rb|rrb} {check|classes|extend|extract}");
    coh->add_option("theory", coh_args.theory)->required()->check(CLI::IsMember({"sb", "rb", "rrb"}));
    coh->add_option("action", coh_args.action)->required()->check(CLI::IsMember({"check", "classes", "extend", "extract"}));
    coh->add_option("--base", coh_args.base, "Brace (sb), RB file or group (rb), RRB file or brace (rrb)");
    coh->add_option("--coeff", coh_args.coeff, "Coefficient group; trivial module data");
    coh->add_option("--module,--triplet", coh_args.module, "Triplet (sb) or module file (rb, rrb)");
    coh->add_option("--ri", coh_args.ri, "Operator on the coefficients (rb), default zero");
    coh->add_option("--cocycle", coh_args.cocycle);
    coh->add_option("--ext", coh_args.ext, "Extension: brace (sb), RB file (rb), RRB file or brace (rrb)");
    coh->add_option("--ideal", coh_args.ideal, "Kernel elements, e.g. 0,2");
    coh->add_option("--ideal-g", coh_args.ideal_g, "Kernel elements on the second group (rrb)");
    coh->add_option("-o,--output", coh_args.out);
    coh->callback([&] { action = [&] { return cmd_coh(coh_args); }; });

    DiagramArgs diag;
    auto* dg = app.add_subcommand("diagram-check", "Check that the square of cohomology maps commutes");
    dg->add_option("--brace", diag.brace)->required();
    dg->add_option("--coeff", diag.coeff)->required();
    dg->add_option("--triplet", diag.triplet);
    auto* all = dg->add_flag("--all", diag.all, "Every cocycle (default)");
    auto* one = dg->add_option("--cocycle", diag.cocycle);
    auto* sample = dg->add_option("--sample", diag.sample, "Random cocycles seeded by ACCEPT_SEED");
    all->excludes(one)->excludes(sample);
    one->excludes(sample);
    dg->callback([&] { action = [&] { return cmd_diagram(diag, acceptance::seed_from_env()); }; });

    auto* iso = app.add_subcommand("isoclinism", "Isoclinism of two braces");
    iso->add_option("a", source)->required();
    iso->add_option("b", other)->required();
    iso->add_flag("--squares", squares, "Also lift the witness to the squares");
    iso->callback([&] { action = [&] { return cmd_isoclinism(source, other, squares); }; });

    auto* cat = app.add_subcommand("catalog", "Bundled objects");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list");
    cat_list->callback([&] { action = [&] { return cmd_catalog_list(); }; });
    auto* cat_show = cat->add_subcommand("show");
    cat_show->add_option("name", name)->required();
    cat_show->callback([&] { action = [&] { return cmd_catalog_show(name); }; });

    auto* acc = app.add_subcommand("acceptance", "Acceptance criteria");
    acc->require_subcommand(1);
    auto* acc_run = acc->add_subcommand("run");
    acc_run->add_option("--criterion", criterion)->check(CLI::Range(1, acceptance::kCriteria));
    acc_run->callback([&] { action = [&] { return cmd_acceptance(criterion, threads); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }
    try {
        return action();
    } catch (const AlgebraError& e) {
        std::cerr << e.what() << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
