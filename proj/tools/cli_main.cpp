// gcoalg: structure-constant computations for group coalgebras.
//
// Every subcommand prints one JSON report on stdout. Exit status: 0 when the
// property holds or the construction succeeded, 1 when a property fails (the
// report carries the witness), 2 on usage errors, unparsable input, or an
// inconclusive search.

#include <iostream>

#include <CLI11.hpp>

#include "gcoalg/io.hpp"

using namespace gcoalg;

namespace {

int emit(const json& payload, int exit_code) {
    std::cout << payload.dump(2) << std::endl;
    return exit_code;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "inconclusive";
    }
}

// accepts "Z<n>" or a path to a finite_group file
FiniteGroup parse_group_arg(Workspace& ws, const std::string& arg) {
    if (arg.size() > 1 && (arg[0] == 'Z' || arg[0] == 'z')) {
        bool digits = true;
        for (std::size_t i = 1; i < arg.size(); ++i) digits &= std::isdigit(arg[i]) != 0;
        if (digits) return FiniteGroup::cyclic(std::stoul(arg.substr(1)));
    }
    return ws.group(arg);
}

// accepts "k" (the ground coalgebra over --field) or a path
Coalgebra parse_coalgebra_arg(Workspace& ws, const std::string& arg, const std::string& field) {
    if (arg == "k") return Coalgebra::ground(Field::parse(field));
    return ws.coalgebra(arg);
}

struct Args {
    std::string input, comodule, coalgebra, action, factorset, group, data, cochain, left, right;
    std::string basepoint, other, field = "F3";
    std::size_t element = 0;
    std::uint64_t seed = 0;
};

int run_verify(Workspace& ws, const Args& a) {
    try {
        GroupCoalgebra c = ws.group_coalgebra(a.input);
        (void)c;
        return emit({{"command", "verify"}, {"ok", true}, {"report", report_to_json({})}}, 0);
    } catch (const ValidationError& e) {
        return emit({{"command", "verify"}, {"ok", false}, {"report", report_to_json(e.report)}},
                    1);
    }
}

int run_strong(Workspace& ws, const Args& a) {
    GroupCoalgebra c = ws.group_coalgebra(a.input);
    StrongResult r = is_strong(c);
    json out = {{"command", "strong"}, {"strong", r.strong}, {"witnesses", r.witnesses}};
    return emit(out, r.strong ? 0 : 1);
}

int run_dual(Workspace& ws, const Args& a) {
    GroupCoalgebra c = ws.group_coalgebra(a.input);
    GradedDualAlgebra r = dual_graded_algebra(c);
    return emit({{"command", "dual"}, {"ok", true}, {"algebra", graded_dual_to_json(r)}}, 0);
}

int run_suspend(Workspace& ws, const Args& a) {
    GroupCoalgebra c = ws.group_coalgebra(a.input);
    if (a.element >= c.group.order()) throw ParseError("element index out of range");
    GComodule m = suspension(c, a.element);
    return emit({{"command", "suspend"},
                 {"ok", true},
                 {"element", a.element},
                 {"comodule", g_comodule_to_json(c, m)}},
                0);
}

int run_smash_build(Workspace& ws, const Args& a) {
    GroupCoalgebra c = ws.group_coalgebra(a.input);
    return emit({{"command", "smash-build"},
                 {"ok", true},
                 {"coalgebra", group_coalgebra_to_json(build_smash(c))}},
                0);
}

int run_smash_to(Workspace& ws, const Args& a) {
    GroupCoalgebra base = ws.group_coalgebra(a.input);
    GComodule m = ws.g_comodule(a.comodule, base);
    SmashComodule sm = to_smash_comodule(base, m);
    return emit({{"command", "smash-to"},
                 {"ok", true},
                 {"comodule", smash_comodule_to_json(base, sm, a.input)}},
                0);
}

int run_smash_from(Workspace& ws, const Args& a) {
    GroupCoalgebra base = ws.group_coalgebra(a.input);
    SmashComodule sm = ws.smash_comodule(a.comodule, base);
    try {
        GComodule m = from_smash_comodule(base, sm);
        return emit({{"command", "smash-from"},
                     {"ok", true},
                     {"comodule", g_comodule_to_json(base, m)}},
                    0);
    } catch (const NotGradable& e) {
        return emit({{"command", "smash-from"}, {"ok", false}, {"error", e.what()}}, 1);
    } catch (const SupportViolation& e) {
        return emit({{"command", "smash-from"}, {"ok", false}, {"error", e.what()}}, 1);
    }
}

int run_crossed_build(Workspace& ws, const Args& a) {
    Coalgebra c = ws.coalgebra(a.coalgebra);
    FiniteGroup g = parse_group_arg(ws, a.group);
    WeakAction action = ws.weak_action(a.action, c);
    FactorSet fset = ws.factor_set(a.factorset, c, g);
    Report validation = validate_crossed_data(c, g, action, fset);
    if (!validation.ok())
        return emit({{"command", "crossed-build"},
                     {"ok", false},
                     {"report", report_to_json(validation)}},
                    1);
    GroupCoalgebra crossed = build_crossed(c, g, action, fset);
    return emit({{"command", "crossed-build"},
                 {"ok", true},
                 {"coalgebra", group_coalgebra_to_json(crossed)}},
                0);
}

int run_crossed_normalize(Workspace& ws, const Args& a) {
    Coalgebra c = ws.coalgebra(a.coalgebra);
    FiniteGroup g = parse_group_arg(ws, a.group);
    WeakAction action = ws.weak_action(a.action, c);
    FactorSet fset = ws.factor_set(a.factorset, c, g);
    Report validation = validate_crossed_data(c, g, action, fset);
    if (!validation.ok())
        return emit({{"command", "crossed-normalize"},
                     {"ok", false},
                     {"report", report_to_json(validation)}},
                    1);
    NormalizedCrossed n = normalize_factor_set(c, g, action, fset);
    json iso = json::object();
    for (std::size_t i = 0; i < n.iso.size(); ++i) iso[std::to_string(i)] = matrix_to_flat(n.iso[i]);
    return emit({{"command", "crossed-normalize"},
                 {"ok", true},
                 {"action", weak_action_to_json(c, n.action)},
                 {"factorset", factor_set_to_json(c, g, n.fset)},
                 {"iso", iso},
                 {"coalgebra", group_coalgebra_to_json(n.after)}},
                0);
}

int run_cocleft_decide(Workspace& ws, const Args& a) {
    GroupCoalgebra c = ws.group_coalgebra(a.input);
    SearchPolicy policy;
    policy.seed = a.seed;
    CocleftDecision d = is_cocleft(c, policy);
    json out = {{"command", "cocleft-decide"},
                {"verdict", verdict_name(d.verdict)},
                {"cocleft", d.verdict == Verdict::yes},
                {"witnesses", d.witnesses},
                {"note", d.note}};
    if (d.witness) out["witness"] = cocleft_data_to_json(c, *d.witness);
    int code = d.verdict == Verdict::yes ? 0 : d.verdict == Verdict::no ? 1 : 2;
    return emit(out, code);
}

int run_cocleft_extract(Workspace& ws, const Args& a) {
    GroupCoalgebra c = ws.group_coalgebra(a.input);
    CocleftData d = ws.cocleft_data(a.data, c);
    CrossedExtraction ext = crossed_from_cocleft(c, d);
    Coalgebra ce = component_e(c);
    json iso = json::object();
    for (std::size_t i = 0; i < ext.iso.size(); ++i)
        iso[std::to_string(i)] = matrix_to_flat(ext.iso[i]);
    return emit({{"command", "cocleft-extract"},
                 {"ok", true},
                 {"action", weak_action_to_json(ce, ext.action)},
                 {"factorset", factor_set_to_json(ce, c.group, ext.fset)},
                 {"iso", iso},
                 {"crossed", group_coalgebra_to_json(ext.crossed)}},
                0);
}

int run_cohomology_z2check(Workspace& ws, const Args& a) {
    Coalgebra c = parse_coalgebra_arg(ws, a.coalgebra, a.field);
    FiniteGroup g = parse_group_arg(ws, a.group);
    WeakAction action = a.action.empty() ? WeakAction::trivial(c, g) : ws.weak_action(a.action, c);
    GModuleAlgebra m = g_module_algebra(c, g, action);
    TwoCochain f = ws.two_cochain(a.cochain, c, g);
    Report r = is_2cocycle(m, f);
    return emit({{"command", "cohomology-z2-check"},
                 {"ok", r.ok()},
                 {"report", report_to_json(r)}},
                r.ok() ? 0 : 1);
}

int run_cohomology_classify(Workspace& ws, const Args& a) {
    Coalgebra c = parse_coalgebra_arg(ws, a.coalgebra, a.field);
    FiniteGroup g = parse_group_arg(ws, a.group);
    WeakAction action = a.action.empty() ? WeakAction::trivial(c, g) : ws.weak_action(a.action, c);
    GModuleAlgebra m = g_module_algebra(c, g, action);
    Classification cls = classify_h2(m);
    json classes = json::array();
    json representatives = json::array();
    for (const auto& indices : cls.classes) {
        classes.push_back(indices);
        representatives.push_back(two_cochain_to_json(c, g, cls.cocycles[indices.front()]));
    }
    return emit({{"command", "cohomology-classify"},
                 {"ok", true},
                 {"z2_count", cls.cocycles.size()},
                 {"b2_count", cls.coboundary_count},
                 {"h2_count", cls.classes.size()},
                 {"z1_count", cls.one_cocycles.size()},
                 {"b1_count", cls.one_coboundary_count},
                 {"classes", classes},
                 {"representatives", representatives}},
                0);
}

int run_cohomology_omega(Workspace& ws, const Args& a) {
    GroupCoalgebra c = ws.group_coalgebra(a.input);
    std::vector<Matrix> u0 = ws.dual_family(a.basepoint, c);
    Report basepoint_check = verify_kg_morphism(c, u0);
    if (!basepoint_check.ok())
        return emit({{"command", "cohomology-omega"},
                     {"ok", false},
                     {"report", report_to_json(basepoint_check)}},
                    1);
    SearchPolicy policy;
    policy.seed = a.seed;
    if (!a.other.empty()) {
        std::vector<Matrix> u1 = ws.dual_family(a.other, c);
        OmegaEquivalenceResult r = omega_equivalence(c, u0, u1, policy);
        json out = {{"command", "cohomology-omega"},
                    {"verdict", verdict_name(r.verdict)},
                    {"equivalent", r.verdict == Verdict::yes}};
        if (r.witness) out["witness"] = matrix_to_flat(*r.witness);
        int code = r.verdict == Verdict::yes ? 0 : r.verdict == Verdict::no ? 1 : 2;
        return emit(out, code);
    }
    auto omega = enumerate_kg_morphisms(c);
    std::vector<bool> used(omega.size(), false);
    json classes = json::array(), families = json::array();
    for (std::size_t i = 0; i < omega.size(); ++i)
        families.push_back(dual_family_to_json(c, omega[i]));
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (used[i]) continue;
        json cls = json::array();
        for (std::size_t j = i; j < omega.size(); ++j) {
            if (used[j]) continue;
            if (omega_equivalence(c, omega[i], omega[j], policy).verdict == Verdict::yes) {
                cls.push_back(j);
                used[j] = true;
            }
        }
        classes.push_back(cls);
    }
    return emit({{"command", "cohomology-omega"},
                 {"ok", true},
                 {"omega_count", omega.size()},
                 {"classes", classes},
                 {"families", families}},
                0);
}

int run_cohomology_cohomologous(Workspace& ws, const Args& a) {
    Coalgebra c = parse_coalgebra_arg(ws, a.coalgebra, a.field);
    FiniteGroup g = parse_group_arg(ws, a.group);
    WeakAction action = a.action.empty() ? WeakAction::trivial(c, g) : ws.weak_action(a.action, c);
    GModuleAlgebra m = g_module_algebra(c, g, action);
    TwoCochain f = ws.two_cochain(a.left, c, g);
    TwoCochain f2 = ws.two_cochain(a.right, c, g);
    CohomologousResult r = cohomologous(m, f, f2);
    json out = {{"command", "cohomology-cohomologous"},
                {"verdict", verdict_name(r.verdict)},
                {"equal_class", r.verdict == Verdict::yes}};
    if (r.witness) out["witness"] = one_cochain_to_json(c, g, *r.witness);
    int code = r.verdict == Verdict::yes ? 0 : r.verdict == Verdict::no ? 1 : 2;
    return emit(out, code);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure-constant computations for group coalgebras"};
    app.require_subcommand(1);
    Args args;
    Workspace ws;

    auto* verify = app.add_subcommand("verify", "check the G-coalgebra axioms");
    verify->add_option("input", args.input)->required();

    auto* strong = app.add_subcommand("strong", "decide strongness with witnesses");
    strong->add_option("input", args.input)->required();

    auto* dual = app.add_subcommand("dual", "dual graded algebra and strong grading");
    dual->add_option("input", args.input)->required();

    auto* suspend = app.add_subcommand("suspend", "sigma-suspension as a group comodule");
    suspend->add_option("input", args.input)->required();
    suspend->add_option("--element", args.element)->required();

    auto* smash = app.add_subcommand("smash", "smash coproduct constructions");
    smash->require_subcommand(1);
    auto* smash_build = smash->add_subcommand("build", "build the smash coproduct");
    smash_build->add_option("input", args.input)->required();
    auto* smash_to = smash->add_subcommand("to", "group comodule -> smash comodule");
    smash_to->add_option("--base", args.input)->required();
    smash_to->add_option("--comodule", args.comodule)->required();
    auto* smash_from = smash->add_subcommand("from", "smash comodule -> group comodule");
    smash_from->add_option("--base", args.input)->required();
    smash_from->add_option("--comodule", args.comodule)->required();

    auto* crossed = app.add_subcommand("crossed", "crossed coproduct constructions");
    crossed->require_subcommand(1);
    auto* crossed_build = crossed->add_subcommand("build", "build a crossed coproduct");
    auto* crossed_normalize = crossed->add_subcommand("normalize", "normalize a factor set");
    for (auto* sub : {crossed_build, crossed_normalize}) {
        sub->add_option("--coalgebra", args.coalgebra)->required();
        sub->add_option("--action", args.action)->required();
        sub->add_option("--factorset", args.factorset)->required();
        sub->add_option("--group", args.group)->required();
    }

    auto* cocleft = app.add_subcommand("cocleft", "cocleftness decisions");
    cocleft->require_subcommand(1);
    auto* cocleft_decide = cocleft->add_subcommand("decide", "decide cocleftness");
    cocleft_decide->add_option("--input", args.input)->required();
    cocleft_decide->add_option("--seed", args.seed);
    auto* cocleft_extract = cocleft->add_subcommand("extract", "crossed data from cocleft data");
    cocleft_extract->add_option("--input", args.input)->required();
    cocleft_extract->add_option("--data", args.data)->required();

    auto* coh = app.add_subcommand("cohomology", "group cohomology over the convolution algebra");
    coh->require_subcommand(1);
    auto* z2check = coh->add_subcommand("z2-check", "2-cocycle condition");
    z2check->add_option("--coalgebra", args.coalgebra)->required();
    z2check->add_option("--group", args.group)->required();
    z2check->add_option("--action", args.action);
    z2check->add_option("--cochain", args.cochain)->required();
    z2check->add_option("--field", args.field);
    auto* classify = coh->add_subcommand("classify", "exhaustive H^1/H^2 classification");
    classify->add_option("--coalgebra", args.coalgebra)->required();
    classify->add_option("--group", args.group)->required();
    classify->add_option("--action", args.action);
    classify->add_option("--field", args.field);
    auto* omega = coh->add_subcommand("omega", "morphism families to k<G> up to equivalence");
    omega->add_option("--input", args.input)->required();
    omega->add_option("--basepoint", args.basepoint)->required();
    omega->add_option("--other", args.other);
    omega->add_option("--seed", args.seed);
    auto* cohomologous_cmd = coh->add_subcommand("cohomologous", "same class in H^2");
    cohomologous_cmd->add_option("--coalgebra", args.coalgebra)->required();
    cohomologous_cmd->add_option("--group", args.group)->required();
    cohomologous_cmd->add_option("--action", args.action);
    cohomologous_cmd->add_option("--left", args.left)->required();
    cohomologous_cmd->add_option("--right", args.right)->required();
    cohomologous_cmd->add_option("--field", args.field);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(ws, args);
        if (strong->parsed()) return run_strong(ws, args);
        if (dual->parsed()) return run_dual(ws, args);
        if (suspend->parsed()) return run_suspend(ws, args);
        if (smash_build->parsed()) return run_smash_build(ws, args);
        if (smash_to->parsed()) return run_smash_to(ws, args);
        if (smash_from->parsed()) return run_smash_from(ws, args);
        if (crossed_build->parsed()) return run_crossed_build(ws, args);
        if (crossed_normalize->parsed()) return run_crossed_normalize(ws, args);
        if (cocleft_decide->parsed()) return run_cocleft_decide(ws, args);
        if (cocleft_extract->parsed()) return run_cocleft_extract(ws, args);
        if (z2check->parsed()) return run_cohomology_z2check(ws, args);
        if (classify->parsed()) return run_cohomology_classify(ws, args);
        if (omega->parsed()) return run_cohomology_omega(ws, args);
        if (cohomologous_cmd->parsed()) return run_cohomology_cohomologous(ws, args);
    } catch (const ValidationError& e) {
        return emit({{"ok", false}, {"error", e.what()}, {"report", report_to_json(e.report)}}, 1);
    } catch (const InvalidCrossedData& e) {
        return emit({{"ok", false}, {"error", e.what()}}, 1);
    } catch (const PreconditionViolated& e) {
        return emit({{"ok", false}, {"error", e.what()}}, 1);
    } catch (const ParseError& e) {
        return emit({{"ok", false}, {"error", e.what()}}, 2);
    } catch (const ShapeMismatch& e) {
        return emit({{"ok", false}, {"error", e.what()}}, 2);
    } catch (const Error& e) {
        return emit({{"ok", false}, {"error", e.what()}}, 2);
    }
    return 2;
}
