// Command-line front end: reproducible runs over the graded-algebra engine.
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
// schema error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "colorsuper/algebra.hpp"
#include "colorsuper/diffop.hpp"
#include "colorsuper/enveloping.hpp"
#include "colorsuper/latex.hpp"
#include "colorsuper/report.hpp"
#include "colorsuper/representation.hpp"
#include "colorsuper/serialize.hpp"

using namespace colorsuper;

namespace {

void write_file(const std::string& path, const std::string& content, RunReport& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write artifact '" + path + "'");
    out << content;
    report.artifacts.push_back(path);
}

GradedAlgebra algebra_for(const std::string& preset, const std::vector<int>& dims) {
    if (preset == "ten") return preset_ten();
    if (preset == "eight") return preset_eight();
    if (preset == "gl") {
        if (dims.size() != 4) throw SchemaError("--dims must be m1,m2,n1,n2 for preset gl");
        return preset_gl(dims[0], dims[1], dims[2], dims[3]);
    }
    throw SchemaError("unknown preset '" + preset + "'");
}

void run_algebra_check(RunReport& report, const std::string& preset,
                       const std::vector<int>& dims) {
    report.inputs = json{{"preset", preset}};
    if (preset == "gl") report.inputs["dims"] = dims;
    GradedAlgebra alg = algebra_for(preset, dims);
    AlgebraValidation v = validate_algebra(alg);
    for (const auto& c : v.checks) report.add(c.name, c.pass, c.detail);
    report.result = json{{"generators", alg.size()},
                         {"triples_total", v.triples_total},
                         {"triples_zero", v.triples_zero}};
}

void run_casimir_solve(RunReport& report, const std::string& preset, std::vector<int> sector,
                       bool ordinary, const std::string& json_out) {
    if (sector.size() != 2 || sector[0] < 0 || sector[0] > 1 || sector[1] < 0 || sector[1] > 1) {
        throw SchemaError("--sector must be s1,s2 with bits 0 or 1");
    }
    report.inputs = json{{"preset", preset},
                         {"sector", sector},
                         {"definition", ordinary ? "ordinary" : "graded"}};
    GradedAlgebra alg = algebra_for(preset, {});
    Grading sec{sector[0], sector[1]};
    CasimirSolution sol = solve_casimir(alg, sec, ordinary);
    report.result = casimir_to_json(alg, sol);
    report.add("solver", true,
               std::to_string(sol.rays.size()) + " nontrivial ray(s); the constant is central");
    // self-check: every returned ray commutes with every generator
    bool central = true;
    for (const auto& ray : sol.rays) {
        EnvPoly p = env_from_rational(ray);
        for (int x = 0; x < alg.size(); ++x) {
            EnvPoly r = ordinary ? ordinary_commutator(alg, p, x) : graded_commutator(alg, p, x);
            if (!r.empty()) central = false;
        }
    }
    report.add("rays-central", central,
               ordinary ? "ordinary commutator with all generators vanishes"
                        : "graded commutator with all generators vanishes");
    if (!json_out.empty()) write_file(json_out, report.result.dump(2) + "\n", report);
}

void run_rep_build(RunReport& report, int ell, const std::string& latex_out,
                   const std::string& json_out) {
    report.inputs = json{{"preset", "ten"}, {"ell", ell}};
    Representation rep = build_rep_ten(ell);
    RepReport v = verify_rep(rep);
    report.add("dimension", rep.dimension() == 4 * ell + 2,
               std::to_string(rep.dimension()) + " states");
    report.add("relations", v.pass(),
               std::to_string(v.pairs_pass) + "/" + std::to_string(v.pairs_total) +
                   " bracket pairs exact");
    report.result = json{{"dimension", rep.dimension()}, {"ell", ell}};
    if (!json_out.empty()) write_file(json_out, rep_to_json(rep).dump(2) + "\n", report);
    if (!latex_out.empty()) write_file(latex_out, emit_latex(rep), report);
}

void run_rep_verify(RunReport& report, const std::string& input) {
    report.inputs = json{{"input", input}};
    std::ifstream in(input);
    if (!in) throw SchemaError("cannot read '" + input + "'");
    json doc = json::parse(in, nullptr, true);
    Representation rep = rep_from_json(doc);
    RepReport v = verify_rep(rep);
    for (const auto& c : v.checks) {
        if (!c.pass) report.add(c.name, false, c.detail);
    }
    report.add("relations", v.pairs_pass == v.pairs_total,
               std::to_string(v.pairs_pass) + "/" + std::to_string(v.pairs_total) +
                   " bracket pairs exact");
    report.result = json{{"dimension", rep.dimension()}, {"pass", v.pass()}};
}

void run_rep_compare(RunReport& report, int ell) {
    report.inputs = json{{"left", "built"}, {"right", "embedded"}, {"ell", ell}};
    if (ell != 2) throw SchemaError("embedded matrices exist only for ell = 2");
    Representation built = build_rep_ten(ell);
    Representation embedded = embedded_rep("ten");
    auto diffs = compare_reps(built, embedded);
    json jd = json::array();
    for (const auto& d : diffs) {
        jd.push_back(json{{"gen", d.gen},
                          {"row", d.row},
                          {"col", d.col},
                          {"expected", d.expected},
                          {"found", d.found}});
    }
    report.result = json{{"discrepancies", jd}};
    RepReport v = verify_rep(built);
    report.add("built-verifies", v.pass(),
               std::to_string(v.pairs_pass) + "/" + std::to_string(v.pairs_total) + " pairs");
    report.add("embedded-transcription-match", diffs.empty(),
               std::to_string(diffs.size()) + " differing entries");
}

void run_diffreal_verify(RunReport& report, const std::string& preset, int max_degree,
                         bool repair) {
    report.inputs = json{{"preset", preset}, {"max_degree", max_degree}, {"repair", repair}};
    VarContext ctx = VarContext::for_preset(preset);
    GradedAlgebra alg = algebra_for(preset, {});
    Realization real = printed_realization(preset);
    RealizationReport rr = verify_realization(ctx, alg, real, max_degree);
    json pairs = json::array();
    std::vector<std::string> flagged;
    for (const auto& p : rr.pairs) {
        pairs.push_back(json{{"left", p.left},
                             {"right", p.right},
                             {"status", p.pass() ? "pass" : "fail"},
                             {"residual", p.residual}});
        if (!p.pass()) {
            flagged.push_back(p.left);
            flagged.push_back(p.right);
        }
    }
    json unit = json::object();
    for (const auto& [name, action] : rr.action_on_unit) unit[name] = action;
    report.result = json{{"pairs", pairs},
                         {"action_on_unit", unit},
                         {"convention", "the constant polynomial is the lowest-weight vector: "
                                        "pure-derivative lowering operators annihilate it"}};
    int passed = 0;
    for (const auto& p : rr.pairs) passed += p.pass() ? 1 : 0;
    report.add("pairs", rr.pass(),
               std::to_string(passed) + "/" + std::to_string(rr.pairs.size()) +
                   " pairs match the structure constants");
    if (!repair) return;

    // repair whatever verification flagged; nothing flagged means nothing to do
    std::sort(flagged.begin(), flagged.end());
    flagged.erase(std::unique(flagged.begin(), flagged.end()), flagged.end());
    if (flagged.empty()) {
        report.add("repair", true, "no flagged generators; realization already consistent");
        return;
    }
    Realization tmpl = real;
    int next_id = 0;
    for (const auto& name : flagged) {
        tmpl.ops[name] = general_operator_ansatz(ctx, alg.grade(alg.index_of(name)), next_id);
    }
    RepairResult fix = repair_realization(ctx, alg, tmpl);
    RealizationReport rv = verify_realization(ctx, alg, fix.repaired, max_degree);
    json repaired = json::object();
    for (const auto& name : flagged) repaired[name] = op_str(fix.repaired.ops.at(name));
    report.result["repaired"] = repaired;
    report.result["repair_freedom"] = fix.freedom;
    report.add("repair", fix.freedom == 0 && rv.pass(),
               "solution-space dimension " + std::to_string(fix.freedom) + "; repaired " +
                   "realization passes " + std::to_string(rv.pairs.size()) + " pairs");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Z2xZ2-graded color superalgebra toolkit"};
    app.require_subcommand(1);

    std::string preset = "ten";
    std::vector<int> dims;
    std::vector<int> sector;
    bool ordinary = false;
    bool repair = false;
    bool from_built = false;
    bool against_embedded = false;
    int ell = 2;
    int max_degree = 4;
    std::string input, json_out, latex_out;

    auto* algebra = app.add_subcommand("algebra", "structure-constant table checks");
    auto* check = algebra->add_subcommand("check", "grading, antisymmetry and Jacobi sweep");
    check->add_option("--preset", preset, "ten|eight|gl")->required();
    check->add_option("--dims", dims, "m1,m2,n1,n2 for preset gl")->delimiter(',');

    auto* casimir = app.add_subcommand("casimir", "quadratic invariants");
    auto* solve = casimir->add_subcommand("solve", "nullspace of the centrality system");
    solve->add_option("--preset", preset, "ten|eight")->required();
    solve->add_option("--sector", sector, "s1,s2")->required()->delimiter(',');
    solve->add_flag("--ordinary", ordinary, "use the ordinary commutator instead of the graded one");
    solve->add_option("--json", json_out, "write the solution rays to this file");

    auto* rep = app.add_subcommand("rep", "highest-weight representations");
    auto* build = rep->add_subcommand("build", "construct the 4l+2 dimensional module");
    build->add_option("--preset", preset, "ten")->check(CLI::IsMember({"ten"}));
    build->add_option("--ell", ell, "highest weight")->required();
    build->add_option("--latex", latex_out, "write bmatrix blocks to this file");
    build->add_option("--json", json_out, "write the representation to this file");
    auto* verify = rep->add_subcommand("verify", "check a stored representation");
    verify->add_option("--input", input, "representation JSON")->required();
    auto* compare = rep->add_subcommand("compare", "built vs embedded matrices");
    compare->add_flag("--built", from_built, "left side: freshly built");
    compare->add_flag("--embedded", against_embedded, "right side: embedded data");
    compare->add_option("--ell", ell, "highest weight (embedded data exists for 2)");

    auto* diffreal = app.add_subcommand("diffreal", "differential-operator realizations");
    auto* dverify = diffreal->add_subcommand("verify", "pairwise bracket verification");
    dverify->add_option("--preset", preset, "ten|eight")->required();
    dverify->add_option("--max-degree", max_degree, "application-check degree bound");
    dverify->add_flag("--repair", repair, "solve for flagged coefficients");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return 2;
    }

    RunReport report;
    for (int i = 1; i < argc; ++i) report.command += std::string(i > 1 ? " " : "") + argv[i];
    try {
        if (check->parsed()) {
            run_algebra_check(report, preset, dims);
        } else if (solve->parsed()) {
            run_casimir_solve(report, preset, sector, ordinary, json_out);
        } else if (build->parsed()) {
            run_rep_build(report, ell, latex_out, json_out);
        } else if (verify->parsed()) {
            run_rep_verify(report, input);
        } else if (compare->parsed()) {
            if (!from_built || !against_embedded) {
                throw SchemaError("rep compare requires --built and --embedded");
            }
            run_rep_compare(report, ell);
        } else if (dverify->parsed()) {
            run_diffreal_verify(report, preset, max_degree, repair);
        } else {
            std::cerr << app.help() << "\n";
            return 2;
        }
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << report.dump();
    return report.exit_code();
}
