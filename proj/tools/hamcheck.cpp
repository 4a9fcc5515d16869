#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "hamcheck/corpus.hpp"
#include "hamcheck/render.hpp"

using namespace hamcheck;

namespace {

bool use_color() {
    const char* env = std::getenv("HAMCHECK_COLOR");
    if (env && std::string(env) == "0") return false;
    return isatty(STDOUT_FILENO);
}

int exit_code_for(const CheckReport& report) {
    return report.passed() ? kExitPass : kExitConditionsFailed;
}

int cmd_check_operator(const std::string& path, bool as_json) {
    ProblemFile pf = ProblemFile::load(path);
    CheckReport report = check_hamiltonian(pf.op);
    if (as_json) {
        OrderedJson j;
        j["file"] = pf.name;
        j["operator"] = report_to_json(report);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << pf.name << "\n" << render_report_text(report, use_color());
    }
    return exit_code_for(report);
}

int cmd_check_compat(const std::string& path, bool with_oracle, bool as_json) {
    ProblemFile pf = ProblemFile::load(path);
    const bool color = use_color();

    CheckReport op_report = check_hamiltonian(pf.op);
    // Conditions are evaluated even when the precondition fails so that the
    // report stays diagnosable; the overall verdict still fails.
    CheckReport compat = check_problem_compat(pf, CompatOptions{false});
    const bool op_ok = op_report.passed();
    const bool compat_ok = compat.passed() && op_ok;

    std::optional<bool> oracle_ok;
    std::optional<ResidualSystem> residuals;
    std::string agreement = "not-run";
    if (with_oracle) {
        auto [ok, res] = oracle_check(pf.sys, pf.op, pf.fm_w);
        oracle_ok = ok;
        residuals = std::move(res);
        // The equivalence theorems assume a hamiltonian operator; agreement
        // is only meaningful under the precondition.
        agreement = !op_ok ? "not-applicable" : (compat.passed() == ok ? "agree" : "disagree");
    }

    int code = compat_ok ? kExitPass : kExitConditionsFailed;
    if (agreement == "disagree") code = kExitOracleDisagreement;

    if (as_json) {
        OrderedJson j;
        j["file"] = pf.name;
        j["operator"] = report_to_json(op_report);
        j["compatibility"] = report_to_json(compat);
        if (with_oracle) {
            j["oracle"] = residuals_to_json(*residuals);
            j["oracle"]["agreement"] = agreement;
        }
        j["overall"] = compat_ok ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << pf.name << "\n";
        std::cout << render_report_text(op_report, color);
        std::cout << render_report_text(compat, color);
        if (with_oracle) {
            std::cout << render_residuals_text(*residuals, color);
            std::cout << "oracle agreement: " << agreement << "\n";
        }
        std::cout << "overall: " << (compat_ok ? "PASS" : "FAIL") << "\n";
    }
    return code;
}

int cmd_oracle(const std::string& path, bool as_json) {
    ProblemFile pf = ProblemFile::load(path);
    auto [ok, res] = oracle_check(pf.sys, pf.op, pf.fm_w);
    if (as_json) {
        OrderedJson j;
        j["file"] = pf.name;
        j["oracle"] = residuals_to_json(res);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << pf.name << "\n" << render_residuals_text(res, use_color());
    }
    return ok ? kExitPass : kExitConditionsFailed;
}

int cmd_corpus(bool as_json) {
    std::vector<FixtureOutcome> outcomes = run_corpus();
    bool all_ok = true;
    bool disagreement = false;
    OrderedJson j = OrderedJson::array();
    for (const auto& o : outcomes) {
        all_ok = all_ok && o.ok();
        for (const auto& d : o.deviations)
            if (d.find("internal disagreement") != std::string::npos) disagreement = true;
        if (as_json) {
            OrderedJson je;
            je["name"] = o.name;
            je["ok"] = o.ok();
            je["operator"] =
                o.op_pass.has_value() ? (*o.op_pass ? "pass" : "fail") : "input-error";
            je["compat"] = compat_outcome_name(o.compat_outcome);
            je["failing"] = o.failing;
            if (o.oracle_pass.has_value()) je["oracle"] = *o.oracle_pass ? "pass" : "fail";
            je["deviations"] = o.deviations;
            j.push_back(std::move(je));
        } else {
            std::cout << (o.ok() ? "[ok]   " : "[BAD]  ") << o.name << "  (compat: "
                      << compat_outcome_name(o.compat_outcome);
            if (o.oracle_pass.has_value())
                std::cout << ", oracle: " << (*o.oracle_pass ? "pass" : "fail");
            std::cout << ")\n";
            for (const auto& d : o.deviations) std::cout << "       deviation: " << d << "\n";
        }
    }
    if (as_json) {
        OrderedJson top;
        top["fixtures"] = std::move(j);
        top["overall"] = all_ok ? "pass" : "fail";
        std::cout << top.dump(2) << "\n";
    } else {
        std::cout << "corpus: " << (all_ok ? "all expectations met" : "DEVIATIONS FOUND")
                  << "\n";
    }
    if (disagreement) return kExitOracleDisagreement;
    return all_ok ? kExitPass : kExitConditionsFailed;
}

int cmd_list_examples() {
    for (const auto& entry : corpus()) {
        ProblemFile pf = ProblemFile::parse(entry.json, entry.name);
        std::cout << entry.name << "\n    " << pf.provenance << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hamcheck - necessary-condition checks for Hamiltonian structures of\n"
        "quasilinear first-order PDE systems u_t = V(u) u_x + W(x, u), for local\n"
        "Dubrovin-Novikov operators and their Ferapontov / Ferapontov-Mokhov\n"
        "nonlocal extensions, cross-validated on the cotangent covering"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;
    bool with_oracle = false;

    CLI::App* op = app.add_subcommand("check-operator",
                                      "check the operator's hamiltonianity conditions");
    op->add_option("file", path, "problem file (JSON)")->required();
    op->add_flag("--json", as_json, "machine-readable output");

    CLI::App* compat = app.add_subcommand(
        "check-compat", "check system/operator compatibility conditions");
    compat->add_option("file", path, "problem file (JSON)")->required();
    compat->add_flag("--oracle", with_oracle, "also run the covering-residual oracle");
    compat->add_flag("--json", as_json, "machine-readable output");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "expand ell_F(A(p)) on the cotangent covering and collect residuals");
    oracle->add_option("file", path, "problem file (JSON)")->required();
    oracle->add_flag("--json", as_json, "machine-readable output");

    CLI::App* corpus_cmd =
        app.add_subcommand("corpus", "run every bundled fixture against its expected verdict");
    corpus_cmd->add_flag("--json", as_json, "machine-readable output");

    app.add_subcommand("list-examples", "list the bundled fixtures");

    CLI11_PARSE(app, argc, argv);

    try {
        if (op->parsed()) return cmd_check_operator(path, as_json);
        if (compat->parsed()) return cmd_check_compat(path, with_oracle, as_json);
        if (oracle->parsed()) return cmd_oracle(path, as_json);
        if (corpus_cmd->parsed()) return cmd_corpus(as_json);
        return cmd_list_examples();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
