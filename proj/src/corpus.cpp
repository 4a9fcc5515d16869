#include "hamcheck/corpus.hpp"

#include <algorithm>
#include <utility>

namespace hamcheck {

namespace {
#include "corpus_data.inc"
}  // namespace

const char* compat_outcome_name(CompatOutcome o) {
    switch (o) {
        case CompatOutcome::Pass: return "pass";
        case CompatOutcome::Fail: return "fail";
        case CompatOutcome::NotHamiltonian: return "operator-not-hamiltonian";
        case CompatOutcome::InputError: return "input-error";
    }
    return "?";
}

CheckReport check_problem_compat(const ProblemFile& pf, const CompatOptions& opts) {
    return std::visit(
        [&](const auto& op) -> CheckReport {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, DubrovinNovikov>)
                return check_local_compatibility(pf.sys, op, opts);
            else if constexpr (std::is_same_v<T, Ferapontov>)
                return check_ferapontov_compatibility(pf.sys, op, opts);
            else
                return check_fm_compatibility(pf.sys, op, pf.fm_w, opts);
        },
        pf.op);
}

namespace {

CorpusExpectation expect_for(const std::string& name) {
    if (name == "astigmatism_Q") return {true, CompatOutcome::Pass, {}, true};
    if (name == "astigmatism_P") return {true, CompatOutcome::Pass, {}, true};
    if (name == "chaplygin_FM") return {true, CompatOutcome::Pass, {}, true};
    if (name == "exam1_A") return {true, CompatOutcome::Pass, {}, true};
    if (name == "exam1_B") return {true, CompatOutcome::Pass, {}, true};
    if (name == "astigmatism_Q_perturbed")
        return {true, CompatOutcome::Fail, {"w-killing", "w-x-derivative"}, false};
    if (name == "astigmatism_P_wrongf")
        return {false, CompatOutcome::NotHamiltonian, {}, false};
    if (name == "chaplygin_FM_xdep")
        return {true, CompatOutcome::Fail, {"phi-symmetry"}, false};
    if (name == "chaplygin_FM_wrongc")
        return {false, CompatOutcome::NotHamiltonian, {}, false};
    if (name == "degenerate_metric")
        return {std::nullopt, CompatOutcome::InputError, {}, std::nullopt};
    throw Error("no expectation registered for fixture '" + name + "'");
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        for (const auto& [name, json] : kEmbeddedFixtures)
            out.push_back(CorpusEntry{name, json, expect_for(name)});
        if (out.empty()) throw Error("bundled corpus is empty");
        std::sort(out.begin(), out.end(),
                  [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
        return out;
    }();
    return entries;
}

FixtureOutcome run_fixture(const CorpusEntry& entry) {
    FixtureOutcome out;
    out.name = entry.name;
    const CorpusExpectation& exp = entry.expect;

    ProblemFile pf = [&] {
        try {
            return ProblemFile::parse(entry.json, entry.name);
        } catch (const InputError& e) {
            out.compat_outcome = CompatOutcome::InputError;
            throw;
        }
    }();

    try {
        CheckReport op_report = check_hamiltonian(pf.op);
        out.op_pass = op_report.passed();
    } catch (const InputError&) {
        out.op_pass = std::nullopt;  // e.g. degenerate metric
    }

    if (out.op_pass.has_value()) {
        try {
            CheckReport compat = check_problem_compat(pf);
            out.compat_outcome = compat.passed() ? CompatOutcome::Pass : CompatOutcome::Fail;
            out.failing = compat.failing_conditions();
        } catch (const OperatorNotHamiltonian&) {
            out.compat_outcome = CompatOutcome::NotHamiltonian;
        } catch (const InputError&) {
            out.compat_outcome = CompatOutcome::InputError;
        }
    } else {
        out.compat_outcome = CompatOutcome::InputError;
    }

    if (out.op_pass.has_value()) {
        auto [ok, res] = oracle_check(pf.sys, pf.op, pf.fm_w);
        out.oracle_pass = ok;
        if (out.compat_outcome == CompatOutcome::Pass ||
            out.compat_outcome == CompatOutcome::Fail) {
            // For hamiltonian operators the geometric conditions and the
            // covering residual must agree.
            if (*out.op_pass)
                out.oracle_agrees = (out.compat_outcome == CompatOutcome::Pass) == ok;
        }
    }

    // Compare against expectations.
    if (out.op_pass != exp.operator_pass)
        out.deviations.push_back("operator verdict deviates");
    if (out.compat_outcome != exp.compat)
        out.deviations.push_back(std::string("compat outcome is ") +
                                 compat_outcome_name(out.compat_outcome) + ", expected " +
                                 compat_outcome_name(exp.compat));
    for (const auto& name : exp.must_fail) {
        if (std::find(out.failing.begin(), out.failing.end(), name) == out.failing.end())
            out.deviations.push_back("condition '" + name + "' was expected to fail");
    }
    if (exp.oracle_pass.has_value() && out.oracle_pass != exp.oracle_pass)
        out.deviations.push_back("oracle verdict deviates");
    if (out.oracle_agrees.has_value() && !*out.oracle_agrees)
        out.deviations.push_back("internal disagreement: conditions vs covering oracle");
    return out;
}

std::vector<FixtureOutcome> run_corpus() {
    std::vector<FixtureOutcome> out;
    for (const auto& entry : corpus()) out.push_back(run_fixture(entry));
    return out;
}

}  // namespace hamcheck
