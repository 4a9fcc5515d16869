#ifndef HAMCHECK_CORPUS_HPP
#define HAMCHECK_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hamcheck/problem.hpp"

namespace hamcheck {

enum class CompatOutcome { Pass, Fail, NotHamiltonian, InputError };
const char* compat_outcome_name(CompatOutcome o);

struct CorpusExpectation {
    std::optional<bool> operator_pass;      // empty: operator check is an input error
    CompatOutcome compat = CompatOutcome::Pass;
    std::vector<std::string> must_fail;     // names expected among failing conditions
    std::optional<bool> oracle_pass;        // empty: oracle not applicable
};

struct CorpusEntry {
    std::string name;
    std::string json;
    CorpusExpectation expect;
};

// Bundled fixtures (embedded at build time from fixtures/*.json) together
// with their expected verdicts.
const std::vector<CorpusEntry>& corpus();

struct FixtureOutcome {
    std::string name;
    std::vector<std::string> deviations;   // empty when expectations are met
    std::optional<bool> op_pass;
    CompatOutcome compat_outcome = CompatOutcome::InputError;
    std::vector<std::string> failing;
    std::optional<bool> oracle_pass;
    std::optional<bool> oracle_agrees;     // conditions verdict vs oracle verdict
    bool ok() const { return deviations.empty(); }
};

FixtureOutcome run_fixture(const CorpusEntry& entry);
std::vector<FixtureOutcome> run_corpus();

// Compatibility check dispatched on the problem's operator kind.
CheckReport check_problem_compat(const ProblemFile& pf, const CompatOptions& opts = {});

}  // namespace hamcheck

#endif
