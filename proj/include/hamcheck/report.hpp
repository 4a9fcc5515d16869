#ifndef HAMCHECK_REPORT_HPP
#define HAMCHECK_REPORT_HPP

#include <string>
#include <vector>

#include "hamcheck/errors.hpp"

namespace hamcheck {

// One nonzero residual component, canonicalized, e.g. {"[1][2]", "-2*x"}.
struct ResidualEntry {
    std::string index;
    std::string value;
};

struct ConditionResult {
    std::string name;    // stable identifier, e.g. "tsarev-metric-symmetry"
    std::string anchor;  // the formula the condition evaluates
    std::vector<ResidualEntry> residuals;  // nonzero components only
    std::vector<std::string> notes;
    bool passed() const { return residuals.empty(); }
};

struct CheckReport {
    std::string subject;
    std::vector<ConditionResult> conditions;
    std::vector<std::string> warnings;
    bool passed() const {
        for (const auto& c : conditions)
            if (!c.passed()) return false;
        return true;
    }
    std::vector<std::string> failing_conditions() const {
        std::vector<std::string> out;
        for (const auto& c : conditions)
            if (!c.passed()) out.push_back(c.name);
        return out;
    }
    const ConditionResult* find(const std::string& name) const {
        for (const auto& c : conditions)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// Raised when a compatibility check's operator precondition fails; carries
// the operator report for diagnosis.
class OperatorNotHamiltonian : public Error {
public:
    explicit OperatorNotHamiltonian(CheckReport report)
        : Error("operator fails its hamiltonianity conditions"),
          report_(std::move(report)) {}
    const CheckReport& precondition_report() const { return report_; }

private:
    CheckReport report_;
};

}  // namespace hamcheck

#endif
