#ifndef HAMCHECK_PROBLEM_HPP
#define HAMCHECK_PROBLEM_HPP

#include <string>

#include "hamcheck/compat.hpp"

namespace hamcheck {

// JSON problem file: the system, the candidate operator and (for
// Ferapontov-Mokhov operators) an optional tail symmetry matrix w.
//
// {
//   "name": "...", "provenance": "...",
//   "n": 2, "variables": ["u","v"], "parameters": ["k"],
//   "V": [["0","1"],["1/u^2","0"]], "W": ["0","-2*x"],
//   "operator": {
//     "kind": "dubrovin-novikov" | "ferapontov" | "ferapontov-mokhov",
//     "g": [[...]], "gamma": [[[...]]],       (gamma optional)
//     "f": [...], "alpha": "2",               (ferapontov)
//     "c": "k", "w": [[...]]                  (ferapontov-mokhov; w optional)
//   }
// }
struct ProblemFile {
    std::string name;
    std::string provenance;
    VariableContext::Ptr ctx;
    QuasilinearSystem sys;
    HydroOperator op;
    std::optional<ExprMatrix> fm_w;

    ProblemFile(std::string name_, std::string provenance_, VariableContext::Ptr ctx_,
                QuasilinearSystem sys_, HydroOperator op_, std::optional<ExprMatrix> fm_w_)
        : name(std::move(name_)), provenance(std::move(provenance_)),
          ctx(std::move(ctx_)), sys(std::move(sys_)), op(std::move(op_)),
          fm_w(std::move(fm_w_)) {}

    static ProblemFile parse(const std::string& json_text,
                             const std::string& display_name);
    static ProblemFile load(const std::string& path);
};

}  // namespace hamcheck

#endif
