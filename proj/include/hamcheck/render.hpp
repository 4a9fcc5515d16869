#ifndef HAMCHECK_RENDER_HPP
#define HAMCHECK_RENDER_HPP

#include <json.hpp>

#include "hamcheck/covering.hpp"
#include "hamcheck/report.hpp"

namespace hamcheck {

using OrderedJson = nlohmann::ordered_json;

// Exit codes: 0 pass, 1 conditions failed, 2 input error,
// 3 internal oracle/conditions disagreement.
inline constexpr int kExitPass = 0;
inline constexpr int kExitConditionsFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitOracleDisagreement = 3;

OrderedJson report_to_json(const CheckReport& report);
CheckReport report_from_json(const OrderedJson& j);

OrderedJson residuals_to_json(const ResidualSystem& res);

std::string render_report_text(const CheckReport& report, bool color);
std::string render_residuals_text(const ResidualSystem& res, bool color);

}  // namespace hamcheck

#endif
