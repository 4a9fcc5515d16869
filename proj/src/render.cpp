#include "hamcheck/render.hpp"

#include <sstream>

namespace hamcheck {

namespace {

const char* kGreen = "\x1b[32m";
const char* kRed = "\x1b[31m";
const char* kYellow = "\x1b[33m";
const char* kReset = "\x1b[0m";

std::string verdict_tag(bool passed, bool color) {
    if (!color) return passed ? "[pass]" : "[FAIL]";
    return std::string(passed ? kGreen : kRed) + (passed ? "[pass]" : "[FAIL]") + kReset;
}

}  // namespace

OrderedJson report_to_json(const CheckReport& report) {
    OrderedJson j;
    j["subject"] = report.subject;
    j["overall"] = report.passed() ? "pass" : "fail";
    j["warnings"] = report.warnings;
    j["conditions"] = OrderedJson::array();
    for (const auto& c : report.conditions) {
        OrderedJson jc;
        jc["name"] = c.name;
        jc["anchor"] = c.anchor;
        jc["verdict"] = c.passed() ? "pass" : "fail";
        jc["residuals"] = OrderedJson::array();
        for (const auto& r : c.residuals) {
            OrderedJson jr;
            jr["index"] = r.index;
            jr["value"] = r.value;
            jc["residuals"].push_back(std::move(jr));
        }
        jc["notes"] = c.notes;
        j["conditions"].push_back(std::move(jc));
    }
    return j;
}

CheckReport report_from_json(const OrderedJson& j) {
    CheckReport report;
    report.subject = j.at("subject").get<std::string>();
    for (const auto& w : j.at("warnings")) report.warnings.push_back(w.get<std::string>());
    for (const auto& jc : j.at("conditions")) {
        ConditionResult c;
        c.name = jc.at("name").get<std::string>();
        c.anchor = jc.at("anchor").get<std::string>();
        for (const auto& jr : jc.at("residuals"))
            c.residuals.push_back({jr.at("index").get<std::string>(),
                                   jr.at("value").get<std::string>()});
        for (const auto& n : jc.at("notes")) c.notes.push_back(n.get<std::string>());
        report.conditions.push_back(std::move(c));
    }
    return report;
}

OrderedJson residuals_to_json(const ResidualSystem& res) {
    OrderedJson j;
    j["verdict"] = res.all_zero() ? "pass" : "fail";
    j["nonzero"] = OrderedJson::array();
    for (const auto& e : res.nonzero()) {
        OrderedJson je;
        je["component"] = e.component + 1;
        je["class"] = jet_class_name(e.cls);
        je["monomial"] = e.monomial;
        je["value"] = e.value;
        j["nonzero"].push_back(std::move(je));
    }
    return j;
}

std::string render_report_text(const CheckReport& report, bool color) {
    std::ostringstream os;
    os << report.subject << "\n";
    for (const auto& w : report.warnings) {
        if (color) os << kYellow;
        os << "  warning: " << w;
        if (color) os << kReset;
        os << "\n";
    }
    for (const auto& c : report.conditions) {
        os << "  " << verdict_tag(c.passed(), color) << " " << c.name << "    " << c.anchor
           << "\n";
        for (const auto& n : c.notes) os << "           note: " << n << "\n";
        for (const auto& r : c.residuals)
            os << "           residual " << r.index << " = " << r.value << "\n";
    }
    os << "  overall: " << (report.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_residuals_text(const ResidualSystem& res, bool color) {
    std::ostringstream os;
    os << "covering residual system: "
       << verdict_tag(res.all_zero(), color) << "\n";
    for (const auto& e : res.nonzero())
        os << "  component " << e.component + 1 << "  class " << jet_class_name(e.cls)
           << "  @ " << e.monomial << "  = " << e.value << "\n";
    return os.str();
}

}  // namespace hamcheck
