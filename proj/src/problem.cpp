#include "hamcheck/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hamcheck/parser.hpp"

namespace hamcheck {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& name, const std::string& what) {
    throw InputError("problem file '" + name + "': " + what);
}

std::string expr_string(const json& j, const std::string& name, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    bad(name, where + " must be an expression string");
}

Expression parse_entry(const json& j, const VariableContext::Ptr& ctx,
                       const std::string& name, const std::string& where) {
    std::string text = expr_string(j, name, where);
    try {
        return parse_expression(text, ctx);
    } catch (const InputError& e) {
        bad(name, where + ": " + e.what() + " in \"" + text + "\"");
    }
}

ExprVector parse_vector_field(const json& j, const VariableContext::Ptr& ctx,
                              std::size_t n, const std::string& name,
                              const std::string& where) {
    if (!j.is_array() || j.size() != n)
        bad(name, where + " must be an array of " + std::to_string(n) + " strings");
    ExprVector out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(parse_entry(j[i], ctx, name,
                                  where + "[" + std::to_string(i + 1) + "]"));
    return out;
}

ExprMatrix parse_matrix_field(const json& j, const VariableContext::Ptr& ctx,
                              std::size_t n, const std::string& name,
                              const std::string& where) {
    if (!j.is_array() || j.size() != n)
        bad(name, where + " must be an " + std::to_string(n) + "x" +
                      std::to_string(n) + " array of strings");
    ExprMatrix out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(parse_vector_field(j[i], ctx, n, name,
                                         where + "[" + std::to_string(i + 1) + "]"));
    return out;
}

}  // namespace

ProblemFile ProblemFile::parse(const std::string& json_text,
                               const std::string& display_name) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        bad(display_name, std::string("invalid JSON: ") + e.what());
    }

    const std::string name = j.value("name", display_name);
    const std::string provenance = j.value("provenance", "");

    if (!j.contains("n") || !j["n"].is_number_integer())
        bad(name, "missing integer field \"n\"");
    const auto n = j["n"].get<int>();
    if (n < 1) bad(name, "n must be at least 1");

    if (!j.contains("variables") || !j["variables"].is_array() ||
        j["variables"].size() != static_cast<std::size_t>(n))
        bad(name, "\"variables\" must list exactly n field names");
    std::vector<std::string> fields;
    for (const auto& v : j["variables"]) {
        if (!v.is_string()) bad(name, "variable names must be strings");
        fields.push_back(v.get<std::string>());
    }
    std::vector<std::string> params;
    if (j.contains("parameters")) {
        if (!j["parameters"].is_array()) bad(name, "\"parameters\" must be an array");
        for (const auto& p : j["parameters"]) {
            if (!p.is_string()) bad(name, "parameter names must be strings");
            params.push_back(p.get<std::string>());
        }
    }
    VariableContext::Ptr ctx;
    try {
        ctx = VariableContext::covering(fields, params);
    } catch (const InputError& e) {
        bad(name, e.what());
    }
    const auto nn = static_cast<std::size_t>(n);

    if (!j.contains("V") || !j.contains("W")) bad(name, "missing \"V\" or \"W\"");
    ExprMatrix V = parse_matrix_field(j["V"], ctx, nn, name, "V");
    ExprVector W = parse_vector_field(j["W"], ctx, nn, name, "W");
    QuasilinearSystem sys = [&] {
        try {
            return QuasilinearSystem::make(ctx, std::move(V), std::move(W));
        } catch (const Error& e) {
            bad(name, e.what());
        }
    }();

    if (!j.contains("operator") || !j["operator"].is_object())
        bad(name, "missing \"operator\" object");
    const json& jop = j["operator"];
    std::string kind = jop.value("kind", "");
    if (!jop.contains("g")) bad(name, "operator needs a metric \"g\"");

    Metric g = [&] {
        ExprMatrix gm = parse_matrix_field(jop["g"], ctx, nn, name, "operator.g");
        try {
            return Metric::from_contravariant(std::move(gm));
        } catch (const InputError& e) {
            bad(name, e.what());
        }
    }();

    std::optional<ExprTensor3> gamma;
    if (jop.contains("gamma")) {
        const json& jg = jop["gamma"];
        if (!jg.is_array() || jg.size() != nn)
            bad(name, "operator.gamma must be an n x n x n array");
        ExprTensor3 t;
        for (std::size_t i = 0; i < nn; ++i)
            t.push_back(parse_matrix_field(jg[i], ctx, nn, name,
                                           "operator.gamma[" + std::to_string(i + 1) + "]"));
        gamma = std::move(t);
    }

    std::optional<HydroOperator> op;
    std::optional<ExprMatrix> fm_w;
    if (kind == "dubrovin-novikov") {
        op = DubrovinNovikov{std::move(g), std::move(gamma)};
    } else if (kind == "ferapontov") {
        if (!jop.contains("f")) bad(name, "ferapontov operators need \"f\"");
        ExprVector f = parse_vector_field(jop["f"], ctx, nn, name, "operator.f");
        Expression alpha = jop.contains("alpha")
                               ? parse_entry(jop["alpha"], ctx, name, "operator.alpha")
                               : Expression::integer(ctx, 1);
        op = Ferapontov{std::move(g), std::move(gamma), std::move(alpha), std::move(f)};
    } else if (kind == "ferapontov-mokhov") {
        if (!jop.contains("c")) bad(name, "ferapontov-mokhov operators need \"c\"");
        Expression c = parse_entry(jop["c"], ctx, name, "operator.c");
        if (jop.contains("w"))
            fm_w = parse_matrix_field(jop["w"], ctx, nn, name, "operator.w");
        op = FerapontovMokhov{std::move(g), std::move(gamma), std::move(c)};
    } else {
        bad(name, "operator.kind must be \"dubrovin-novikov\", \"ferapontov\" or "
                  "\"ferapontov-mokhov\"");
    }

    // Early dimension/constancy validation so bad files fail as input errors.
    try {
        std::visit([](const auto& o) { o.validate(); }, *op);
    } catch (const InputError& e) {
        bad(name, e.what());
    }
    return ProblemFile(name, provenance, std::move(ctx), std::move(sys), std::move(*op),
                       std::move(fm_w));
}

ProblemFile ProblemFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

}  // namespace hamcheck
