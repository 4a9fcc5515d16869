#include "hamcheck/context.hpp"

#include <cctype>

namespace hamcheck {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

VariableContext::Ptr VariableContext::base(std::vector<std::string> fields,
                                           std::vector<std::string> parameters) {
    return make(std::move(fields), std::move(parameters), false);
}

VariableContext::Ptr VariableContext::covering(std::vector<std::string> fields,
                                               std::vector<std::string> parameters) {
    return make(std::move(fields), std::move(parameters), true);
}

VariableContext::Ptr VariableContext::make(std::vector<std::string> fields,
                                           std::vector<std::string> parameters,
                                           bool covering) {
    if (fields.empty()) throw DimensionMismatch("at least one field variable required");
    auto ctx = std::shared_ptr<VariableContext>(new VariableContext());
    ctx->n_ = static_cast<int>(fields.size());
    ctx->param_count_ = parameters.size();
    ctx->covering_ = covering;

    auto push = [&](std::string name, VarRole role, int fi) {
        if (!valid_identifier(name))
            throw InputError("invalid variable name '" + name + "'");
        VarId id = static_cast<VarId>(ctx->vars_.size());
        if (!ctx->by_name_.emplace(name, id).second)
            throw InputError("duplicate or reserved variable name '" + name + "'");
        ctx->vars_.push_back(VarInfo{std::move(name), role, fi});
    };

    push("x", VarRole::Independent, -1);
    for (int i = 0; i < ctx->n_; ++i) push(fields[static_cast<size_t>(i)], VarRole::Field, i);
    for (auto& p : parameters) push(std::move(p), VarRole::Parameter, -1);

    // Jet names are reserved in every mode so that base contexts stay
    // lift-compatible with their covering extensions.
    std::vector<std::pair<std::string, VarRole>> jets;
    for (int i = 0; i < ctx->n_; ++i)
        jets.emplace_back(fields[static_cast<size_t>(i)] + "_x", VarRole::FieldX);
    for (int i = 0; i < ctx->n_; ++i)
        jets.emplace_back(fields[static_cast<size_t>(i)] + "_xx", VarRole::FieldXX);
    for (int i = 0; i < ctx->n_; ++i)
        jets.emplace_back("p" + std::to_string(i + 1), VarRole::Momentum);
    for (int i = 0; i < ctx->n_; ++i)
        jets.emplace_back("p" + std::to_string(i + 1) + "_x", VarRole::MomentumX);
    for (int i = 0; i < ctx->n_; ++i)
        jets.emplace_back("p" + std::to_string(i + 1) + "_xx", VarRole::MomentumXX);
    for (int i = 0; i < ctx->n_; ++i)
        jets.emplace_back("q" + std::to_string(i + 1), VarRole::Tangent);
    for (int i = 0; i < ctx->n_; ++i)
        jets.emplace_back("q" + std::to_string(i + 1) + "_x", VarRole::TangentX);
    for (int i = 0; i < ctx->n_; ++i)
        jets.emplace_back("q" + std::to_string(i + 1) + "_xx", VarRole::TangentXX);
    jets.emplace_back("r", VarRole::Nonlocal);

    ctx->jet_base_ = ctx->vars_.size();
    if (covering) {
        int idx = 0;
        for (auto& [name, role] : jets) {
            int fi = role == VarRole::Nonlocal ? -1 : idx % ctx->n_;
            push(name, role, fi);
            ++idx;
        }
    } else {
        for (auto& [name, role] : jets) {
            if (ctx->by_name_.count(name))
                throw InputError("variable name '" + name + "' is reserved");
        }
    }
    return ctx;
}

std::optional<VarId> VariableContext::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

VarId VariableContext::jet(VarRole role, int i) const {
    check_index(i);
    if (!covering_) throw Error("jet variables exist only in covering mode");
    std::size_t block;
    switch (role) {
        case VarRole::FieldX: block = 0; break;
        case VarRole::FieldXX: block = 1; break;
        case VarRole::Momentum: block = 2; break;
        case VarRole::MomentumX: block = 3; break;
        case VarRole::MomentumXX: block = 4; break;
        case VarRole::Tangent: block = 5; break;
        case VarRole::TangentX: block = 6; break;
        case VarRole::TangentXX: block = 7; break;
        default: throw Error("not a per-field jet role");
    }
    return static_cast<VarId>(jet_base_ + block * static_cast<size_t>(n_) +
                              static_cast<size_t>(i));
}

VarId VariableContext::nonlocal_r() const {
    if (!covering_) throw Error("jet variables exist only in covering mode");
    return static_cast<VarId>(vars_.size() - 1);
}

bool VariableContext::is_jet(VarId v) const {
    switch (info(v).role) {
        case VarRole::Independent:
        case VarRole::Field:
        case VarRole::Parameter:
            return false;
        default:
            return true;
    }
}

bool VariableContext::extends(const VariableContext& other) const {
    if (other.var_count() > var_count()) return false;
    for (std::size_t i = 0; i < other.var_count(); ++i) {
        const auto& a = vars_[i];
        const auto& b = other.vars_[i];
        if (a.name != b.name || a.role != b.role || a.field_index != b.field_index)
            return false;
    }
    return true;
}

}  // namespace hamcheck
