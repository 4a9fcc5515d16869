#ifndef HAMCHECK_CONTEXT_HPP
#define HAMCHECK_CONTEXT_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hamcheck/errors.hpp"

namespace hamcheck {

using VarId = int;

enum class VarRole {
    Independent,  // the spatial variable x
    Field,        // u^1 .. u^n
    Parameter,    // formal constants (c1, k, alpha, ...)
    FieldX,       // u^i_x
    FieldXX,      // u^i_xx
    Momentum,     // p_i      (cotangent covering)
    MomentumX,    // p_{i,x}
    MomentumXX,   // p_{i,xx}
    Tangent,      // q^i      (tangent covering)
    TangentX,     // q^i_x
    TangentXX,    // q^i_xx
    Nonlocal,     // r
};

struct VarInfo {
    std::string name;
    VarRole role;
    int field_index;  // which u^i this jet variable belongs to; -1 otherwise
};

// Declares the variables an Expression may reference.  Variable order is
// fixed at creation and doubles as the monomial-order variable ranking.
// A covering-mode context extends the corresponding base context: the base
// variables occupy a prefix, the jet indeterminates follow.
class VariableContext {
public:
    using Ptr = std::shared_ptr<const VariableContext>;

    // Base mode: x, fields, parameters only.
    static Ptr base(std::vector<std::string> fields,
                    std::vector<std::string> parameters = {});
    // Covering mode: adds u^i_x, u^i_xx, p_i, p_{i,x}, p_{i,xx},
    // q^i, q^i_x, q^i_xx and the nonlocal variable r.
    static Ptr covering(std::vector<std::string> fields,
                        std::vector<std::string> parameters = {});

    int n() const { return n_; }
    bool covering_mode() const { return covering_; }
    std::size_t var_count() const { return vars_.size(); }

    const VarInfo& info(VarId v) const { return vars_.at(static_cast<size_t>(v)); }
    const std::string& name(VarId v) const { return info(v).name; }
    std::optional<VarId> find(std::string_view name) const;

    VarId x() const { return 0; }
    VarId field(int i) const { return check_index(i), 1 + i; }
    int parameter_count() const { return static_cast<int>(param_count_); }
    VarId parameter(int i) const { return 1 + n_ + i; }

    VarId field_x(int i) const { return jet(VarRole::FieldX, i); }
    VarId field_xx(int i) const { return jet(VarRole::FieldXX, i); }
    VarId momentum(int i) const { return jet(VarRole::Momentum, i); }
    VarId momentum_x(int i) const { return jet(VarRole::MomentumX, i); }
    VarId momentum_xx(int i) const { return jet(VarRole::MomentumXX, i); }
    VarId tangent(int i) const { return jet(VarRole::Tangent, i); }
    VarId tangent_x(int i) const { return jet(VarRole::TangentX, i); }
    VarId tangent_xx(int i) const { return jet(VarRole::TangentXX, i); }
    VarId nonlocal_r() const;

    bool is_jet(VarId v) const;

    // True when `other` declares a prefix of this context's variables
    // (identical names and roles); expressions lift along such pairs.
    bool extends(const VariableContext& other) const;

private:
    VariableContext() = default;
    static Ptr make(std::vector<std::string> fields,
                    std::vector<std::string> parameters, bool covering);
    void check_index(int i) const {
        if (i < 0 || i >= n_) throw DimensionMismatch("field index out of range");
    }
    VarId jet(VarRole role, int i) const;

    int n_ = 0;
    std::size_t param_count_ = 0;
    bool covering_ = false;
    std::vector<VarInfo> vars_;
    std::unordered_map<std::string, VarId> by_name_;
    std::size_t jet_base_ = 0;  // index of the first jet variable
};

}  // namespace hamcheck

#endif
