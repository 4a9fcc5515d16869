#include "hamcheck/operators.hpp"

namespace hamcheck {

namespace {

std::string idx2(std::size_t i, std::size_t j) {
    return "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

std::string idx3(std::size_t i, std::size_t j, std::size_t k) {
    return idx2(i, j) + "_" + std::to_string(k + 1);
}

void push_residual(ConditionResult& cond, std::string index, const Expression& e) {
    if (!e.is_identically_zero())
        cond.residuals.push_back({std::move(index), e.str()});
}

void require_constant_expression(const VariableContext& ctx, const Expression& e,
                                 const char* what) {
    for (std::size_t v = 0; v < ctx.var_count(); ++v) {
        if (ctx.info(static_cast<VarId>(v)).role == VarRole::Parameter) continue;
        if (e.depends_on(static_cast<VarId>(v)))
            throw InputError(std::string(what) +
                             " must be constant (parameters only); found '" +
                             ctx.name(static_cast<VarId>(v)) + "'");
    }
}

void require_u_only(const VariableContext& ctx, const Expression& e, const char* what) {
    for (std::size_t v = 0; v < ctx.var_count(); ++v) {
        auto role = ctx.info(static_cast<VarId>(v)).role;
        if (role == VarRole::Field || role == VarRole::Parameter) continue;
        if (e.depends_on(static_cast<VarId>(v)))
            throw InputError(std::string(what) + " may depend on field variables only; found '" +
                             ctx.name(static_cast<VarId>(v)) + "'");
    }
}

void validate_gamma(const Metric& g, const std::optional<ExprTensor3>& supplied) {
    if (!supplied) return;
    const auto n = static_cast<std::size_t>(g.n());
    if (supplied->size() != n) throw DimensionMismatch("gamma tensor size");
    const ExprTensor3& derived = g.christoffel_contra();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(*supplied)[i][j][k].equals(derived[i][j][k]))
                    throw GammaMismatch("Gamma" + idx3(i, j, k) + " = " +
                                        (*supplied)[i][j][k].str() + ", Levi-Civita gives " +
                                        derived[i][j][k].str());
}

void append_dn_conditions(CheckReport& report, const DubrovinNovikov& op) {
    const auto n = static_cast<std::size_t>(op.g.n());
    auto ctx = op.g.context();

    ConditionResult sym{"metric-symmetry", "g^ij = g^ji", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            push_residual(sym, idx2(i, j), op.g.upper()[i][j] - op.g.upper()[j][i]);
    report.conditions.push_back(std::move(sym));

    const ExprTensor3& G = op.g.christoffel_contra();
    ConditionResult compat{"metric-compatibility",
                           "g^ij_,k = Gamma^ij_k + Gamma^ji_k", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                push_residual(compat, idx3(i, j, k),
                              op.g.upper()[i][j].diff(ctx->field(static_cast<int>(k))) -
                                  G[i][j][k] - G[j][i][k]);
    report.conditions.push_back(std::move(compat));

    const ExprTensor4& R = op.g.riemann();
    ConditionResult flat{"flatness", "R^ij_lk = 0", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t k = 0; k < n; ++k)
                    push_residual(flat, idx2(i, j) + "_" + idx2(l, k), R[i][j][l][k]);
    report.conditions.push_back(std::move(flat));
}

}  // namespace

void DubrovinNovikov::validate() const { validate_gamma(g, gamma_supplied); }

void Ferapontov::validate() const {
    validate_gamma(g, gamma_supplied);
    if (f.size() != static_cast<std::size_t>(g.n()))
        throw DimensionMismatch("isometry vector size");
    require_constant_expression(*g.context(), alpha, "alpha");
    for (const auto& c : f) require_u_only(*g.context(), c, "f components");
}

void FerapontovMokhov::validate() const {
    validate_gamma(g, gamma_supplied);
    require_constant_expression(*g.context(), c, "the curvature constant c");
}

CheckReport check_dn_hamiltonian(const DubrovinNovikov& op) {
    op.validate();
    CheckReport report;
    report.subject = "dubrovin-novikov operator";
    append_dn_conditions(report, op);
    return report;
}

CheckReport check_ferapontov_hamiltonian(const Ferapontov& op) {
    op.validate();
    CheckReport report;
    report.subject = "ferapontov operator";
    append_dn_conditions(report, op.local_part());

    const auto n = static_cast<std::size_t>(op.g.n());
    KillingResiduals kr = killing_residuals(op.g, op.f);
    ConditionResult killing{"killing-symmetric", "nabla^i f^j + nabla^j f^i = 0", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            push_residual(killing, idx2(i, j), kr.symmetric[i][j]);
    report.conditions.push_back(std::move(killing));

    ConditionResult cyc{"killing-cyclic", "f^k nabla^i f^j + <cyclic> = 0", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                push_residual(cyc, idx3(i, j, k), kr.cyclic[i][j][k]);
    report.conditions.push_back(std::move(cyc));
    return report;
}

CheckReport check_fm_hamiltonian(const FerapontovMokhov& op) {
    op.validate();
    CheckReport report;
    report.subject = "ferapontov-mokhov operator";
    auto ctx = op.g.context();
    const auto n = static_cast<std::size_t>(op.g.n());

    const ExprTensor3& G = op.g.christoffel_contra();
    ConditionResult compat{"metric-compatibility",
                           "g^ij_,k = Gamma^ij_k + Gamma^ji_k", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                push_residual(compat, idx3(i, j, k),
                              op.g.upper()[i][j].diff(ctx->field(static_cast<int>(k))) -
                                  G[i][j][k] - G[j][i][k]);
    report.conditions.push_back(std::move(compat));

    const ExprTensor4& R = op.g.riemann();
    ConditionResult curv{"constant-curvature",
                         "R^ij_lk = c*(d^i_k d^j_l - d^i_l d^j_k) with the operator's c",
                         {},
                         {kCurvatureConvention}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t k = 0; k < n; ++k) {
                    Expression expect = Expression::integer(ctx, 0);
                    if (i == k && j == l) expect = expect + op.c;
                    if (i == l && j == k) expect = expect - op.c;
                    push_residual(curv, idx2(i, j) + "_" + idx2(l, k),
                                  R[i][j][l][k] - expect);
                }
    report.conditions.push_back(std::move(curv));
    return report;
}

CheckReport check_hamiltonian(const HydroOperator& op) {
    return std::visit(
        [](const auto& o) -> CheckReport {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, DubrovinNovikov>)
                return check_dn_hamiltonian(o);
            else if constexpr (std::is_same_v<T, Ferapontov>)
                return check_ferapontov_hamiltonian(o);
            else
                return check_fm_hamiltonian(o);
        },
        op);
}

}  // namespace hamcheck
