#include "hamcheck/compat.hpp"

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

void check_context(const QuasilinearSystem& sys, const Metric& g) {
    if (g.context() != sys.ctx)
        throw Error("operator and system live in different contexts");
}

void attach_system_warnings(CheckReport& report, const QuasilinearSystem& sys) {
    if (sys.v_depends_on_x)
        report.warnings.push_back(
            "V depends on x: outside the quasilinear class V = V(u)");
}

// Precondition handling shared by the three compatibility checks.
void run_precondition(CheckReport& report, CheckReport op_report,
                      const CompatOptions& opts) {
    if (op_report.passed()) return;
    if (opts.enforce_hamiltonian) throw OperatorNotHamiltonian(std::move(op_report));
    report.warnings.push_back(
        "operator hamiltonianity precondition failed (" +
        [&] {
            std::string names;
            for (const auto& c : op_report.failing_conditions())
                names += (names.empty() ? "" : ", ") + c;
            return names;
        }() +
        "); compatibility conditions evaluated anyway");
}

ConditionResult tsarev_nabla_condition(const QuasilinearSystem& sys, const Metric& g) {
    const auto n = static_cast<std::size_t>(sys.n);
    auto [lower, raised] = covariant_derivative_V(g, sys.V);
    ConditionResult cond{"tsarev-nabla-symmetry", "nabla^i V^j_k = nabla^j V^i_k", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                push_residual(cond, idx3(i, j, k), raised[i][j][k] - raised[j][i][k]);
    return cond;
}

ConditionResult tsarev_metric_condition(const QuasilinearSystem& sys, const Metric& g) {
    const auto n = static_cast<std::size_t>(sys.n);
    ConditionResult cond{"tsarev-metric-symmetry", "g^ik V^j_k = g^jk V^i_k", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Expression acc = Expression::integer(sys.ctx, 0);
            for (std::size_t k = 0; k < n; ++k)
                acc = acc + g.upper()[i][k] * sys.V[j][k] - g.upper()[j][k] * sys.V[i][k];
            push_residual(cond, idx2(i, j), acc);
        }
    return cond;
}

ConditionResult w_killing_condition(const QuasilinearSystem& sys, const Metric& g) {
    const auto n = static_cast<std::size_t>(sys.n);
    ExprMatrix nw = nabla_upper_W(g, sys.W);
    ConditionResult cond{"w-killing", "nabla^i W^j + nabla^j W^i = 0", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            push_residual(cond, idx2(i, j), nw[i][j] + nw[j][i]);
    return cond;
}

ExprMatrix nabla_w_x(const QuasilinearSystem& sys, const Metric& g) {
    ExprVector wx;
    wx.reserve(sys.W.size());
    for (const auto& w : sys.W) wx.push_back(w.diff(sys.ctx->x()));
    return nabla_upper_W(g, wx);
}

ConditionResult w_x_condition(const QuasilinearSystem& sys, const Metric& g) {
    const auto n = static_cast<std::size_t>(sys.n);
    ExprMatrix nwx = nabla_w_x(sys, g);
    ConditionResult cond{"w-x-derivative", "nabla^i W^j_,x = 0", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) push_residual(cond, idx2(i, j), nwx[i][j]);
    return cond;
}

ConditionResult w_second_condition(const QuasilinearSystem& sys, const Metric& g) {
    const auto n = static_cast<std::size_t>(sys.n);
    ExprTensor3 s = second_covariant_W(g, sys.W);
    ConditionResult cond{"w-second-covariant", "nabla_k nabla^i W^j = 0", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                push_residual(cond, idx3(i, j, k), s[i][j][k]);
    return cond;
}

ConditionResult symmetry_condition(const QuasilinearSystem& sys,
                                   const EvolutionaryVectorField& phi,
                                   const char* name, const char* anchor) {
    ExprVector lin = apply_linearization(sys, phi);
    ConditionResult cond{name, anchor, {}, {}};
    for (std::size_t i = 0; i < lin.size(); ++i) {
        if (lin[i].is_identically_zero()) continue;
        // Report per jet monomial for pinpoint diagnostics.
        auto coeffs = collect_jet_coefficients(lin[i]);
        for (const auto& [mon, coef] : coeffs) {
            Polynomial mp =
                Polynomial::from_terms(sys.ctx->var_count(), {{mon, Rational(1)}});
            push_residual(cond,
                          "[" + std::to_string(i + 1) + "] @ " +
                              mp.str([&](int v) { return sys.ctx->name(v); }),
                          coef);
        }
    }
    return cond;
}

}  // namespace

CheckReport check_local_compatibility(const QuasilinearSystem& sys,
                                      const DubrovinNovikov& op,
                                      const CompatOptions& opts) {
    check_context(sys, op.g);
    CheckReport report;
    report.subject = "system compatibility with a dubrovin-novikov operator";
    run_precondition(report, check_dn_hamiltonian(op), opts);
    attach_system_warnings(report, sys);

    report.conditions.push_back(tsarev_nabla_condition(sys, op.g));
    report.conditions.push_back(tsarev_metric_condition(sys, op.g));
    report.conditions.push_back(w_killing_condition(sys, op.g));
    report.conditions.push_back(w_x_condition(sys, op.g));
    report.conditions.push_back(w_second_condition(sys, op.g));
    return report;
}

CheckReport check_ferapontov_compatibility(const QuasilinearSystem& sys,
                                           const Ferapontov& op,
                                           const CompatOptions& opts) {
    check_context(sys, op.g);
    CheckReport report;
    report.subject = "system compatibility with a ferapontov operator";
    run_precondition(report, check_ferapontov_hamiltonian(op), opts);
    attach_system_warnings(report, sys);
    const auto n = static_cast<std::size_t>(sys.n);

    report.conditions.push_back(
        symmetry_condition(sys, EvolutionaryVectorField::zero_order(sys, op.f),
                           "f-symmetry", "ell_F(f) = 0"));
    report.conditions.push_back(tsarev_nabla_condition(sys, op.g));
    report.conditions.push_back(tsarev_metric_condition(sys, op.g));

    // Mixed condition; the sign is the one the covering residual produces.
    ExprMatrix nwx = nabla_w_x(sys, op.g);
    ExprVector fv;  // (f V)^j = V^j_k f^k
    for (std::size_t j = 0; j < n; ++j) {
        Expression acc = Expression::integer(sys.ctx, 0);
        for (std::size_t k = 0; k < n; ++k) acc = acc + sys.V[j][k] * op.f[k];
        fv.push_back(std::move(acc));
    }
    ConditionResult mixed{"w-x-derivative-isometry",
                          "nabla^i W^j_,x - alpha f^k V^j_k f^i + alpha f^k V^i_k f^j = 0",
                          {},
                          {kFerapontovMixedSign}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            push_residual(mixed, idx2(i, j),
                          nwx[i][j] - op.alpha * fv[j] * op.f[i] +
                              op.alpha * fv[i] * op.f[j]);
    report.conditions.push_back(std::move(mixed));

    report.conditions.push_back(w_killing_condition(sys, op.g));
    report.conditions.push_back(w_second_condition(sys, op.g));
    return report;
}

CheckReport check_fm_compatibility(const QuasilinearSystem& sys,
                                   const FerapontovMokhov& op,
                                   const std::optional<ExprMatrix>& w,
                                   const CompatOptions& opts) {
    check_context(sys, op.g);
    CheckReport report;
    report.subject = "system compatibility with a ferapontov-mokhov operator";
    run_precondition(report, check_fm_hamiltonian(op), opts);
    attach_system_warnings(report, sys);
    if (sys.w_depends_on_x())
        report.warnings.push_back(
            "W depends on x: outside the stated scope of the ferapontov-mokhov "
            "compatibility conditions (they assume W = W(u))");

    report.conditions.push_back(tsarev_nabla_condition(sys, op.g));
    report.conditions.push_back(tsarev_metric_condition(sys, op.g));

    ExprMatrix wmat = w ? *w : identity_matrix(sys.ctx, sys.n);
    bool w_is_identity = true;
    for (std::size_t i = 0; i < wmat.size(); ++i)
        for (std::size_t j = 0; j < wmat.size(); ++j)
            if (!wmat[i][j].equals(Expression::integer(sys.ctx, i == j ? 1 : 0)))
                w_is_identity = false;
    if (!w_is_identity)
        report.warnings.push_back(
            "tail symmetry w differs from the identity: the constant-curvature "
            "hamiltonianity certification covers the u_x tail only");
    report.conditions.push_back(symmetry_condition(
        sys, EvolutionaryVectorField::hydrodynamic(sys, wmat), "phi-symmetry",
        "ell_F(w^i_j u^j_x) = 0"));

    if (!sys.homogeneous()) {
        report.conditions.push_back(w_killing_condition(sys, op.g));
        report.conditions.push_back(w_x_condition(sys, op.g));
        report.conditions.push_back(w_second_condition(sys, op.g));
    }
    return report;
}

CheckReport check_flat_coordinate_form(const Metric& eta, const ExprVector& W) {
    if (!eta.is_constant())
        throw NonConstantMetric("the flat-coordinate form needs eta^ij constant");
    const auto n = static_cast<std::size_t>(eta.n());
    auto ctx = eta.context();
    if (W.size() != n) throw DimensionMismatch("W size");
    eta.lower();  // degeneracy check

    CheckReport report;
    report.subject = "flat-coordinate admissible tail";

    ConditionResult killing{"flat-w-killing",
                            "eta^il W^j_,l + eta^jl W^i_,l = 0", {}, {}};
    ExprMatrix nw = nabla_upper_W(eta, W);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            push_residual(killing, idx2(i, j), nw[i][j] + nw[j][i]);
    report.conditions.push_back(std::move(killing));

    ConditionResult xcond{"flat-w-x-derivative", "eta^il W^j_,xl = 0", {}, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Expression acc = Expression::integer(ctx, 0);
            for (std::size_t l = 0; l < n; ++l)
                acc = acc + eta.upper()[i][l] *
                                W[j].diff(ctx->x()).diff(ctx->field(static_cast<int>(l)));
            push_residual(xcond, idx2(i, j), acc);
        }
    report.conditions.push_back(std::move(xcond));

    ConditionResult lin{"flat-w-linearity", "W^j_,lk = 0", {}, {}};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t k = l; k < n; ++k)
                push_residual(lin, idx3(j, l, k),
                              W[j].diff(ctx->field(static_cast<int>(l)))
                                  .diff(ctx->field(static_cast<int>(k))));
    report.conditions.push_back(std::move(lin));

    if (report.passed()) {
        // W^i = a^i_k u^k + f^i(x) with a constant; condition (3) forces the
        // raised matrix eta^{is} a^j_s to be antisymmetric.
        ExprMatrix a = make_matrix(ctx, eta.n(), eta.n());
        ConditionResult tail{"tail-matrix-antisymmetry",
                             "eta^is a^j_s + eta^js a^i_s = 0 for a^i_k = W^i_,k",
                             {},
                             {}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                a[i][k] = W[i].diff(ctx->field(static_cast<int>(k)));
                tail.notes.push_back("a" + idx2(i, k) + " = " + a[i][k].str());
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Expression acc = Expression::integer(ctx, 0);
                for (std::size_t s = 0; s < n; ++s)
                    acc = acc + eta.upper()[i][s] * a[j][s] + eta.upper()[j][s] * a[i][s];
                push_residual(tail, idx2(i, j), acc);
            }
        report.conditions.push_back(std::move(tail));
    }
    return report;
}

}  // namespace hamcheck
