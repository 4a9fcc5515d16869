#include "hamcheck/system.hpp"

#include "hamcheck/errors.hpp"

namespace hamcheck {

namespace {

void require_no_jets(const VariableContext& ctx, const Expression& e,
                     const char* what) {
    for (std::size_t v = 0; v < ctx.var_count(); ++v) {
        if (ctx.is_jet(static_cast<VarId>(v)) && e.depends_on(static_cast<VarId>(v)))
            throw InputError(std::string(what) + " may not contain the jet variable '" +
                             ctx.name(static_cast<VarId>(v)) + "'");
    }
}

}  // namespace

QuasilinearSystem QuasilinearSystem::make(VariableContext::Ptr ctx, ExprMatrix V,
                                          ExprVector W) {
    if (!ctx->covering_mode())
        throw Error("quasilinear systems live in covering-mode contexts");
    const auto n = static_cast<std::size_t>(ctx->n());
    if (V.size() != n || W.size() != n)
        throw DimensionMismatch("V/W size does not match the field count");
    QuasilinearSystem sys;
    for (std::size_t i = 0; i < n; ++i) {
        if (V[i].size() != n) throw DimensionMismatch("V is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (V[i][j].context() != ctx) throw Error("V entry over a foreign context");
            require_no_jets(*ctx, V[i][j], "V entries");
            if (V[i][j].depends_on(ctx->x())) sys.v_depends_on_x = true;
        }
        if (W[i].context() != ctx) throw Error("W entry over a foreign context");
        require_no_jets(*ctx, W[i], "W entries");
    }
    sys.ctx = std::move(ctx);
    sys.n = static_cast<int>(n);
    sys.V = std::move(V);
    sys.W = std::move(W);
    return sys;
}

bool QuasilinearSystem::homogeneous() const {
    for (const auto& w : W)
        if (!w.is_identically_zero()) return false;
    return true;
}

bool QuasilinearSystem::w_depends_on_x() const {
    for (const auto& w : W)
        if (w.depends_on(ctx->x())) return true;
    return false;
}

Expression QuasilinearSystem::u_t_rule(int i) const {
    Expression acc = W[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j)
        acc = acc + V[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        Expression::variable(ctx, ctx->field_x(j));
    return acc;
}

EvolutionaryVectorField EvolutionaryVectorField::zero_order(
    const QuasilinearSystem& sys, ExprVector phi) {
    if (phi.size() != static_cast<std::size_t>(sys.n))
        throw DimensionMismatch("vector field size");
    for (const auto& c : phi) require_no_jets(*sys.ctx, c, "zero-order symmetry components");
    EvolutionaryVectorField f;
    f.kind = Kind::ZeroOrder;
    f.components = std::move(phi);
    return f;
}

EvolutionaryVectorField EvolutionaryVectorField::hydrodynamic(
    const QuasilinearSystem& sys, ExprMatrix w) {
    const auto n = static_cast<std::size_t>(sys.n);
    if (w.size() != n) throw DimensionMismatch("w matrix size");
    EvolutionaryVectorField f;
    f.kind = Kind::Hydrodynamic;
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i].size() != n) throw DimensionMismatch("w matrix is not square");
        Expression acc = Expression::integer(sys.ctx, 0);
        for (std::size_t j = 0; j < n; ++j) {
            require_no_jets(*sys.ctx, w[i][j], "hydrodynamic symmetry coefficients");
            acc = acc + w[i][j] * Expression::variable(sys.ctx, sys.ctx->field_x(
                                                                    static_cast<int>(j)));
        }
        f.components.push_back(std::move(acc));
    }
    f.w = std::move(w);
    return f;
}

OnShellDerivatives::OnShellDerivatives(const QuasilinearSystem& sys,
                                       std::optional<ExprVector> p_t_rules,
                                       std::optional<NonlocalRule> nonlocal)
    : sys_(sys), ctx_(sys.ctx), p_t_rules_(std::move(p_t_rules)),
      nonlocal_(std::move(nonlocal)) {}

OnShellDerivatives::OnShellDerivatives(const CoveringSystem& cov)
    : sys_(cov.sys), ctx_(cov.sys.ctx), nonlocal_(cov.nonlocal) {
    if (cov.kind == CoveringKind::Cotangent)
        p_t_rules_ = cov.t_rules;
    else
        q_t_rules_ = cov.t_rules;
}

Expression OnShellDerivatives::dx(const Expression& e) const {
    const auto& ctx = *ctx_;
    Expression acc = e.diff(ctx.x());
    for (std::size_t v = 0; v < ctx.var_count(); ++v) {
        const auto id = static_cast<VarId>(v);
        if (id == ctx.x() || !e.depends_on(id)) continue;
        const VarInfo& info = ctx.info(id);
        Expression image = Expression::integer(ctx_, 0);
        switch (info.role) {
            case VarRole::Independent:
                continue;
            case VarRole::Parameter:
                continue;
            case VarRole::Field:
                image = Expression::variable(ctx_, ctx.field_x(info.field_index));
                break;
            case VarRole::FieldX:
                image = Expression::variable(ctx_, ctx.field_xx(info.field_index));
                break;
            case VarRole::Momentum:
                image = Expression::variable(ctx_, ctx.momentum_x(info.field_index));
                break;
            case VarRole::MomentumX:
                image = Expression::variable(ctx_, ctx.momentum_xx(info.field_index));
                break;
            case VarRole::Tangent:
                image = Expression::variable(ctx_, ctx.tangent_x(info.field_index));
                break;
            case VarRole::TangentX:
                image = Expression::variable(ctx_, ctx.tangent_xx(info.field_index));
                break;
            case VarRole::Nonlocal:
                if (!nonlocal_)
                    throw Error("D_x of the nonlocal variable requires its covering rule");
                image = nonlocal_->r_x;
                break;
            case VarRole::FieldXX:
            case VarRole::MomentumXX:
            case VarRole::TangentXX:
                throw Error("jet order overflow: D_x would exceed second derivatives");
        }
        acc = acc + image * e.diff(id);
    }
    return acc;
}

Expression OnShellDerivatives::dt(const Expression& e) const {
    const auto& ctx = *ctx_;
    Expression acc = Expression::integer(ctx_, 0);
    for (std::size_t v = 0; v < ctx.var_count(); ++v) {
        const auto id = static_cast<VarId>(v);
        if (!e.depends_on(id)) continue;
        const VarInfo& info = ctx.info(id);
        Expression image = Expression::integer(ctx_, 0);
        switch (info.role) {
            case VarRole::Independent:  // D_t x = 0
            case VarRole::Parameter:
                continue;
            case VarRole::Field:
                image = sys_.u_t_rule(info.field_index);
                break;
            case VarRole::FieldX:
                image = dx(sys_.u_t_rule(info.field_index));
                break;
            case VarRole::Momentum:
                if (!p_t_rules_) throw Error("D_t of a momentum requires cotangent rules");
                image = (*p_t_rules_)[static_cast<std::size_t>(info.field_index)];
                break;
            case VarRole::MomentumX:
                if (!p_t_rules_) throw Error("D_t of a momentum requires cotangent rules");
                image = dx((*p_t_rules_)[static_cast<std::size_t>(info.field_index)]);
                break;
            case VarRole::Tangent:
                if (!q_t_rules_) throw Error("D_t of a tangent variable requires tangent rules");
                image = (*q_t_rules_)[static_cast<std::size_t>(info.field_index)];
                break;
            case VarRole::TangentX:
                if (!q_t_rules_) throw Error("D_t of a tangent variable requires tangent rules");
                image = dx((*q_t_rules_)[static_cast<std::size_t>(info.field_index)]);
                break;
            case VarRole::Nonlocal:
                if (!nonlocal_)
                    throw Error("D_t of the nonlocal variable requires its covering rule");
                image = nonlocal_->r_t;
                break;
            case VarRole::FieldXX:
            case VarRole::MomentumXX:
            case VarRole::TangentXX:
                throw Error("jet order overflow: D_t would exceed second derivatives");
        }
        acc = acc + image * e.diff(id);
    }
    return acc;
}

ExprVector apply_linearization(const QuasilinearSystem& sys,
                               const EvolutionaryVectorField& phi) {
    const auto n = static_cast<std::size_t>(sys.n);
    CoveringSystem cot = build_cotangent_covering(sys);
    OnShellDerivatives D(cot);
    ExprVector out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Expression acc = D.dt(phi.components[i]);
        for (std::size_t l = 0; l < n; ++l) {
            Expression coef = sys.W[i].diff(sys.ctx->field(static_cast<int>(l)));
            for (std::size_t j = 0; j < n; ++j)
                coef = coef + sys.V[i][j].diff(sys.ctx->field(static_cast<int>(l))) *
                                  Expression::variable(sys.ctx,
                                                       sys.ctx->field_x(static_cast<int>(j)));
            acc = acc - coef * phi.components[l];
        }
        for (std::size_t j = 0; j < n; ++j)
            acc = acc - sys.V[i][j] * D.dx(phi.components[j]);
        out.push_back(std::move(acc));
    }
    return out;
}

Expression adjoint_rhs(const QuasilinearSystem& sys, const ExprVector& psi, int i) {
    const auto n = static_cast<std::size_t>(sys.n);
    const auto ii = static_cast<std::size_t>(i);
    OnShellDerivatives D(sys);
    Expression acc = Expression::integer(sys.ctx, 0);
    for (std::size_t k = 0; k < n; ++k) {
        Expression coef = -sys.W[k].diff(sys.ctx->field(i));
        for (std::size_t j = 0; j < n; ++j) {
            Expression ujx =
                Expression::variable(sys.ctx, sys.ctx->field_x(static_cast<int>(j)));
            coef = coef + (sys.V[k][ii].diff(sys.ctx->field(static_cast<int>(j))) -
                           sys.V[k][j].diff(sys.ctx->field(i))) *
                              ujx;
        }
        acc = acc + coef * psi[k] + sys.V[k][ii] * D.dx(psi[k]);
    }
    return acc;
}

ExprVector apply_adjoint_linearization(const QuasilinearSystem& sys,
                                       const ExprVector& psi) {
    const auto n = static_cast<std::size_t>(sys.n);
    if (psi.size() != n) throw DimensionMismatch("psi size");
    CoveringSystem cot = build_cotangent_covering(sys);
    OnShellDerivatives D(cot);
    ExprVector out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(adjoint_rhs(sys, psi, static_cast<int>(i)) - D.dt(psi[i]));
    return out;
}

bool is_symmetry(const QuasilinearSystem& sys, const EvolutionaryVectorField& phi) {
    for (const auto& comp : apply_linearization(sys, phi))
        if (!comp.is_identically_zero()) return false;
    return true;
}

CoveringSystem build_cotangent_covering(const QuasilinearSystem& sys) {
    const auto n = static_cast<std::size_t>(sys.n);
    ExprVector p;
    for (std::size_t i = 0; i < n; ++i)
        p.push_back(Expression::variable(sys.ctx, sys.ctx->momentum(static_cast<int>(i))));
    CoveringSystem cov;
    cov.sys = sys;
    cov.kind = CoveringKind::Cotangent;
    for (std::size_t i = 0; i < n; ++i)
        cov.t_rules.push_back(adjoint_rhs(sys, p, static_cast<int>(i)));
    return cov;
}

CoveringSystem build_tangent_covering(const QuasilinearSystem& sys) {
    const auto n = static_cast<std::size_t>(sys.n);
    CoveringSystem cov;
    cov.sys = sys;
    cov.kind = CoveringKind::Tangent;
    OnShellDerivatives D(sys);
    for (std::size_t i = 0; i < n; ++i) {
        Expression acc = Expression::integer(sys.ctx, 0);
        for (std::size_t l = 0; l < n; ++l) {
            Expression coef = sys.W[i].diff(sys.ctx->field(static_cast<int>(l)));
            for (std::size_t j = 0; j < n; ++j)
                coef = coef + sys.V[i][j].diff(sys.ctx->field(static_cast<int>(l))) *
                                  Expression::variable(sys.ctx,
                                                       sys.ctx->field_x(static_cast<int>(j)));
            acc = acc + coef * Expression::variable(sys.ctx,
                                                    sys.ctx->tangent(static_cast<int>(l)));
        }
        for (std::size_t j = 0; j < n; ++j)
            acc = acc + sys.V[i][j] * Expression::variable(
                                          sys.ctx, sys.ctx->tangent_x(static_cast<int>(j)));
        cov.t_rules.push_back(std::move(acc));
    }
    return cov;
}

}  // namespace hamcheck
