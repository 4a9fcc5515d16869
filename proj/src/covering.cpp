#include "hamcheck/covering.hpp"

namespace hamcheck {

namespace {

NonlocalRule make_nonlocal_rule(const QuasilinearSystem& sys, ExprVector phi) {
    const auto n = static_cast<std::size_t>(sys.n);
    Expression rx = Expression::integer(sys.ctx, 0);
    Expression rt = Expression::integer(sys.ctx, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Expression pi =
            Expression::variable(sys.ctx, sys.ctx->momentum(static_cast<int>(i)));
        rx = rx + phi[i] * pi;
        for (std::size_t j = 0; j < n; ++j) rt = rt + sys.V[i][j] * phi[j] * pi;
    }
    return NonlocalRule{std::move(phi), std::move(rx), std::move(rt)};
}

ExprVector local_lift(const Metric& g, const QuasilinearSystem& sys) {
    const auto n = static_cast<std::size_t>(sys.n);
    const ExprTensor3& G = g.christoffel_contra();
    ExprVector out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Expression acc = Expression::integer(sys.ctx, 0);
        for (std::size_t j = 0; j < n; ++j) {
            acc = acc + g.upper()[i][j] *
                            Expression::variable(sys.ctx,
                                                 sys.ctx->momentum_x(static_cast<int>(j)));
            for (std::size_t k = 0; k < n; ++k)
                acc = acc + G[i][j][k] *
                                Expression::variable(sys.ctx,
                                                     sys.ctx->field_x(static_cast<int>(k))) *
                                Expression::variable(sys.ctx,
                                                     sys.ctx->momentum(static_cast<int>(j)));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

ExprMatrix identity_w(const QuasilinearSystem& sys) {
    return identity_matrix(sys.ctx, sys.n);
}

}  // namespace

LiftedOperator lift_operator(const HydroOperator& op, const QuasilinearSystem& sys,
                             const std::optional<ExprMatrix>& fm_w) {
    return std::visit(
        [&](const auto& o) -> LiftedOperator {
            using T = std::decay_t<decltype(o)>;
            if (o.g.context() != sys.ctx)
                throw Error("operator and system live in different contexts");
            o.validate();
            LiftedOperator lifted;
            lifted.lifted = local_lift(o.g, sys);
            if constexpr (std::is_same_v<T, Ferapontov>) {
                Expression r = Expression::variable(sys.ctx, sys.ctx->nonlocal_r());
                for (std::size_t i = 0; i < lifted.lifted.size(); ++i)
                    lifted.lifted[i] = lifted.lifted[i] + o.alpha * o.f[i] * r;
                lifted.phi = o.f;
            } else if constexpr (std::is_same_v<T, FerapontovMokhov>) {
                const ExprMatrix w = fm_w ? *fm_w : identity_w(sys);
                EvolutionaryVectorField phi =
                    EvolutionaryVectorField::hydrodynamic(sys, w);
                Expression r = Expression::variable(sys.ctx, sys.ctx->nonlocal_r());
                for (std::size_t i = 0; i < lifted.lifted.size(); ++i)
                    lifted.lifted[i] = lifted.lifted[i] + o.c * phi.components[i] * r;
                lifted.phi = phi.components;
            }
            return lifted;
        },
        op);
}

const char* jet_class_name(JetClass c) {
    switch (c) {
        case JetClass::Pxx: return "p_xx";
        case JetClass::UxxP: return "u_xx*p";
        case JetClass::UxUxP: return "u_x*u_x*p";
        case JetClass::UxPx: return "u_x*p_x";
        case JetClass::Px: return "p_x";
        case JetClass::UxP: return "u_x*p";
        case JetClass::P: return "p";
        case JetClass::UxR: return "u_x*r";
        case JetClass::R: return "r";
        case JetClass::Other: return "other";
    }
    return "other";
}

JetClass classify_jet_monomial(const VariableContext& ctx, const Monomial& m) {
    unsigned ux = 0, uxx = 0, p = 0, px = 0, pxx = 0, r = 0, other = 0;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        switch (ctx.info(static_cast<VarId>(v)).role) {
            case VarRole::FieldX: ux += m[v]; break;
            case VarRole::FieldXX: uxx += m[v]; break;
            case VarRole::Momentum: p += m[v]; break;
            case VarRole::MomentumX: px += m[v]; break;
            case VarRole::MomentumXX: pxx += m[v]; break;
            case VarRole::Nonlocal: r += m[v]; break;
            case VarRole::Independent:
            case VarRole::Field:
            case VarRole::Parameter:
                break;
            default: other += m[v]; break;
        }
    }
    if (other) return JetClass::Other;
    auto match = [&](unsigned eux, unsigned euxx, unsigned ep, unsigned epx,
                     unsigned epxx, unsigned er) {
        return ux == eux && uxx == euxx && p == ep && px == epx && pxx == epxx &&
               r == er;
    };
    if (match(0, 0, 0, 0, 1, 0)) return JetClass::Pxx;
    if (match(0, 1, 1, 0, 0, 0)) return JetClass::UxxP;
    if (match(2, 0, 1, 0, 0, 0)) return JetClass::UxUxP;
    if (match(1, 0, 0, 1, 0, 0)) return JetClass::UxPx;
    if (match(0, 0, 0, 1, 0, 0)) return JetClass::Px;
    if (match(1, 0, 1, 0, 0, 0)) return JetClass::UxP;
    if (match(0, 0, 1, 0, 0, 0)) return JetClass::P;
    if (match(1, 0, 0, 0, 0, 1)) return JetClass::UxR;
    if (match(0, 0, 0, 0, 0, 1)) return JetClass::R;
    return JetClass::Other;
}

bool ResidualSystem::all_zero() const {
    for (const auto& m : by_component)
        if (!m.empty()) return false;
    return true;
}

bool ResidualSystem::class_zero(JetClass c) const {
    for (const auto& m : by_component)
        for (const auto& [mon, coef] : m)
            if (classify_jet_monomial(*ctx, mon) == c) return false;
    return true;
}

Expression ResidualSystem::coefficient(int component, const Monomial& m) const {
    const auto& bucket = by_component.at(static_cast<std::size_t>(component));
    auto it = bucket.find(m);
    if (it == bucket.end()) return Expression::integer(ctx, 0);
    return it->second;
}

std::vector<ResidualSystem::Entry> ResidualSystem::nonzero() const {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < by_component.size(); ++i) {
        for (const auto& [mon, coef] : by_component[i]) {
            Polynomial mp = Polynomial::from_terms(ctx->var_count(), {{mon, Rational(1)}});
            out.push_back(Entry{static_cast<int>(i),
                                classify_jet_monomial(*ctx, mon),
                                mp.str([&](int v) { return ctx->name(v); }),
                                coef.str()});
        }
    }
    return out;
}

ResidualSystem covering_residual(const QuasilinearSystem& sys, const HydroOperator& op,
                                 const std::optional<ExprMatrix>& fm_w) {
    const auto n = static_cast<std::size_t>(sys.n);
    LiftedOperator lifted = lift_operator(op, sys, fm_w);

    CoveringSystem cov = build_cotangent_covering(sys);
    if (lifted.phi) cov.nonlocal = make_nonlocal_rule(sys, *lifted.phi);
    OnShellDerivatives D(cov);

    ResidualSystem res;
    res.ctx = sys.ctx;
    res.n = sys.n;
    res.by_component.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Expression acc = D.dt(lifted.lifted[i]);
        for (std::size_t l = 0; l < n; ++l) {
            Expression coef = sys.W[i].diff(sys.ctx->field(static_cast<int>(l)));
            for (std::size_t j = 0; j < n; ++j)
                coef = coef + sys.V[i][j].diff(sys.ctx->field(static_cast<int>(l))) *
                                  Expression::variable(
                                      sys.ctx, sys.ctx->field_x(static_cast<int>(j)));
            acc = acc - coef * lifted.lifted[l];
        }
        for (std::size_t j = 0; j < n; ++j)
            acc = acc - sys.V[i][j] * D.dx(lifted.lifted[j]);
        res.by_component[i] = collect_jet_coefficients(acc);
    }
    return res;
}

std::pair<bool, ResidualSystem> oracle_check(const QuasilinearSystem& sys,
                                             const HydroOperator& op,
                                             const std::optional<ExprMatrix>& fm_w) {
    ResidualSystem res = covering_residual(sys, op, fm_w);
    return {res.all_zero(), std::move(res)};
}

Monomial jet_monomial(const VariableContext::Ptr& ctx,
                      std::initializer_list<std::pair<VarId, unsigned>> powers) {
    Monomial m(ctx->var_count(), 0u);
    for (const auto& [v, e] : powers) m[static_cast<std::size_t>(v)] += e;
    return m;
}

}  // namespace hamcheck
