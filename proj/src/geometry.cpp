#include "hamcheck/geometry.hpp"

#include <mutex>
#include <sstream>

#include "hamcheck/errors.hpp"

namespace hamcheck {

struct Metric::Cache {
    std::once_flag core_once;
    ExprMatrix lower;
    ExprTensor3 gamma2;        // Gamma^i_{jk}
    ExprTensor3 gamma_contra;  // Gamma^{ij}_k
    std::once_flag riemann_once;
    ExprTensor4 riemann;
};

Metric Metric::from_contravariant(ExprMatrix g_upper) {
    const std::size_t n = g_upper.size();
    if (n == 0) throw DimensionMismatch("empty metric");
    for (const auto& row : g_upper)
        if (row.size() != n) throw DimensionMismatch("metric is not square");
    auto ctx = g_upper[0][0].context();

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& e = g_upper[i][j];
            if (e.context() != ctx) throw Error("metric entries over mixed contexts");
            for (std::size_t v = 0; v < ctx->var_count(); ++v) {
                auto role = ctx->info(static_cast<VarId>(v)).role;
                if (role == VarRole::Field || role == VarRole::Parameter) continue;
                if (e.depends_on(static_cast<VarId>(v)))
                    throw InputError("metric entries may depend on field variables "
                                     "and parameters only (found '" +
                                     ctx->name(static_cast<VarId>(v)) + "')");
            }
            if (j < i && !g_upper[i][j].equals(g_upper[j][i]))
                throw AsymmetricMetric("g[" + std::to_string(i + 1) + "][" +
                                       std::to_string(j + 1) + "] != g[" +
                                       std::to_string(j + 1) + "][" +
                                       std::to_string(i + 1) + "]");
        }
    }

    Metric m;
    m.n_ = static_cast<int>(n);
    m.ctx_ = ctx;
    m.upper_ = std::move(g_upper);
    m.cache_ = std::make_shared<Cache>();
    return m;
}

Metric::Cache& Metric::cache() const {
    std::call_once(cache_->core_once, [&] {
        const auto n = static_cast<std::size_t>(n_);
        cache_->lower = invert_matrix(upper_);
        const ExprMatrix& lo = cache_->lower;

        // Levi-Civita: Gamma^i_{jk} = 1/2 g^{is} (g_{sj,k} + g_{sk,j} - g_{jk,s})
        cache_->gamma2 = make_tensor3(ctx_, n_);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = j; k < n; ++k) {
                    Expression acc = Expression::integer(ctx_, 0);
                    for (std::size_t s = 0; s < n; ++s) {
                        Expression inner =
                            lo[s][j].diff(ctx_->field(static_cast<int>(k))) +
                            lo[s][k].diff(ctx_->field(static_cast<int>(j))) -
                            lo[j][k].diff(ctx_->field(static_cast<int>(s)));
                        acc = acc + upper_[i][s] * inner;
                    }
                    acc = Rational(1, 2) * acc;
                    cache_->gamma2[i][j][k] = acc;
                    cache_->gamma2[i][k][j] = acc;
                }
            }
        }

        // Third kind: Gamma^{ij}_k = -g^{is} Gamma^j_{sk}
        cache_->gamma_contra = make_tensor3(ctx_, n_);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Expression acc = Expression::integer(ctx_, 0);
                    for (std::size_t s = 0; s < n; ++s)
                        acc = acc + upper_[i][s] * cache_->gamma2[j][s][k];
                    cache_->gamma_contra[i][j][k] = -acc;
                }
    });
    return *cache_;
}

const ExprMatrix& Metric::lower() const { return cache().lower; }
const ExprTensor3& Metric::christoffel_second() const { return cache().gamma2; }
const ExprTensor3& Metric::christoffel_contra() const { return cache().gamma_contra; }

const ExprTensor4& Metric::riemann() const {
    Cache& c = cache();
    std::call_once(c.riemann_once, [&] {
        const auto n = static_cast<std::size_t>(n_);
        const ExprTensor3& G = c.gamma_contra;
        const ExprTensor3& G2 = c.gamma2;
        c.riemann = make_tensor4(ctx_, n_);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t k = 0; k < n; ++k) {
                        Expression acc =
                            G[i][j][l].diff(ctx_->field(static_cast<int>(k))) -
                            G[i][j][k].diff(ctx_->field(static_cast<int>(l)));
                        for (std::size_t s = 0; s < n; ++s) {
                            acc = acc + G2[i][k][s] * G[s][j][l] -
                                  G2[j][k][s] * G[s][i][l];
                        }
                        c.riemann[i][j][l][k] = acc;
                    }
    });
    return c.riemann;
}

bool Metric::is_flat() const {
    for (const auto& t3 : riemann())
        for (const auto& t2 : t3)
            for (const auto& row : t2)
                for (const auto& e : row)
                    if (!e.is_identically_zero()) return false;
    return true;
}

std::optional<Expression> Metric::constant_curvature() const {
    const auto n = static_cast<std::size_t>(n_);
    const ExprTensor4& R = riemann();
    if (n == 1) return is_flat() ? std::optional<Expression>(
                                       Expression::integer(ctx_, 0))
                                 : std::nullopt;
    // R^{ij}_{lk} = c (d^i_k d^j_l - d^i_l d^j_k): read c off R^{12}_{21}.
    Expression c = R[0][1][1][0];
    for (std::size_t v = 0; v < ctx_->var_count(); ++v) {
        auto role = ctx_->info(static_cast<VarId>(v)).role;
        if (role != VarRole::Parameter && c.depends_on(static_cast<VarId>(v)))
            return std::nullopt;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t k = 0; k < n; ++k) {
                    Expression expect = Expression::integer(ctx_, 0);
                    if (i == k && j == l) expect = expect + c;
                    if (i == l && j == k) expect = expect - c;
                    if (!R[i][j][l][k].equals(expect)) return std::nullopt;
                }
    return c;
}

bool Metric::is_constant() const {
    for (const auto& row : upper_)
        for (const auto& e : row)
            for (std::size_t v = 0; v < ctx_->var_count(); ++v)
                if (ctx_->info(static_cast<VarId>(v)).role != VarRole::Parameter &&
                    e.depends_on(static_cast<VarId>(v)))
                    return false;
    return true;
}

std::pair<ExprTensor3, ExprTensor3> covariant_derivative_V(const Metric& g,
                                                           const ExprMatrix& V) {
    const auto n = static_cast<std::size_t>(g.n());
    auto ctx = g.context();
    const ExprTensor3& G2 = g.christoffel_second();
    ExprTensor3 lower = make_tensor3(ctx, g.n());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Expression acc = V[i][j].diff(ctx->field(static_cast<int>(k)));
                for (std::size_t s = 0; s < n; ++s)
                    acc = acc + G2[i][k][s] * V[s][j] - G2[s][k][j] * V[i][s];
                lower[k][i][j] = acc;  // nabla_k V^i_j stored [k][i][j]
            }
    // nabla^i V^j_k = g^{is} nabla_s V^j_k, stored [i][j][k].
    ExprTensor3 raised = make_tensor3(ctx, g.n());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Expression acc = Expression::integer(ctx, 0);
                for (std::size_t s = 0; s < n; ++s)
                    acc = acc + g.upper()[i][s] * lower[s][j][k];
                raised[i][j][k] = acc;
            }
    return {std::move(lower), std::move(raised)};
}

ExprMatrix nabla_upper_W(const Metric& g, const ExprVector& W) {
    const auto n = static_cast<std::size_t>(g.n());
    auto ctx = g.context();
    const ExprTensor3& G = g.christoffel_contra();
    ExprMatrix out = make_matrix(ctx, g.n(), g.n());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Expression acc = Expression::integer(ctx, 0);
            for (std::size_t s = 0; s < n; ++s)
                acc = acc + g.upper()[i][s] * W[j].diff(ctx->field(static_cast<int>(s))) -
                      G[i][j][s] * W[s];
            out[i][j] = acc;
        }
    return out;
}

ExprTensor3 second_covariant_W(const Metric& g, const ExprVector& W) {
    const auto n = static_cast<std::size_t>(g.n());
    auto ctx = g.context();
    const ExprTensor3& G2 = g.christoffel_second();
    ExprMatrix nw = nabla_upper_W(g, W);
    ExprTensor3 out = make_tensor3(ctx, g.n());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Expression acc = nw[i][j].diff(ctx->field(static_cast<int>(k)));
                for (std::size_t l = 0; l < n; ++l)
                    acc = acc + G2[i][k][l] * nw[l][j] + G2[j][k][l] * nw[i][l];
                out[i][j][k] = acc;
            }
    return out;
}

KillingResiduals killing_residuals(const Metric& g, const ExprVector& f) {
    const auto n = static_cast<std::size_t>(g.n());
    auto ctx = g.context();
    ExprMatrix nf = nabla_upper_W(g, f);
    KillingResiduals res;
    res.symmetric = make_matrix(ctx, g.n(), g.n());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            res.symmetric[i][j] = nf[i][j] + nf[j][i];
    res.cyclic = make_tensor3(ctx, g.n());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                res.cyclic[i][j][k] =
                    f[k] * nf[i][j] + f[i] * nf[j][k] + f[j] * nf[k][i];
    return res;
}

std::string christoffel_contra_text(const Metric& g) {
    std::ostringstream os;
    const auto n = static_cast<std::size_t>(g.n());
    const ExprTensor3& G = g.christoffel_contra();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                os << "Gamma[" << i + 1 << "][" << j + 1 << "]_" << k + 1 << " = "
                   << G[i][j][k].str() << "\n";
    return os.str();
}

std::string riemann_text(const Metric& g) {
    std::ostringstream os;
    const auto n = static_cast<std::size_t>(g.n());
    const ExprTensor4& R = g.riemann();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t k = 0; k < n; ++k)
                    os << "R[" << i + 1 << "][" << j + 1 << "]_[" << l + 1 << "]["
                       << k + 1 << "] = " << R[i][j][l][k].str() << "\n";
    return os.str();
}

}  // namespace hamcheck
