#ifndef HAMCHECK_GEOMETRY_HPP
#define HAMCHECK_GEOMETRY_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "hamcheck/linalg.hpp"

namespace hamcheck {

// Contravariant metric g^{ij}(u) together with the tensors derived from it:
// the covariant metric, both Christoffel families, and the curvature tensor
//   R^{ij}_{lk} = Gamma^{ij}_{l,k} - Gamma^{ij}_{k,l}
//                 + Gamma^i_{ks} Gamma^{sj}_l - Gamma^j_{ks} Gamma^{si}_l.
// Derived data is computed lazily and memoized; copies share the cache.
class Metric {
public:
    // Validates symmetry and that entries depend on field variables and
    // parameters only.  Degeneracy is detected on first inversion.
    static Metric from_contravariant(ExprMatrix g_upper);

    int n() const { return n_; }
    const VariableContext::Ptr& context() const { return ctx_; }
    const ExprMatrix& upper() const { return upper_; }

    const ExprMatrix& lower() const;              // g_{ij} = (g^{ij})^{-1}
    const ExprTensor3& christoffel_second() const;  // Gamma^i_{jk}
    const ExprTensor3& christoffel_contra() const;  // Gamma^{ij}_k = -g^{is} Gamma^j_{sk}
    const ExprTensor4& riemann() const;             // R^{ij}_{lk}

    bool is_flat() const;

    // Constant c with R^{ij}_{lk} = c (d^i_k d^j_l - d^i_l d^j_k), if any;
    // the sign convention makes the curvature of the round metric
    // diag(1-k*u^2, 1/u^2) equal k.  c never contains field variables.
    std::optional<Expression> constant_curvature() const;

    bool is_constant() const;  // all entries free of field variables and x

private:
    Metric() = default;
    struct Cache;
    Cache& cache() const;

    int n_ = 0;
    VariableContext::Ptr ctx_;
    ExprMatrix upper_;
    std::shared_ptr<Cache> cache_;
};

// nabla_k V^i_j = V^i_{j,k} + Gamma^i_{ks} V^s_j - Gamma^s_{kj} V^i_s and its
// raised companion nabla^i = g^{is} nabla_s, returned as {lower, raised};
// indices are [i][j][k] for the lower form and [i][j][k] for nabla^i V^j_k.
std::pair<ExprTensor3, ExprTensor3> covariant_derivative_V(const Metric& g,
                                                           const ExprMatrix& V);

// nabla^i W^j = g^{is} W^j_{,s} - Gamma^{ij}_s W^s (W may depend on x).
ExprMatrix nabla_upper_W(const Metric& g, const ExprVector& W);

// nabla_k nabla^i W^j = (nabla^i W^j)_{,k} + Gamma^i_{kl} nabla^l W^j
//                       + Gamma^j_{kl} nabla^i W^l, indexed [i][j][k].
ExprTensor3 second_covariant_W(const Metric& g, const ExprVector& W);

struct KillingResiduals {
    ExprMatrix symmetric;  // nabla^i f^j + nabla^j f^i
    ExprTensor3 cyclic;    // f^k nabla^i f^j + f^i nabla^j f^k + f^j nabla^k f^i
};
KillingResiduals killing_residuals(const Metric& g, const ExprVector& f);

// Deterministic indexed dump, e.g. "Gamma[1][2]_2 = -1" (1-based indices).
std::string christoffel_contra_text(const Metric& g);
std::string riemann_text(const Metric& g);

}  // namespace hamcheck

#endif
