#ifndef HAMCHECK_SYSTEM_HPP
#define HAMCHECK_SYSTEM_HPP

#include <optional>

#include "hamcheck/linalg.hpp"

namespace hamcheck {

// Quasilinear first-order system u^i_t = V^i_j(u) u^j_x + W^i(x, u) over a
// covering-mode context.  V entries never contain jet variables; the class
// of interest has V = V(u), so x-dependence in V is flagged rather than
// rejected (negative fixtures exercise it).
struct QuasilinearSystem {
    VariableContext::Ptr ctx;
    int n = 0;
    ExprMatrix V;
    ExprVector W;
    bool v_depends_on_x = false;

    static QuasilinearSystem make(VariableContext::Ptr ctx, ExprMatrix V, ExprVector W);
    bool homogeneous() const;          // W identically zero
    bool w_depends_on_x() const;
    Expression u_t_rule(int i) const;  // V^i_j u^j_x + W^i
};

// Evolutionary vector field: either zero-order phi^i = phi^i(u) or
// hydrodynamic phi^i = w^i_j(u) u^j_x.
struct EvolutionaryVectorField {
    enum class Kind { ZeroOrder, Hydrodynamic };
    Kind kind = Kind::ZeroOrder;
    ExprVector components;
    std::optional<ExprMatrix> w;  // set for hydrodynamic fields

    static EvolutionaryVectorField zero_order(const QuasilinearSystem& sys,
                                              ExprVector phi);
    static EvolutionaryVectorField hydrodynamic(const QuasilinearSystem& sys,
                                                ExprMatrix w);
};

// Rules for eliminating t-derivatives (and the nonlocal variable's
// derivatives) on a covering.  Right sides are t-derivative-free by
// construction, so substitution order never matters.
struct NonlocalRule {
    ExprVector phi;   // r_x = phi^i p_i, r_t = V^i_j phi^j p_i
    Expression r_x;
    Expression r_t;
};

enum class CoveringKind { Cotangent, Tangent };

struct CoveringSystem {
    QuasilinearSystem sys;
    CoveringKind kind = CoveringKind::Cotangent;
    ExprVector t_rules;  // p_{i,t} (cotangent) or q^i_t (tangent)
    std::optional<NonlocalRule> nonlocal;
};

// Total derivatives on the covering; u^i_t is always replaced on-shell.
// Grabbing a t-derivative of p/q/r without the matching rules, or exceeding
// the second-order jet truncation, is an error.
class OnShellDerivatives {
public:
    explicit OnShellDerivatives(const QuasilinearSystem& sys)
        : OnShellDerivatives(sys, std::nullopt, std::nullopt) {}
    OnShellDerivatives(const QuasilinearSystem& sys,
                       std::optional<ExprVector> p_t_rules,
                       std::optional<NonlocalRule> nonlocal);
    explicit OnShellDerivatives(const CoveringSystem& cov);

    Expression dx(const Expression& e) const;
    Expression dt(const Expression& e) const;

private:
    const QuasilinearSystem sys_;
    VariableContext::Ptr ctx_;
    std::optional<ExprVector> p_t_rules_;
    std::optional<ExprVector> q_t_rules_;
    std::optional<NonlocalRule> nonlocal_;
};

// ell_F(phi)^i = D_t phi^i - (V^i_{j,l} u^j_x + W^i_{,l}) phi^l - V^i_j D_x phi^j.
ExprVector apply_linearization(const QuasilinearSystem& sys,
                               const EvolutionaryVectorField& phi);

// ell_F*(psi)_i = -D_t psi_i + (V^k_{i,j} u^j_x - V^k_{j,i} u^j_x - W^k_{,i}) psi_k
//                + V^k_i D_x psi_k.  D_t uses the cotangent rules, so momenta
// are admissible in psi (and ell_F*(p) vanishes identically on the covering).
ExprVector apply_adjoint_linearization(const QuasilinearSystem& sys,
                                       const ExprVector& psi);

// Right side of the cotangent covering equation for p_{i,t}.
Expression adjoint_rhs(const QuasilinearSystem& sys, const ExprVector& psi, int i);

bool is_symmetry(const QuasilinearSystem& sys, const EvolutionaryVectorField& phi);

CoveringSystem build_cotangent_covering(const QuasilinearSystem& sys);
CoveringSystem build_tangent_covering(const QuasilinearSystem& sys);

}  // namespace hamcheck

#endif
