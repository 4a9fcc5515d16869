#ifndef HAMCHECK_COVERING_HPP
#define HAMCHECK_COVERING_HPP

#include <map>
#include <utility>

#include "hamcheck/operators.hpp"
#include "hamcheck/system.hpp"

namespace hamcheck {

// Operator lifted to a linear vector function on the cotangent covering:
//   Dubrovin-Novikov:  A^i = g^{ij} p_{j,x} + Gamma^{ij}_k u^k_x p_j
//   Ferapontov:        + alpha f^i r          (r_x = f^j p_j)
//   Ferapontov-Mokhov: + c w^i_j u^j_x r      (r_x = w^j_l u^l_x p_j, w = id by default)
struct LiftedOperator {
    ExprVector lifted;
    std::optional<ExprVector> phi;  // nonlocal symmetry attached to r
};

LiftedOperator lift_operator(const HydroOperator& op, const QuasilinearSystem& sys,
                             const std::optional<ExprMatrix>& fm_w = std::nullopt);

// Named coefficient classes of the collected residual.
enum class JetClass { Pxx, UxxP, UxUxP, UxPx, Px, UxP, P, UxR, R, Other };
const char* jet_class_name(JetClass c);
JetClass classify_jet_monomial(const VariableContext& ctx, const Monomial& m);

// ell_F(A(p)) expanded on the cotangent covering and collected over jet
// monomials, one map per equation component; only nonzero coefficients are
// stored and reconstruction is exact.
struct ResidualSystem {
    VariableContext::Ptr ctx;
    int n = 0;
    std::vector<std::map<Monomial, Expression, GrlexLess>> by_component;

    bool all_zero() const;
    bool class_zero(JetClass c) const;
    // Zero when the monomial is absent.
    Expression coefficient(int component, const Monomial& m) const;

    struct Entry {
        int component;
        JetClass cls;
        std::string monomial;
        std::string value;
    };
    std::vector<Entry> nonzero() const;
};

ResidualSystem covering_residual(const QuasilinearSystem& sys, const HydroOperator& op,
                                 const std::optional<ExprMatrix>& fm_w = std::nullopt);

std::pair<bool, ResidualSystem> oracle_check(
    const QuasilinearSystem& sys, const HydroOperator& op,
    const std::optional<ExprMatrix>& fm_w = std::nullopt);

// Monomial builder for coefficient lookups, e.g. the u^k_x p_j class.
Monomial jet_monomial(const VariableContext::Ptr& ctx,
                      std::initializer_list<std::pair<VarId, unsigned>> powers);

}  // namespace hamcheck

#endif
