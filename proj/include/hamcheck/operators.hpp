#ifndef HAMCHECK_OPERATORS_HPP
#define HAMCHECK_OPERATORS_HPP

#include <optional>
#include <variant>

#include "hamcheck/geometry.hpp"
#include "hamcheck/report.hpp"

namespace hamcheck {

// First-order homogeneous operator g^{ij} d_x + Gamma^{ij}_k u^k_x.
// A supplied connection must coincide with the Levi-Civita one derived from
// g (the nondegenerate theory forces it); mismatch is an input error raised
// by validate().
struct DubrovinNovikov {
    Metric g;
    std::optional<ExprTensor3> gamma_supplied;
    void validate() const;
};

// Nonlocal extension by an isometry: + alpha f^i d_x^{-1} f^j.
struct Ferapontov {
    Metric g;
    std::optional<ExprTensor3> gamma_supplied;
    Expression alpha;  // constant (parameters allowed)
    ExprVector f;      // n-vector in u
    void validate() const;
    DubrovinNovikov local_part() const { return {g, gamma_supplied}; }
};

// Nonlocal extension + c u^i_x d_x^{-1} u^j_x.
struct FerapontovMokhov {
    Metric g;
    std::optional<ExprTensor3> gamma_supplied;
    Expression c;  // constant (parameters allowed)
    void validate() const;
    DubrovinNovikov local_part() const { return {g, gamma_supplied}; }
};

using HydroOperator = std::variant<DubrovinNovikov, Ferapontov, FerapontovMokhov>;

// Hamiltonianity criteria per operator class.
//   Dubrovin-Novikov: g symmetric, metric compatibility, flatness.
//   Ferapontov:       the above plus both Killing-type residuals for f.
//   Ferapontov-Mokhov: metric compatibility plus R^{ij}_{lk} matching the
//                      constant-curvature form with the operator's own c.
CheckReport check_dn_hamiltonian(const DubrovinNovikov& op);
CheckReport check_ferapontov_hamiltonian(const Ferapontov& op);
CheckReport check_fm_hamiltonian(const FerapontovMokhov& op);
CheckReport check_hamiltonian(const HydroOperator& op);

// Convention note recorded on constant-curvature condition rows.
inline constexpr const char* kCurvatureConvention =
    "convention: R[i][j]_[l][k] = c*(d(i,k)*d(j,l) - d(i,l)*d(j,k))";

}  // namespace hamcheck

#endif
