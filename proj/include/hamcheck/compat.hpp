#ifndef HAMCHECK_COMPAT_HPP
#define HAMCHECK_COMPAT_HPP

#include "hamcheck/covering.hpp"

namespace hamcheck {

struct CompatOptions {
    // When set (the default), a failed operator check raises
    // OperatorNotHamiltonian; otherwise the compatibility conditions are
    // still evaluated and a warning is attached.
    bool enforce_hamiltonian = true;
};

// Local theorem: (1) nabla^i V^j_k = nabla^j V^i_k, (2) g^{ik} V^j_k =
// g^{jk} V^i_k, (3) nabla^i W^j + nabla^j W^i = 0, (4) nabla^i W^j_{,x} = 0,
// (5) nabla_k nabla^i W^j = 0.  For W = 0 the report reduces to the Tsarev
// pair.
CheckReport check_local_compatibility(const QuasilinearSystem& sys,
                                      const DubrovinNovikov& op,
                                      const CompatOptions& opts = {});

// Isometry-extended operator: the f-symmetry condition, the Tsarev pair,
// nabla^i W^j_{,x} - alpha f^k V^j_k f^i + alpha f^k V^i_k f^j = 0, the
// Killing condition on W and the second covariant derivative condition.
CheckReport check_ferapontov_compatibility(const QuasilinearSystem& sys,
                                           const Ferapontov& op,
                                           const CompatOptions& opts = {});

// Ferapontov-Mokhov operator with tail symmetry phi^i = w^i_j u^j_x (w
// defaults to the identity): Tsarev pair + phi a symmetry, plus the three
// W-conditions when W != 0.  Attaches a scope warning when W depends on x.
CheckReport check_fm_compatibility(const QuasilinearSystem& sys,
                                   const FerapontovMokhov& op,
                                   const std::optional<ExprMatrix>& w = std::nullopt,
                                   const CompatOptions& opts = {});

// Flat-coordinate reduction for a constant metric eta: conditions
//   (3) eta^{il} W^j_{,l} + eta^{jl} W^i_{,l} = 0
//   (4) eta^{il} W^j_{,xl} = 0
//   (5) W^j_{,lk} = 0
// On success extracts the constant tail matrix a^i_k = W^i_{,k} and checks
// eta^{is} a^j_s + eta^{js} a^i_s = 0 (which condition (3) forces).
CheckReport check_flat_coordinate_form(const Metric& eta, const ExprVector& W);

// Note recorded on the mixed condition of the Ferapontov compatibility check.
inline constexpr const char* kFerapontovMixedSign =
    "sign: nabla^i W^j_,x = alpha*(f^k V^j_k f^i - f^k V^i_k f^j)";

}  // namespace hamcheck

#endif
