#pragma once

#include <optional>

#include "padic/constants.hpp"
#include "padic/norms.hpp"
#include "padic/radial.hpp"

namespace padic {

struct OutputWindow {
    int k_min = 0;
    int k_max = 0;
};

// Half-width of the default operator output window around the input support.
inline constexpr int kDefaultWindowPad = 16;

// Fractional Hausdorff operator on radial functions, by the exact shell sum
//
//   H f(p^l) = (1 - p^{-n}) sum_k psi(p^{l-k}) p^{k beta} g(p^k),
//
// evaluated on the output window (default: input window widened by
// kDefaultWindowPad on each side). Output tail_value is the exact l -> -inf
// constant when one exists (kernels flat near 0 applied to finitely supported
// inputs), else 0. Inputs with a nonzero tail are handled in closed geometric
// form for the analytic families; a tabulated kernel with such an input has
// no exact finite representation and is rejected.
RadialFunction hausdorff_apply(const KernelSpec& psi, double beta, const RadialFunction& f,
                               std::optional<OutputWindow> window = std::nullopt);

// beta = 0 specialization (the plain Hausdorff operator)
RadialFunction hausdorff_apply(const KernelSpec& psi, const RadialFunction& f,
                               std::optional<OutputWindow> window = std::nullopt);

// Commutator b H f - H(b f), shell-wise on the output window.
RadialFunction commutator_apply(const RadialSymbol& b, const KernelSpec& psi, double beta,
                                const RadialFunction& f,
                                std::optional<OutputWindow> window = std::nullopt);

// Power profile A |x|_p^e dominating the operator output pointwise: the
// Hoelder step of the selected theorem with the discrete constants, so the
// bound is exact (no majorization slack).
struct PowerMajorant {
    double coefficient = 0.0;
    double exponent = 0.0;
};

// f_norm is the input norm the theorem pairs with the operator: the central
// Morrey norm for Thm3, the weighted Lebesgue norm for Thm4/Thm5. b_seminorm
// enters only for Thm5.
PowerMajorant pointwise_majorant(const KernelSpec& psi, double beta, const SpaceParams& sp,
                                 TheoremId which, double f_norm, double b_seminorm = 0.0);

} // namespace padic
