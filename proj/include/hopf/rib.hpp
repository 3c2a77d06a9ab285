#pragma once

#include "hopf/modules.hpp"

namespace hopf {

/// A twist-paired module: an H_α-module M with an H_α-linear isomorphism
/// t: M → ^αM whose inverse square realizes u_α s_{α⁻¹}(u_{α⁻¹}).
struct RibObject {
    HModule module;
    Matrix t;
};

/// Linearity, invertibility, and the twist-square condition.
Report validate_rib(const TCoalg &H, const RMatrixFamily &R,
                    const RibObject &O);

/// Tensor: module tensor with t⊠t' = (t⊗t')∘c_{^αM',M}∘c_{M,M'}.
RibObject rib_tensor(const TCoalg &H, const RMatrixFamily &R,
                     const RibObject &A, const RibObject &B);

/// Dual: (M*, t*) with the adjoint twist.
RibObject rib_dual(const TCoalg &H, const RibObject &O);

/// Extend the action to the ribbon extension: the generator v acts as t⁻¹.
HModule rt_module_from_rib(const TCoalg &H, const RibObject &O);

/// Restrict an extended-algebra module (2d action matrices) back to a
/// twist-paired module: t is the inverse of the action of 1·v.
RibObject rib_from_rt_module(const TCoalg &H, const HModule &N);

/// The two structural identities tying s(u) to the R coefficients:
/// s_{α⁻¹}(u_{α⁻¹}) = ξ_i s_{α⁻¹}(ζ_i) and its commutation law.
Report check_lemma_identities(const TCoalg &H, const RMatrixFamily &R);

}  // namespace hopf
