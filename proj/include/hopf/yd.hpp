#pragma once

#include "hopf/modules.hpp"

namespace hopf {

/// A crossed module-comodule: an H_α-module V together with coactions
/// Δ_{V,λ}: V → V⊗H_λ (stored as (dim·d_λ) × dim matrices) satisfying
/// coassociativity, counit, and the crossed compatibility law.
struct YDModule {
    HModule module;
    std::vector<Matrix> coaction;  // one per group element λ
};

/// Left regular module of H_a.
HModule regular_module(const TCoalg &H, int a);

/// All axioms, exhaustively over basis vectors.
Report validate_yd(const TCoalg &H, const YDModule &V);

/// The trivial coaction Δ_{V,λ}(v) = v⊗1_λ on an existing module.
YDModule trivial_yd(const TCoalg &H, const HModule &U);

bool yd_equal(const YDModule &a, const YDModule &b);

/// Tensor product: Δ(v⊗w) = v_(V) ⊗ w_(W) ⊗ w_(λ)·φ_{β⁻¹}(v_(βλβ⁻¹)).
YDModule yd_tensor(const TCoalg &H, const YDModule &V, const YDModule &W);

/// Conjugation functor: module part crossed, coleg pushed through φ_b.
YDModule yd_crossing(const TCoalg &H, int b, const YDModule &V);

/// Braiding V⊗W → (^αW)⊗V: v⊗w ↦ s_{β⁻¹}(v_(β⁻¹))w ⊗ v_(V).
Matrix yd_braiding(const TCoalg &H, const YDModule &V, const YDModule &W);

/// Half-braiding of V evaluated on an arbitrary module X over H_λ:
/// σ_X(v⊗x) = s_{λ⁻¹}(v_(λ⁻¹))x ⊗ v_(V) and its closed-form inverse
/// σ⁻¹(y⊗v) = v_(V) ⊗ v_(λ)y.
std::pair<Matrix, Matrix> halfbraiding_eval(const TCoalg &H, const YDModule &V,
                                            const HModule &X);

/// Recover coactions from the inverse half-braidings on the regular
/// modules: Δ_{V,λ}(v) = σ⁻¹_{H_λ}(1_λ ⊗ v).
YDModule yd_from_halfbraiding(const TCoalg &H, const HModule &underlying,
                              const std::vector<Matrix> &sigma_inv_regular);

/// The same space as a module over the double's α component:
/// (h⊛f)v = ⟨f, (hv)_(γ)⟩ (hv)_(V).
HModule yd_to_ddouble(const TCoalg &H, const YDModule &V);

/// Inverse transport: split a double-module action into H-action and
/// coactions Δ_{V,λ}(v) = Σ_i ((1⊛e^{λ.i})v) ⊗ e_{λ.i}.
YDModule ddouble_to_yd(const TCoalg &H, const HModule &W);

}  // namespace hopf
