#pragma once

#include "hopf/constructions.hpp"

namespace hopf {

/// A finite-dimensional left module over one component H_α, given by the
/// action matrices of the basis elements: action[i] = ρ(e_i).
struct HModule {
    int grade = 0;
    std::size_t dim = 0;
    std::vector<Matrix> action;
};

/// ρ(x) for an arbitrary coordinate vector x ∈ H_grade.
Matrix module_act(const HModule &U, const Vec &x);

/// Unit and multiplicativity of the action, on all basis pairs.
Report validate_module(const TCoalg &H, const HModule &U);

bool module_equal(const HModule &a, const HModule &b);

/// U ⊗ V with the action pulled back through Δ_{|U|,|V|}.
HModule tensor_modules(const TCoalg &H, const HModule &U, const HModule &V);

/// The conjugated module ᵇU on the same space: ρ(h) = ρ_U(φ_{b⁻¹}(h)).
HModule crossing(const TCoalg &H, int b, const HModule &U);

/// Left dual U* at grade |U|⁻¹ with its evaluation/coevaluation.
/// coev ∈ U ⊗ U*, ev is the coordinate row of U* ⊗ U → k.
struct DualModule {
    HModule mod;
    Vec coev;
    Vec ev;
};
DualModule dual_module(const TCoalg &H, const HModule &U);

/// Braiding c_{U,V}: U⊗V → (^|U|V)⊗U as a square matrix (both sides have the
/// same underlying space dimension).
Matrix braiding_map(const TCoalg &H, const RMatrixFamily &R, const HModule &U,
                    const HModule &V);

/// Twist θ_U = ρ_U(θ_{|U|}): U → ^|U|U.
Matrix twist_map(const RibbonFamily &T, const HModule &U);

/// Basis of the centre of H_a (for building naturality test arrows).
std::vector<Vec> center_basis(const TCoalg &H, int a);

/// Braiding axioms over all ordered pairs from `mods`: invertibility, both
/// hexagons, invariance under the crossing functor, and naturality against
/// central-element endomorphisms.
Report check_braiding_axioms(const TCoalg &H, const RMatrixFamily &R,
                             const std::vector<HModule> &mods);

/// Twist axioms over `mods`: invertibility, the arrow property into the
/// conjugated module, crossing invariance, and the tensor rule on pairs.
Report check_twist_axioms(const TCoalg &H, const RMatrixFamily &R,
                          const RibbonFamily &T,
                          const std::vector<HModule> &mods);

/// The canonical endomorphism built from coevaluation and a double braiding
/// (inverse braiding when `inverse_braiding`, else the braiding itself).
Matrix omega_matrix(const TCoalg &H, const RMatrixFamily &R, const HModule &U,
                    bool inverse_braiding);

/// θ_{U⊗V}·(θ_U⊗θ_V)⁻¹ expressed purely through braidings.
Matrix twistator(const TCoalg &H, const RMatrixFamily &R, const HModule &U,
                 const HModule &V);

/// Duality diagnostics for one module.
struct DualityFlags {
    bool reflexive = false;  // (θ_U θ_U)⁻¹ equals the canonical ω
    bool good = false;       // θ_{U*} is the transpose of θ_U
    bool tortile = false;    // twisting the dual leg of coev = twisting U's leg
    bool snake = false;      // the braided coev/ev pair satisfies the triangles
};
DualityFlags good_dual_predicates(const TCoalg &H, const RMatrixFamily &R,
                                  const RibbonFamily &T, const HModule &U);

}  // namespace hopf
