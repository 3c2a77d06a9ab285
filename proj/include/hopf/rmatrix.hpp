#pragma once

#include "hopf/tcoalg.hpp"

namespace hopf {

/// Family R_{α,β} ∈ H_α ⊗ H_β of invertible elements, stored as coefficient
/// vectors of length d_α·d_β (lexicographic legs), with cached inverses.
struct RMatrixFamily {
    int n = 0;                    // group order
    std::vector<Vec> R_, Rinv_;   // keyed a*n+b

    void allocate(int order) {
        n = order;
        R_.assign(static_cast<std::size_t>(n) * n, Vec());
        Rinv_.assign(static_cast<std::size_t>(n) * n, Vec());
    }
    const Vec &R(int a, int b) const { return R_[a * n + b]; }
    Vec &R(int a, int b) { return R_[a * n + b]; }
    const Vec &Rinv(int a, int b) const { return Rinv_[a * n + b]; }
    Vec &Rinv(int a, int b) { return Rinv_[a * n + b]; }
};

/// Ribbon elements θ_α ∈ H_α with cached inverses.
struct RibbonFamily {
    std::vector<Vec> theta, theta_inv;
};

/// Drinfeld elements u_α with inverses.
struct DrinfeldFamily {
    std::vector<Vec> u, uinv;
};

/// Swap the two legs of an element of H_a ⊗ H_b (dimensions given).
Vec swap_legs(const Vec &x, std::size_t d1, std::size_t d2);

/// R = 1⊗1 everywhere (valid on cocommutative H with trivial φ).
RMatrixFamily trivial_rmatrix(const TCoalg &H);

/// Fill any missing cached inverses by exact solving; throws Singular.
void ensure_rmatrix_inverses(const TCoalg &H, RMatrixFamily &R);
void ensure_ribbon_inverses(const TCoalg &H, RibbonFamily &T);

/// The four quasitriangularity axioms plus invertibility, exhaustively.
Report validate_rmatrix(const TCoalg &H, const RMatrixFamily &R);

/// u_α from R_{α,α⁻¹}; inverse via the closed formula, cross-checked against
/// exact solving (throws Singular on inconsistency).
DrinfeldFamily drinfeld_elements(const TCoalg &H, const RMatrixFamily &R);

/// The eight Drinfeld-element identities.
Report check_drinfeld_props(const TCoalg &H, const RMatrixFamily &R);

/// Ribbon conditions 1-4 for a candidate θ family.
Report validate_ribbon(const TCoalg &H, const RMatrixFamily &R,
                       const RibbonFamily &T);

/// The mirrored R family on mirror(H): R̄_{α,β} = (σ R_{β⁻¹,α⁻¹})⁻¹, with the
/// cached inverse obtained for free from the cached R̃.
RMatrixFamily mirror_rmatrix(const TCoalg &H, const RMatrixFamily &R);

}  // namespace hopf
