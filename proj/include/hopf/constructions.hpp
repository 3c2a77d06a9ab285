#pragma once

#include "hopf/rmatrix.hpp"

namespace hopf {

/// A crossed Hopf group-coalgebra together with a quasitriangular structure.
struct QuasiTCoalg {
    TCoalg H;
    RMatrixFamily R;
};

/// A quasitriangular structure plus a ribbon family.
struct RibbonTCoalg {
    TCoalg H;
    RMatrixFamily R;
    RibbonFamily theta;
};

/// Mirror: components re-indexed by inverse grades, comultiplication twisted
/// by a conjugation, antipode composed with φ. Involutive up to bit equality.
TCoalg mirror(const TCoalg &H);

/// Mirror of a quasitriangular structure (R family mirrored alongside).
QuasiTCoalg mirror(const QuasiTCoalg &Q);

/// The packed dual with coopposite-style comultiplication: every component is
/// the full direct sum ⊕_β H*_β (basis grouped by β), the product dualizes Δ,
/// and the comultiplication dualizes the φ-twisted product.
TCoalg dual_coop(const TCoalg &H);

/// Block offsets of the β-graded summands inside ⊕_β H*_β: a vector of
/// group-order+1 entries whose last entry is the total dimension.
std::vector<std::size_t> dual_block_offsets(const TCoalg &H);

/// Quantum double: components H_α ⊗ (⊕_β H*_β) with the straightening
/// product, equipped with its canonical quasitriangular structure.
QuasiTCoalg drinfeld_double(const TCoalg &H);

/// Ribbon extension: each component doubled by a formal generator v_α with
/// v_α h = φ_α(h) v_α and v_α² = u_α s_{α⁻¹}(u_{α⁻¹}); carries the embedded
/// R family and the ribbon elements θ_α = v_α⁻¹.
RibbonTCoalg ribbon_extension(const QuasiTCoalg &Q);

}  // namespace hopf
