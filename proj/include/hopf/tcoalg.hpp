#pragma once

#include <string>
#include <vector>

#include "hopf/group.hpp"
#include "hopf/linalg.hpp"

namespace hopf {

struct GradeMismatch : std::runtime_error {
    explicit GradeMismatch(const std::string &what) : std::runtime_error(what) {}
};

/// One unital associative algebra H_α given by structure constants:
/// e_i · e_j = Σ_k mul(i,j,k) e_k, with unit coordinates `unit`.
struct Component {
    std::size_t dim = 0;
    Tensor3 mul;
    Vec unit;

    /// Product of two coordinate vectors in this algebra.
    Vec mulvec(const Vec &x, const Vec &y) const;
    /// Matrix of left multiplication by x.
    Matrix left_mult(const Vec &x) const;
    /// Matrix of right multiplication by x.
    Matrix right_mult(const Vec &x) const;
    /// Basis vector.
    Vec basis(std::size_t i) const;
};

/// An element h ∈ H_grade in coordinates.
struct GradedElement {
    int grade = 0;
    Vec coords;
};

/// A crossed Hopf group-coalgebra over a finite group:
///  - components H_α (α running over the group),
///  - comultiplications Δ_{α,β}: H_{αβ} → H_α ⊗ H_β,
///  - counit ε on H_1,
///  - antipodes s_α: H_α → H_{α⁻¹},
///  - conjugations φ_β: H_α → H_{βαβ⁻¹}.
/// All maps are stored as matrices in the fixed component bases; tensor legs
/// are ordered left-factor-major throughout.
class TCoalg {
public:
    FiniteGroup group;
    std::vector<Component> components;
    std::vector<Matrix> comul_;     // (a,b) at a*n+b: d_a·d_b × d_{ab}
    Matrix counit_;                 // 1 × d_1
    std::vector<Matrix> antipode_;  // a: d_{a⁻¹} × d_a
    std::vector<Matrix> conj_;      // (b,a) at b*n+a: φ_b on H_a
    /// Optional display names per component basis vector (empty = e0,e1,...).
    std::vector<std::vector<std::string>> basis_names;

    int order() const { return group.order(); }
    std::size_t dim(int a) const { return components[a].dim; }

    const Matrix &comul(int a, int b) const { return comul_[a * order() + b]; }
    Matrix &comul(int a, int b) { return comul_[a * order() + b]; }
    const Matrix &antipode(int a) const { return antipode_[a]; }
    Matrix &antipode(int a) { return antipode_[a]; }
    const Matrix &conj(int b, int a) const { return conj_[b * order() + a]; }
    Matrix &conj(int b, int a) { return conj_[b * order() + a]; }

    void allocate();  // size comul_/antipode_/conj_ after components are set

    Vec unit(int a) const { return components[a].unit; }
    Vec basis(int a, std::size_t i) const { return components[a].basis(i); }
    Vec mulvec(int a, const Vec &x, const Vec &y) const {
        return components[a].mulvec(x, y);
    }
    Scalar counit_apply(const Vec &x) const;
    Vec comul_apply(int a, int b, const Vec &x) const {
        return apply(comul(a, b), x);
    }
    Vec antipode_apply(int a, const Vec &x) const { return apply(antipode(a), x); }
    Vec conj_apply(int b, int a, const Vec &x) const {
        return apply(conj(b, a), x);
    }

    /// Throws ShapeMismatch unless every stored matrix conforms to the grading.
    void check_shapes() const;
};

/// Product algebra H_{g1} ⊗ ... ⊗ H_{gk} on lexicographically ordered basis.
class TensorAlgebra {
public:
    TensorAlgebra(const TCoalg &H, std::vector<int> grades);

    std::size_t dim() const { return dim_; }
    Vec unit() const;
    Vec mul(const Vec &x, const Vec &y) const;
    Matrix left_mult(const Vec &x) const;
    /// Two-sided inverse; throws Singular.
    Vec inverse(const Vec &x) const;

private:
    const TCoalg &H_;
    std::vector<int> grades_;
    std::vector<std::size_t> dims_;
    std::size_t dim_;
};

/// Insert the unit of H_{grade} as a new tensor leg at `position` into an
/// element of a tensor product (dims = leg dimensions before insertion).
Vec insert_unit_leg(const TCoalg &H, const Vec &x,
                    const std::vector<std::size_t> &dims, std::size_t position,
                    int grade);

// ---- operations -----------------------------------------------------------

/// Exhaustive Hopf-level axiom verification (associativity/units, Δ algebra
/// morphism, coassociativity, counit, antipode, φ system).
Report validate_tcoalg(const TCoalg &H);

/// Left-nested iterated comultiplication H_{g1···gk} → H_{g1}⊗···⊗H_{gk}.
Matrix iterated_comul(const TCoalg &H, const std::vector<int> &grades);

/// (s_α)⁻¹ for every α; throws Singular when some s_α is not bijective.
std::vector<Matrix> antipode_inverse(const TCoalg &H);

GradedElement elem_mul(const TCoalg &H, const GradedElement &x,
                       const GradedElement &y);

/// Coopposite: grades inverted, comultiplication swap-composed, antipode
/// inverted.
TCoalg coopposite(const TCoalg &H);

/// Bit-exact structural equality.
bool tcoalg_equal(const TCoalg &a, const TCoalg &b);

}  // namespace hopf
