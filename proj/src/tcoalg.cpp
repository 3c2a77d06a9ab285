#include "hopf/tcoalg.hpp"

#include <functional>
#include <numeric>

namespace hopf {

Vec Component::mulvec(const Vec &x, const Vec &y) const {
    if (x.size() != dim || y.size() != dim)
        throw ShapeMismatch("component product size mismatch");
    Vec out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k) {
                const Scalar &s = mul.at(i, j, k);
                if (!s.is_zero()) out[k] += c * s;
            }
        }
    }
    return out;
}

Matrix Component::left_mult(const Vec &x) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec col = mulvec(x, basis(j));
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Matrix Component::right_mult(const Vec &x) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec col = mulvec(basis(j), x);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Vec Component::basis(std::size_t i) const {
    Vec v(dim);
    v[i] = Scalar::one();
    return v;
}

void TCoalg::allocate() {
    const int n = order();
    comul_.assign(static_cast<std::size_t>(n) * n, Matrix());
    antipode_.assign(n, Matrix());
    conj_.assign(static_cast<std::size_t>(n) * n, Matrix());
}

Scalar TCoalg::counit_apply(const Vec &x) const {
    Vec r = apply(counit_, x);
    return r[0];
}

void TCoalg::check_shapes() const {
    const int n = order();
    if (static_cast<int>(components.size()) != n)
        throw ShapeMismatch("component count != group order");
    for (int a = 0; a < n; ++a) {
        const Component &c = components[a];
        if (c.dim == 0) throw ShapeMismatch("zero-dimensional component");
        if (c.mul.d1() != c.dim || c.mul.d2() != c.dim || c.mul.d3() != c.dim)
            throw ShapeMismatch("structure-constant tensor shape");
        if (c.unit.size() != c.dim) throw ShapeMismatch("unit vector shape");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Matrix &d = comul(a, b);
            if (d.rows() != dim(a) * dim(b) || d.cols() != dim(group.mul(a, b)))
                throw ShapeMismatch("comultiplication shape at (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
        }
    if (counit_.rows() != 1 || counit_.cols() != dim(0))
        throw ShapeMismatch("counit shape");
    for (int a = 0; a < n; ++a)
        if (antipode(a).rows() != dim(group.inv(a)) || antipode(a).cols() != dim(a))
            throw ShapeMismatch("antipode shape at " + std::to_string(a));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            if (conj(b, a).rows() != dim(group.conj(a, b)) ||
                conj(b, a).cols() != dim(a))
                throw ShapeMismatch("conjugation shape at (" + std::to_string(b) +
                                    "," + std::to_string(a) + ")");
}

// ---- tensor product algebra ------------------------------------------------

TensorAlgebra::TensorAlgebra(const TCoalg &H, std::vector<int> grades)
    : H_(H), grades_(std::move(grades)) {
    dim_ = 1;
    for (int g : grades_) {
        dims_.push_back(H_.dim(g));
        dim_ *= H_.dim(g);
    }
}

Vec TensorAlgebra::unit() const {
    Vec u = H_.unit(grades_[0]);
    for (std::size_t l = 1; l < grades_.size(); ++l)
        u = kron_vec(u, H_.unit(grades_[l]));
    return u;
}

Vec TensorAlgebra::mul(const Vec &x, const Vec &y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw ShapeMismatch("tensor algebra product size mismatch");
    const std::size_t legs = grades_.size();
    Vec out(dim_);
    std::vector<std::size_t> xi(legs), yi(legs);
    for (std::size_t I = 0; I < dim_; ++I) {
        if (x[I].is_zero()) continue;
        std::size_t rem = I;
        for (std::size_t l = legs; l-- > 0;) {
            xi[l] = rem % dims_[l];
            rem /= dims_[l];
        }
        for (std::size_t J = 0; J < dim_; ++J) {
            if (y[J].is_zero()) continue;
            rem = J;
            for (std::size_t l = legs; l-- > 0;) {
                yi[l] = rem % dims_[l];
                rem /= dims_[l];
            }
            // Expand (e_{xi} · e_{yi}) leg by leg, skipping zero rows.
            std::function<void(std::size_t, std::size_t, const Scalar &)> rec =
                [&](std::size_t leg, std::size_t flat, const Scalar &c) {
                    if (leg == legs) {
                        out[flat] += c;
                        return;
                    }
                    const Tensor3 &t = H_.components[grades_[leg]].mul;
                    for (std::size_t k = 0; k < dims_[leg]; ++k) {
                        const Scalar &s = t.at(xi[leg], yi[leg], k);
                        if (s.is_zero()) continue;
                        rec(leg + 1, flat * dims_[leg] + k, c * s);
                    }
                };
            rec(0, 0, x[I] * y[J]);
        }
    }
    return out;
}

Matrix TensorAlgebra::left_mult(const Vec &x) const {
    Matrix m(dim_, dim_);
    Vec e(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        e[j] = Scalar::one();
        Vec col = mul(x, e);
        e[j] = Scalar::zero();
        for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Vec TensorAlgebra::inverse(const Vec &x) const {
    Vec inv = solve(left_mult(x), unit());
    if (!vec_eq(mul(inv, x), unit()))
        throw Singular("left inverse is not two-sided");
    return inv;
}

Vec insert_unit_leg(const TCoalg &H, const Vec &x,
                    const std::vector<std::size_t> &dims, std::size_t position,
                    int grade) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (x.size() != total) throw ShapeMismatch("insert_unit_leg size mismatch");
    const Vec &u = H.unit(grade);
    std::vector<std::size_t> newdims = dims;
    newdims.insert(newdims.begin() + static_cast<long>(position), u.size());
    std::size_t newtotal = total * u.size();
    Vec out(newtotal);
    std::vector<std::size_t> mi(dims.size());
    for (std::size_t I = 0; I < total; ++I) {
        if (x[I].is_zero()) continue;
        std::size_t rem = I;
        for (std::size_t l = dims.size(); l-- > 0;) {
            mi[l] = rem % dims[l];
            rem /= dims[l];
        }
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (u[j].is_zero()) continue;
            std::size_t flat = 0, l2 = 0;
            for (std::size_t l = 0; l < newdims.size(); ++l) {
                std::size_t ix = (l == position) ? j : mi[l2++];
                flat = flat * newdims[l] + ix;
            }
            out[flat] = x[I] * u[j];
        }
    }
    return out;
}

// ---- verifier ---------------------------------------------------------------

Report validate_tcoalg(const TCoalg &H) {
    H.check_shapes();
    Report rep;
    const int n = H.order();
    const FiniteGroup &G = H.group;

    rep.merge(G.validate());

    // Per-component algebra axioms.
    for (int a = 0; a < n; ++a) {
        const Component &C = H.components[a];
        const std::size_t d = C.dim;
        for (std::size_t i = 0; i < d; ++i) {
            rep.add("component.unit", idx({a, (long)i}),
                    vec_eq(C.mulvec(C.unit, C.basis(i)), C.basis(i)) &&
                        vec_eq(C.mulvec(C.basis(i), C.unit), C.basis(i)),
                    "unit is not two-sided");
            for (std::size_t j = 0; j < d; ++j) {
                Vec ij = C.mulvec(C.basis(i), C.basis(j));
                for (std::size_t k = 0; k < d; ++k)
                    rep.add("component.assoc", idx({a, (long)i, (long)j, (long)k}),
                            vec_eq(C.mulvec(ij, C.basis(k)),
                                   C.mulvec(C.basis(i),
                                            C.mulvec(C.basis(j), C.basis(k)))),
                            "(xy)z != x(yz)");
            }
        }
    }

    // Δ_{a,b} is an algebra morphism.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = G.mul(a, b);
            TensorAlgebra T(H, {a, b});
            rep.add("comul.unital", idx({a, b}),
                    vec_eq(H.comul_apply(a, b, H.unit(ab)), T.unit()),
                    "Δ(1) != 1⊗1");
            for (std::size_t i = 0; i < H.dim(ab); ++i)
                for (std::size_t j = 0; j < H.dim(ab); ++j) {
                    Vec lhs = H.comul_apply(
                        a, b, H.mulvec(ab, H.basis(ab, i), H.basis(ab, j)));
                    Vec rhs = T.mul(H.comul(a, b).column(i), H.comul(a, b).column(j));
                    rep.add("comul.morphism", idx({a, b, (long)i, (long)j}),
                            vec_eq(lhs, rhs), "Δ(xy) != Δ(x)Δ(y)");
                }
        }

    // Coassociativity (I⊗Δ_{b,c})∘Δ_{a,bc} = (Δ_{a,b}⊗I)∘Δ_{ab,c}.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int bc = G.mul(b, c), ab = G.mul(a, b), abc = G.mul(ab, c);
                for (std::size_t k = 0; k < H.dim(abc); ++k) {
                    // left: expand second leg
                    Vec x = H.comul_apply(a, bc, H.basis(abc, k));
                    Vec lhs(H.dim(a) * H.dim(b) * H.dim(c));
                    for (std::size_t i = 0; i < H.dim(a); ++i)
                        for (std::size_t m = 0; m < H.dim(bc); ++m) {
                            const Scalar &s = x[i * H.dim(bc) + m];
                            if (s.is_zero()) continue;
                            Vec inner = H.comul(b, c).column(m);
                            for (std::size_t t = 0; t < inner.size(); ++t)
                                if (!inner[t].is_zero())
                                    lhs[i * inner.size() + t] += s * inner[t];
                        }
                    // right: expand first leg
                    Vec y = H.comul_apply(ab, c, H.basis(abc, k));
                    Vec rhs(H.dim(a) * H.dim(b) * H.dim(c));
                    for (std::size_t m = 0; m < H.dim(ab); ++m)
                        for (std::size_t j = 0; j < H.dim(c); ++j) {
                            const Scalar &s = y[m * H.dim(c) + j];
                            if (s.is_zero()) continue;
                            Vec inner = H.comul(a, b).column(m);
                            for (std::size_t t = 0; t < inner.size(); ++t)
                                if (!inner[t].is_zero())
                                    rhs[t * H.dim(c) + j] += s * inner[t];
                        }
                    rep.add("comul.coassoc", idx({a, b, c, (long)k}),
                            vec_eq(lhs, rhs), "coassociativity fails");
                }
            }

    // Counit laws.
    for (int a = 0; a < n; ++a)
        for (std::size_t k = 0; k < H.dim(a); ++k) {
            Vec x = H.comul_apply(0, a, H.basis(a, k));
            Vec left(H.dim(a));
            for (std::size_t i = 0; i < H.dim(0); ++i)
                for (std::size_t j = 0; j < H.dim(a); ++j) {
                    const Scalar &s = x[i * H.dim(a) + j];
                    if (!s.is_zero()) left[j] += H.counit_.at(0, i) * s;
                }
            rep.add("counit.left", idx({a, (long)k}), vec_eq(left, H.basis(a, k)),
                    "(ε⊗id)Δ != id");
            Vec y = H.comul_apply(a, 0, H.basis(a, k));
            Vec right(H.dim(a));
            for (std::size_t i = 0; i < H.dim(a); ++i)
                for (std::size_t j = 0; j < H.dim(0); ++j) {
                    const Scalar &s = y[i * H.dim(0) + j];
                    if (!s.is_zero()) right[i] += s * H.counit_.at(0, j);
                }
            rep.add("counit.right", idx({a, (long)k}), vec_eq(right, H.basis(a, k)),
                    "(id⊗ε)Δ != id");
        }

    // Antipode laws: both composites H_1 → H_a equal η_a∘ε.
    for (int a = 0; a < n; ++a) {
        int ai = G.inv(a);
        for (std::size_t k = 0; k < H.dim(0); ++k) {
            Scalar eps = H.counit_apply(H.basis(0, k));
            Vec expect = vec_scale(eps, H.unit(a));
            Vec x = H.comul_apply(a, ai, H.basis(0, k));
            Vec lhs(H.dim(a));
            for (std::size_t i = 0; i < H.dim(a); ++i)
                for (std::size_t j = 0; j < H.dim(ai); ++j) {
                    const Scalar &s = x[i * H.dim(ai) + j];
                    if (s.is_zero()) continue;
                    Vec prod = H.mulvec(a, H.basis(a, i),
                                        H.antipode_apply(ai, H.basis(ai, j)));
                    lhs = vec_add(lhs, vec_scale(s, prod));
                }
            rep.add("antipode.left", idx({a, (long)k}), vec_eq(lhs, expect),
                    "μ∘(id⊗s)∘Δ != η∘ε");
            Vec y = H.comul_apply(ai, a, H.basis(0, k));
            Vec rhs(H.dim(a));
            for (std::size_t i = 0; i < H.dim(ai); ++i)
                for (std::size_t j = 0; j < H.dim(a); ++j) {
                    const Scalar &s = y[i * H.dim(a) + j];
                    if (s.is_zero()) continue;
                    Vec prod = H.mulvec(a, H.antipode_apply(ai, H.basis(ai, i)),
                                        H.basis(a, j));
                    rhs = vec_add(rhs, vec_scale(s, prod));
                }
            rep.add("antipode.right", idx({a, (long)k}), vec_eq(rhs, expect),
                    "μ∘(s⊗id)∘Δ != η∘ε");
        }
    }

    // Conjugation system.
    for (int a = 0; a < n; ++a)
        rep.add("conj.identity", idx({a}),
                H.conj(0, a) == Matrix::identity(H.dim(a)), "φ_1 != id");
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
            for (int a = 0; a < n; ++a) {
                int cac = G.conj(a, c);
                rep.add("conj.multiplicative", idx({b, c, a}),
                        mat_mul(H.conj(b, cac), H.conj(c, a)) ==
                            H.conj(G.mul(b, c), a),
                        "φ_b∘φ_c != φ_{bc}");
            }
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            int bab = G.conj(a, b);
            rep.add("conj.unital", idx({b, a}),
                    vec_eq(H.conj_apply(b, a, H.unit(a)), H.unit(bab)),
                    "φ(1) != 1");
            bool inv_ok = true;
            try {
                mat_inv(H.conj(b, a));
            } catch (const Singular &) {
                inv_ok = false;
            }
            rep.add("conj.invertible", idx({b, a}), inv_ok, "φ not invertible");
            for (std::size_t i = 0; i < H.dim(a); ++i)
                for (std::size_t j = 0; j < H.dim(a); ++j) {
                    Vec lhs = H.conj_apply(
                        b, a, H.mulvec(a, H.basis(a, i), H.basis(a, j)));
                    Vec rhs = H.mulvec(bab, H.conj(b, a).column(i),
                                       H.conj(b, a).column(j));
                    rep.add("conj.morphism", idx({b, a, (long)i, (long)j}),
                            vec_eq(lhs, rhs), "φ(xy) != φ(x)φ(y)");
                }
        }

    // (φ_c⊗φ_c)∘Δ_{a,b} = Δ_{cac⁻¹,cbc⁻¹}∘φ_c.
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = G.mul(a, b), ca = G.conj(a, c), cb = G.conj(b, c);
                for (std::size_t k = 0; k < H.dim(ab); ++k) {
                    Vec x = H.comul_apply(a, b, H.basis(ab, k));
                    Vec lhs(H.dim(ca) * H.dim(cb));
                    for (std::size_t i = 0; i < H.dim(a); ++i)
                        for (std::size_t j = 0; j < H.dim(b); ++j) {
                            const Scalar &s = x[i * H.dim(b) + j];
                            if (s.is_zero()) continue;
                            Vec pi = H.conj(c, a).column(i);
                            Vec pj = H.conj(c, b).column(j);
                            Vec kv = kron_vec(pi, pj);
                            lhs = vec_add(lhs, vec_scale(s, kv));
                        }
                    Vec rhs = H.comul_apply(ca, cb,
                                            H.conj_apply(c, ab, H.basis(ab, k)));
                    rep.add("conj.comul", idx({c, a, b, (long)k}), vec_eq(lhs, rhs),
                            "(φ⊗φ)∘Δ != Δ∘φ");
                }
            }

    // ε∘φ_c = ε on H_1.
    for (int c = 0; c < n; ++c)
        for (std::size_t k = 0; k < H.dim(0); ++k)
            rep.add("conj.counit", idx({c, (long)k}),
                    H.counit_apply(H.conj_apply(c, 0, H.basis(0, k))) ==
                        H.counit_apply(H.basis(0, k)),
                    "ε∘φ != ε");

    return rep;
}

Matrix iterated_comul(const TCoalg &H, const std::vector<int> &grades) {
    if (grades.empty()) throw ShapeMismatch("iterated_comul needs >= 1 grade");
    const FiniteGroup &G = H.group;
    if (grades.size() == 1) return Matrix::identity(H.dim(grades[0]));
    // suffix products of grades
    std::vector<int> suffix(grades.size());
    suffix.back() = grades.back();
    for (std::size_t i = grades.size() - 1; i-- > 0;)
        suffix[i] = G.mul(grades[i], suffix[i + 1]);
    Matrix acc = H.comul(grades[0], suffix[1]);
    std::size_t prefix_dim = H.dim(grades[0]);
    for (std::size_t i = 1; i + 1 < grades.size(); ++i) {
        acc = mat_mul(kron(Matrix::identity(prefix_dim),
                           H.comul(grades[i], suffix[i + 1])),
                      acc);
        prefix_dim *= H.dim(grades[i]);
    }
    return acc;
}

std::vector<Matrix> antipode_inverse(const TCoalg &H) {
    std::vector<Matrix> out;
    out.reserve(H.order());
    for (int a = 0; a < H.order(); ++a) {
        if (H.antipode(a).rows() != H.antipode(a).cols())
            throw Singular("antipode not square, cannot invert");
        out.push_back(mat_inv(H.antipode(a)));
    }
    return out;
}

GradedElement elem_mul(const TCoalg &H, const GradedElement &x,
                       const GradedElement &y) {
    if (x.grade != y.grade) throw GradeMismatch("elem_mul grade mismatch");
    return {x.grade, H.mulvec(x.grade, x.coords, y.coords)};
}

TCoalg coopposite(const TCoalg &H) {
    const FiniteGroup &G = H.group;
    const int n = H.order();
    std::vector<Matrix> sinv = antipode_inverse(H);
    TCoalg out;
    out.group = G;
    out.components.resize(n);
    out.allocate();
    for (int a = 0; a < n; ++a) out.components[a] = H.components[G.inv(a)];
    if (!H.basis_names.empty()) {
        out.basis_names.resize(n);
        for (int a = 0; a < n; ++a) out.basis_names[a] = H.basis_names[G.inv(a)];
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int bi = G.inv(b), ai = G.inv(a);
            out.comul(a, b) =
                mat_mul(flip(H.dim(bi), H.dim(ai)), H.comul(bi, ai));
        }
    out.counit_ = H.counit_;
    for (int a = 0; a < n; ++a) out.antipode(a) = sinv[a];
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) out.conj(b, a) = H.conj(b, G.inv(a));
    return out;
}

bool tcoalg_equal(const TCoalg &A, const TCoalg &B) {
    if (A.group.table() != B.group.table()) return false;
    const int n = A.order();
    for (int a = 0; a < n; ++a) {
        if (A.dim(a) != B.dim(a)) return false;
        if (!(A.components[a].mul == B.components[a].mul)) return false;
        if (!vec_eq(A.components[a].unit, B.components[a].unit)) return false;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (A.comul(a, b) != B.comul(a, b)) return false;
    if (A.counit_ != B.counit_) return false;
    for (int a = 0; a < n; ++a)
        if (A.antipode(a) != B.antipode(a)) return false;
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            if (A.conj(b, a) != B.conj(b, a)) return false;
    return true;
}

}  // namespace hopf
