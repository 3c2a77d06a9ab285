#include "hopf/yd.hpp"

namespace hopf {

HModule regular_module(const TCoalg &H, int a) {
    HModule U;
    U.grade = a;
    U.dim = H.dim(a);
    U.action.resize(H.dim(a));
    for (std::size_t i = 0; i < H.dim(a); ++i)
        U.action[i] = H.components[a].left_mult(H.basis(a, i));
    return U;
}

namespace {

/// Δ_{V,λ}(e_c) as a list of coordinates over V⊗H_λ.
inline const Scalar &coact_at(const Matrix &co, std::size_t dl, std::size_t r,
                              std::size_t k, std::size_t c) {
    return co.at(r * dl + k, c);
}

}  // namespace

Report validate_yd(const TCoalg &H, const YDModule &V) {
    Report rep = validate_module(H, V.module);
    const int n = H.order();
    const int a = V.module.grade;
    const std::size_t nv = V.module.dim;
    bool shapes = static_cast<int>(V.coaction.size()) == n;
    if (shapes)
        for (int l = 0; l < n; ++l)
            if (V.coaction[l].rows() != nv * H.dim(l) ||
                V.coaction[l].cols() != nv)
                shapes = false;
    rep.add("yd.shape", idx({}), shapes, "coaction matrices malformed");
    if (!shapes || !rep.clean()) return rep;
    const FiniteGroup &G = H.group;

    // Coassociativity: (V⊗Δ_{λ1,λ2})∘Δ_{V,λ1λ2} = (Δ_{V,λ1}⊗id)∘Δ_{V,λ2}.
    for (int l1 = 0; l1 < n; ++l1)
        for (int l2 = 0; l2 < n; ++l2) {
            Matrix lhs = mat_mul(kron(Matrix::identity(nv), H.comul(l1, l2)),
                                 V.coaction[G.mul(l1, l2)]);
            Matrix rhs =
                mat_mul(kron(V.coaction[l1], Matrix::identity(H.dim(l2))),
                        V.coaction[l2]);
            rep.add("yd.coassoc", idx({l1, l2}), lhs == rhs,
                    "coaction fails coassociativity");
        }

    // Counit: (V⊗ε)∘Δ_{V,1} = id.
    {
        Matrix M(nv, nv);
        for (std::size_t c = 0; c < nv; ++c)
            for (std::size_t r = 0; r < nv; ++r)
                for (std::size_t k = 0; k < H.dim(0); ++k) {
                    const Scalar &s = coact_at(V.coaction[0], H.dim(0), r, k, c);
                    if (!s.is_zero()) M.at(r, c) += s * H.counit_.at(0, k);
                }
        rep.add("yd.counit", idx({}), M == Matrix::identity(nv),
                "coaction fails the counit law");
    }

    // Crossing, elementwise: h'v_(V) ⊗ h''v_(λ) =
    // (h''v)_(V) ⊗ (h''v)_(λ)·φ_{α⁻¹}(h') for h ∈ H_{αλ}.
    for (int l = 0; l < n; ++l) {
        int al = G.mul(a, l), ala = G.conj(l, a), ainv = G.inv(a);
        std::size_t dl = H.dim(l);
        for (std::size_t h = 0; h < H.dim(al); ++h) {
            bool ok = true;
            Vec hcL = H.comul(a, l).column(h);
            Vec hcR = H.comul(ala, a).column(h);
            for (std::size_t c = 0; c < nv && ok; ++c) {
                Vec lhs(nv * dl), rhs(nv * dl);
                for (std::size_t h1 = 0; h1 < H.dim(a); ++h1)
                    for (std::size_t h2 = 0; h2 < dl; ++h2) {
                        const Scalar &ch = hcL[h1 * dl + h2];
                        if (ch.is_zero()) continue;
                        for (std::size_t r = 0; r < nv; ++r)
                            for (std::size_t k = 0; k < dl; ++k) {
                                const Scalar &cv =
                                    coact_at(V.coaction[l], dl, r, k, c);
                                if (cv.is_zero()) continue;
                                Vec leg1 = V.module.action[h1].column(r);
                                Vec leg2 = H.mulvec(l, H.basis(l, h2),
                                                    H.basis(l, k));
                                Scalar cc = ch * cv;
                                for (std::size_t x = 0; x < nv; ++x) {
                                    if (leg1[x].is_zero()) continue;
                                    for (std::size_t y = 0; y < dl; ++y)
                                        if (!leg2[y].is_zero())
                                            lhs[x * dl + y] +=
                                                cc * leg1[x] * leg2[y];
                                }
                            }
                    }
                for (std::size_t p = 0; p < H.dim(ala); ++p) {
                    Vec fp = H.conj_apply(ainv, ala, H.basis(ala, p));
                    for (std::size_t q = 0; q < H.dim(a); ++q) {
                        const Scalar &ch = hcR[p * H.dim(a) + q];
                        if (ch.is_zero()) continue;
                        Vec hv = V.module.action[q].column(c);
                        for (std::size_t rp = 0; rp < nv; ++rp) {
                            if (hv[rp].is_zero()) continue;
                            for (std::size_t r = 0; r < nv; ++r)
                                for (std::size_t k = 0; k < dl; ++k) {
                                    const Scalar &cv =
                                        coact_at(V.coaction[l], dl, r, k, rp);
                                    if (cv.is_zero()) continue;
                                    Vec leg2 =
                                        H.mulvec(l, H.basis(l, k), fp);
                                    Scalar cc = ch * hv[rp] * cv;
                                    for (std::size_t y = 0; y < dl; ++y)
                                        if (!leg2[y].is_zero())
                                            rhs[r * dl + y] += cc * leg2[y];
                                }
                        }
                    }
                }
                if (!vec_eq(lhs, rhs)) ok = false;
            }
            rep.add("yd.crossing", idx({l, (long)h}), ok,
                    "crossed compatibility fails");
        }
    }
    return rep;
}

YDModule trivial_yd(const TCoalg &H, const HModule &U) {
    YDModule V;
    V.module = U;
    V.coaction.resize(H.order());
    for (int l = 0; l < H.order(); ++l) {
        Matrix M(U.dim * H.dim(l), U.dim);
        for (std::size_t r = 0; r < U.dim; ++r)
            for (std::size_t k = 0; k < H.dim(l); ++k)
                if (!H.unit(l)[k].is_zero())
                    M.at(r * H.dim(l) + k, r) = H.unit(l)[k];
        V.coaction[l] = M;
    }
    return V;
}

bool yd_equal(const YDModule &a, const YDModule &b) {
    if (!module_equal(a.module, b.module) ||
        a.coaction.size() != b.coaction.size())
        return false;
    for (std::size_t l = 0; l < a.coaction.size(); ++l)
        if (a.coaction[l] != b.coaction[l]) return false;
    return true;
}

YDModule yd_tensor(const TCoalg &H, const YDModule &V, const YDModule &W) {
    const int b = W.module.grade, bi = H.group.inv(b);
    const std::size_t nv = V.module.dim, nw = W.module.dim;
    YDModule T;
    T.module = tensor_modules(H, V.module, W.module);
    T.coaction.resize(H.order());
    for (int l = 0; l < H.order(); ++l) {
        int blb = H.group.conj(l, b);
        std::size_t dl = H.dim(l), dbl = H.dim(blb);
        Matrix M(nv * nw * dl, nv * nw);
        for (std::size_t c = 0; c < nv; ++c)
            for (std::size_t d = 0; d < nw; ++d) {
                std::size_t col = c * nw + d;
                for (std::size_t r = 0; r < nv; ++r)
                    for (std::size_t k = 0; k < dbl; ++k) {
                        const Scalar &cv =
                            V.coaction[blb].at(r * dbl + k, c);
                        if (cv.is_zero()) continue;
                        Vec fk = H.conj_apply(bi, blb, H.basis(blb, k));
                        for (std::size_t s = 0; s < nw; ++s)
                            for (std::size_t l2 = 0; l2 < dl; ++l2) {
                                const Scalar &cw =
                                    W.coaction[l].at(s * dl + l2, d);
                                if (cw.is_zero()) continue;
                                Vec leg = H.mulvec(l, H.basis(l, l2), fk);
                                Scalar cc = cv * cw;
                                for (std::size_t m = 0; m < dl; ++m)
                                    if (!leg[m].is_zero())
                                        M.at((r * nw + s) * dl + m, col) +=
                                            cc * leg[m];
                            }
                    }
            }
        T.coaction[l] = M;
    }
    return T;
}

YDModule yd_crossing(const TCoalg &H, int b, const YDModule &V) {
    const std::size_t nv = V.module.dim;
    YDModule W;
    W.module = crossing(H, b, V.module);
    W.coaction.resize(H.order());
    for (int l = 0; l < H.order(); ++l) {
        int src = H.group.conj(l, H.group.inv(b));  // b⁻¹λb
        std::size_t dl = H.dim(l), ds = H.dim(src);
        const Matrix &P = H.conj(b, src);  // φ_b: H_{b⁻¹λb} → H_λ
        Matrix M(nv * dl, nv);
        for (std::size_t c = 0; c < nv; ++c)
            for (std::size_t r = 0; r < nv; ++r)
                for (std::size_t k = 0; k < ds; ++k) {
                    const Scalar &cv = V.coaction[src].at(r * ds + k, c);
                    if (cv.is_zero()) continue;
                    for (std::size_t m = 0; m < dl; ++m)
                        if (!P.at(m, k).is_zero())
                            M.at(r * dl + m, c) += cv * P.at(m, k);
                }
        W.coaction[l] = M;
    }
    return W;
}

Matrix yd_braiding(const TCoalg &H, const YDModule &V, const YDModule &W) {
    const int b = W.module.grade, bi = H.group.inv(b);
    const std::size_t nv = V.module.dim, nw = W.module.dim, db = H.dim(bi);
    Matrix M(nw * nv, nv * nw);
    for (std::size_t c = 0; c < nv; ++c)
        for (std::size_t d = 0; d < nw; ++d) {
            std::size_t col = c * nw + d;
            for (std::size_t r = 0; r < nv; ++r)
                for (std::size_t k = 0; k < db; ++k) {
                    const Scalar &cv = V.coaction[bi].at(r * db + k, c);
                    if (cv.is_zero()) continue;
                    Vec sb = H.antipode_apply(bi, H.basis(bi, k));
                    Vec y = module_act(W.module, sb).column(d);
                    for (std::size_t x = 0; x < nw; ++x)
                        if (!y[x].is_zero()) M.at(x * nv + r, col) += cv * y[x];
                }
        }
    return M;
}

std::pair<Matrix, Matrix> halfbraiding_eval(const TCoalg &H, const YDModule &V,
                                            const HModule &X) {
    const int l = X.grade, li = H.group.inv(l);
    const std::size_t nv = V.module.dim, nx = X.dim, dl = H.dim(l),
                      dli = H.dim(li);
    Matrix S(nx * nv, nv * nx), Si(nv * nx, nx * nv);
    for (std::size_t c = 0; c < nv; ++c) {
        // σ(e_c ⊗ x) = s_{λ⁻¹}((e_c)_(λ⁻¹)) x ⊗ (e_c)_(V)
        for (std::size_t r = 0; r < nv; ++r)
            for (std::size_t k = 0; k < dli; ++k) {
                const Scalar &cv = V.coaction[li].at(r * dli + k, c);
                if (cv.is_zero()) continue;
                Matrix act =
                    module_act(X, H.antipode_apply(li, H.basis(li, k)));
                for (std::size_t i = 0; i < nx; ++i)
                    for (std::size_t x = 0; x < nx; ++x)
                        if (!act.at(x, i).is_zero())
                            S.at(x * nv + r, c * nx + i) += cv * act.at(x, i);
            }
        // σ⁻¹(y ⊗ e_c) = (e_c)_(V) ⊗ (e_c)_(λ) y
        for (std::size_t r = 0; r < nv; ++r)
            for (std::size_t k = 0; k < dl; ++k) {
                const Scalar &cv = V.coaction[l].at(r * dl + k, c);
                if (cv.is_zero()) continue;
                const Matrix &act = X.action[k];
                for (std::size_t i = 0; i < nx; ++i)
                    for (std::size_t x = 0; x < nx; ++x)
                        if (!act.at(x, i).is_zero())
                            Si.at(r * nx + x, i * nv + c) += cv * act.at(x, i);
            }
    }
    return {S, Si};
}

YDModule yd_from_halfbraiding(const TCoalg &H, const HModule &underlying,
                              const std::vector<Matrix> &sigma_inv_regular) {
    const std::size_t nv = underlying.dim;
    YDModule V;
    V.module = underlying;
    V.coaction.resize(H.order());
    for (int l = 0; l < H.order(); ++l) {
        std::size_t dl = H.dim(l);
        Matrix M(nv * dl, nv);
        for (std::size_t c = 0; c < nv; ++c) {
            Vec in(dl * nv);
            for (std::size_t i = 0; i < dl; ++i)
                if (!H.unit(l)[i].is_zero()) in[i * nv + c] = H.unit(l)[i];
            Vec out = hopf::apply(sigma_inv_regular[l], in);
            for (std::size_t t = 0; t < nv * dl; ++t)
                if (!out[t].is_zero()) M.at(t, c) = out[t];
        }
        V.coaction[l] = M;
    }
    return V;
}

HModule yd_to_ddouble(const TCoalg &H, const YDModule &V) {
    const int a = V.module.grade;
    auto off = dual_block_offsets(H);
    const std::size_t D = off.back(), nv = V.module.dim;
    HModule W;
    W.grade = a;
    W.dim = nv;
    W.action.resize(H.dim(a) * D);
    for (std::size_t i = 0; i < H.dim(a); ++i)
        for (int g = 0; g < H.order(); ++g) {
            std::size_t dg = H.dim(g);
            for (std::size_t j = 0; j < dg; ++j) {
                // e^{γ.j} ⊳ w = ⟨e^{γ.j}, w_(γ)⟩ w_(V)
                Matrix C(nv, nv);
                for (std::size_t r = 0; r < nv; ++r)
                    for (std::size_t c = 0; c < nv; ++c)
                        C.at(r, c) = V.coaction[g].at(r * dg + j, c);
                W.action[i * D + off[g] + j] =
                    mat_mul(C, V.module.action[i]);
            }
        }
    return W;
}

YDModule ddouble_to_yd(const TCoalg &H, const HModule &W) {
    const int a = W.grade;
    auto off = dual_block_offsets(H);
    const std::size_t D = off.back(), nv = W.dim;
    YDModule V;
    V.module.grade = a;
    V.module.dim = nv;
    V.module.action.resize(H.dim(a));
    for (std::size_t i = 0; i < H.dim(a); ++i) {
        // h acts as h⊛ε, where ε is the unit of the packed dual.
        Matrix M(nv, nv);
        for (std::size_t k = 0; k < H.dim(0); ++k) {
            const Scalar &e = H.counit_.at(0, k);
            if (e.is_zero()) continue;
            const Matrix &A = W.action[i * D + off[0] + k];
            for (std::size_t r = 0; r < nv; ++r)
                for (std::size_t c = 0; c < nv; ++c)
                    if (!A.at(r, c).is_zero()) M.at(r, c) += e * A.at(r, c);
        }
        V.module.action[i] = M;
    }
    V.coaction.resize(H.order());
    for (int l = 0; l < H.order(); ++l) {
        std::size_t dl = H.dim(l);
        Matrix M(nv * dl, nv);
        for (std::size_t i = 0; i < dl; ++i) {
            // (1_α ⊛ e^{λ.i}) v, tagged by the coleg e_{λ.i}.
            Matrix A(nv, nv);
            const Vec &unit_a = H.components[a].unit;
            for (std::size_t k = 0; k < H.dim(a); ++k) {
                const Scalar &u = unit_a[k];
                if (u.is_zero()) continue;
                const Matrix &B = W.action[k * D + off[l] + i];
                for (std::size_t r = 0; r < nv; ++r)
                    for (std::size_t c = 0; c < nv; ++c)
                        if (!B.at(r, c).is_zero())
                            A.at(r, c) += u * B.at(r, c);
            }
            for (std::size_t r = 0; r < nv; ++r)
                for (std::size_t c = 0; c < nv; ++c)
                    if (!A.at(r, c).is_zero()) M.at(r * dl + i, c) = A.at(r, c);
        }
        V.coaction[l] = M;
    }
    return V;
}

}  // namespace hopf
