#include "hopf/constructions.hpp"

namespace hopf {

namespace {

std::string base_name(const TCoalg &H, int a, std::size_t i) {
    if (static_cast<int>(H.basis_names.size()) > a &&
        i < H.basis_names[a].size() && !H.basis_names[a][i].empty())
        return H.basis_names[a][i];
    return "e" + std::to_string(i);
}

}  // namespace

TCoalg mirror(const TCoalg &H) {
    const int n = H.order();
    const FiniteGroup &G = H.group;
    TCoalg M;
    M.group = G;
    M.components.resize(n);
    M.basis_names.resize(n);
    for (int a = 0; a < n; ++a) {
        M.components[a] = H.components[G.inv(a)];
        if (static_cast<int>(H.basis_names.size()) > G.inv(a))
            M.basis_names[a] = H.basis_names[G.inv(a)];
    }
    M.allocate();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int bi = G.inv(b);
            int g = G.conj(G.inv(a), bi);  // β⁻¹α⁻¹β
            M.comul(a, b) = mat_mul(
                kron(H.conj(b, g), Matrix::identity(H.dim(bi))), H.comul(g, bi));
        }
    M.counit_ = H.counit_;
    for (int a = 0; a < n; ++a)
        M.antipode(a) = mat_mul(H.conj(a, a), H.antipode(G.inv(a)));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) M.conj(b, a) = H.conj(b, G.inv(a));
    M.check_shapes();
    return M;
}

QuasiTCoalg mirror(const QuasiTCoalg &Q) {
    QuasiTCoalg out;
    out.H = mirror(Q.H);
    RMatrixFamily R = Q.R;
    ensure_rmatrix_inverses(Q.H, R);
    out.R = mirror_rmatrix(Q.H, R);
    return out;
}

std::vector<std::size_t> dual_block_offsets(const TCoalg &H) {
    std::vector<std::size_t> off(H.order() + 1, 0);
    for (int b = 0; b < H.order(); ++b) off[b + 1] = off[b] + H.dim(b);
    return off;
}

namespace {

/// The algebra ⊕_β H*_β with convolution product ⟨fg,x⟩ = ⟨f,x'⟩⟨g,x''⟩ and
/// unit ε (sitting in the β = 1 block).
Component dual_component(const TCoalg &H, const std::vector<std::size_t> &off) {
    const int n = H.order();
    const std::size_t D = off.back();
    Component C;
    C.dim = D;
    C.mul = Tensor3(D, D, D);
    C.unit = Vec(D);
    for (int g = 0; g < n; ++g)
        for (int d = 0; d < n; ++d) {
            int gd = H.group.mul(g, d);
            const Matrix &dm = H.comul(g, d);
            for (std::size_t a = 0; a < H.dim(g); ++a)
                for (std::size_t b = 0; b < H.dim(d); ++b)
                    for (std::size_t m = 0; m < H.dim(gd); ++m) {
                        const Scalar &s = dm.at(a * H.dim(d) + b, m);
                        if (!s.is_zero())
                            C.mul.at(off[g] + a, off[d] + b, off[gd] + m) = s;
                    }
        }
    for (std::size_t k = 0; k < H.dim(0); ++k)
        C.unit[off[0] + k] = H.counit_.at(0, k);
    return C;
}

/// Comultiplication of the packed dual, dual to (x,y) ↦ y·φ_{b⁻¹}(x).
/// First leg lands in the bγb⁻¹ block, second in the γ block.
Matrix mdc_comul(const TCoalg &H, const std::vector<std::size_t> &off, int b) {
    const std::size_t D = off.back();
    Matrix M(D * D, D);
    int bi = H.group.inv(b);
    for (int g = 0; g < H.order(); ++g) {
        int g2 = H.group.conj(g, b);
        for (std::size_t i = 0; i < H.dim(g2); ++i) {
            Vec fx = H.conj_apply(bi, g2, H.basis(g2, i));
            for (std::size_t j = 0; j < H.dim(g); ++j) {
                Vec prod = H.mulvec(g, H.basis(g, j), fx);
                for (std::size_t k = 0; k < H.dim(g); ++k)
                    if (!prod[k].is_zero())
                        M.at((off[g2] + i) * D + (off[g] + j), off[g] + k) =
                            prod[k];
            }
        }
    }
    return M;
}

/// f ↦ f∘φ_{b⁻¹}, shifting the γ block to the bγb⁻¹ block.
Matrix mdc_conj(const TCoalg &H, const std::vector<std::size_t> &off, int b) {
    const std::size_t D = off.back();
    Matrix M(D, D);
    int bi = H.group.inv(b);
    for (int g = 0; g < H.order(); ++g) {
        int g2 = H.group.conj(g, b);
        const Matrix &P = H.conj(bi, g2);  // d_γ × d_{bγb⁻¹}
        for (std::size_t k = 0; k < H.dim(g); ++k)
            for (std::size_t i = 0; i < H.dim(g2); ++i)
                if (!P.at(k, i).is_zero())
                    M.at(off[g2] + i, off[g] + k) = P.at(k, i);
    }
    return M;
}

/// f ↦ f∘φ_{a⁻¹}∘(s_{aγa⁻¹})⁻¹, shifting the γ block to the aγ⁻¹a⁻¹ block.
Matrix mdc_antipode(const TCoalg &H, const std::vector<std::size_t> &off,
                    const std::vector<Matrix> &sinv, int a) {
    const std::size_t D = off.back();
    Matrix M(D, D);
    int ai = H.group.inv(a);
    for (int g = 0; g < H.order(); ++g) {
        int mid = H.group.conj(g, a);                   // aγa⁻¹
        int tgt = H.group.conj(H.group.inv(g), a);      // aγ⁻¹a⁻¹
        Matrix B = mat_mul(H.conj(ai, mid), sinv[mid]);  // d_γ × d_tgt
        for (std::size_t k = 0; k < H.dim(g); ++k)
            for (std::size_t i = 0; i < H.dim(tgt); ++i)
                if (!B.at(k, i).is_zero()) M.at(off[tgt] + i, off[g] + k) = B.at(k, i);
    }
    return M;
}

}  // namespace

TCoalg dual_coop(const TCoalg &H) {
    const int n = H.order();
    auto off = dual_block_offsets(H);
    const std::size_t D = off.back();
    std::vector<Matrix> sinv = antipode_inverse(H);

    TCoalg out;
    out.group = H.group;
    Component C = dual_component(H, off);
    out.components.assign(n, C);
    out.basis_names.assign(n, {});
    for (int g = 0; g < n; ++g)
        for (std::size_t i = 0; i < H.dim(g); ++i)
            out.basis_names[0].push_back("f" + std::to_string(g) + "." +
                                         base_name(H, g, i));
    for (int a = 1; a < n; ++a) out.basis_names[a] = out.basis_names[0];
    out.allocate();

    std::vector<Matrix> comuls(n), conjs(n), antis(n);
    for (int b = 0; b < n; ++b) {
        comuls[b] = mdc_comul(H, off, b);
        conjs[b] = mdc_conj(H, off, b);
        antis[b] = mdc_antipode(H, off, sinv, b);
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            out.comul(a, b) = comuls[b];
            out.conj(b, a) = conjs[b];
        }
        out.antipode(a) = antis[a];
    }
    Matrix eps(1, D);
    for (int g = 0; g < n; ++g)
        for (std::size_t k = 0; k < H.dim(g); ++k)
            eps.at(0, off[g] + k) = H.unit(g)[k];
    out.counit_ = eps;
    out.check_shapes();
    return out;
}

QuasiTCoalg drinfeld_double(const TCoalg &H) {
    const int n = H.order();
    const FiniteGroup &G = H.group;
    auto off = dual_block_offsets(H);
    const std::size_t D = off.back();
    Component dualC = dual_component(H, off);
    std::vector<Matrix> sinv = antipode_inverse(H);
    std::vector<Matrix> mcom(n), mconj(n), manti(n);
    for (int b = 0; b < n; ++b) {
        mcom[b] = mdc_comul(H, off, b);
        mconj[b] = mdc_conj(H, off, b);
        manti[b] = mdc_antipode(H, off, sinv, b);
    }

    QuasiTCoalg out;
    TCoalg &Dc = out.H;
    Dc.group = G;
    Dc.components.resize(n);
    Dc.basis_names.resize(n);

    std::vector<std::string> dual_names;
    for (int g = 0; g < n; ++g)
        for (std::size_t j = 0; j < H.dim(g); ++j)
            dual_names.push_back("f" + std::to_string(g) + "." +
                                 base_name(H, g, j));

    // Product: (h⊛f)(k⊛g) = h₍₂₎k ⊛ f·⟨g, (s_δ)⁻¹(h₍₃₎)·—·φ_{α⁻¹}(h₍₁₎)⟩,
    // with h cut by Δ_{αδα⁻¹,α,δ⁻¹} when g lies in the δ block.
    for (int a = 0; a < n; ++a) {
        const std::size_t da = H.dim(a), dd = da * D;
        Component C;
        C.dim = dd;
        C.mul = Tensor3(dd, dd, dd);
        C.unit = kron_vec(H.unit(a), dualC.unit);
        std::vector<Matrix> it3(n);
        for (int d = 0; d < n; ++d)
            it3[d] = iterated_comul(H, {G.conj(d, a), a, G.inv(d)});
        for (std::size_t i = 0; i < da; ++i)
            for (int d = 0; d < n; ++d) {
                const std::size_t d1 = H.dim(G.conj(d, a)), d3 = H.dim(G.inv(d)),
                                  dg = H.dim(d);
                Vec cut = it3[d].column(i);
                for (std::size_t bI = 0; bI < dg; ++bI)
                    for (std::size_t m = 0; m < da; ++m) {
                        const std::size_t row2 = m * D + off[d] + bI;
                        // out indexed by (γ,aI) of the first factor's
                        // functional leg, accumulated per (p,q,r) cut term.
                        std::vector<Vec> outs(D, Vec());
                        for (std::size_t p = 0; p < d1; ++p)
                            for (std::size_t r = 0; r < d3; ++r) {
                                Vec z1 = sinv[d].column(r);
                                Vec z2 =
                                    H.conj(G.inv(a), G.conj(d, a)).column(p);
                                Vec t(D);
                                bool any = false;
                                for (std::size_t j = 0; j < dg; ++j) {
                                    Vec y = H.mulvec(
                                        d, H.mulvec(d, z1, H.basis(d, j)), z2);
                                    t[off[d] + j] = y[bI];
                                    if (!y[bI].is_zero()) any = true;
                                }
                                if (!any) continue;
                                for (std::size_t q = 0; q < da; ++q) {
                                    const Scalar &c =
                                        cut[(p * da + q) * d3 + r];
                                    if (c.is_zero()) continue;
                                    Vec hp = H.mulvec(a, H.basis(a, q),
                                                      H.basis(a, m));
                                    for (std::size_t f1 = 0; f1 < D; ++f1) {
                                        Vec fb(D);
                                        fb[f1] = Scalar::one();
                                        Vec fp = dualC.mulvec(fb, t);
                                        if (vec_is_zero(fp)) continue;
                                        if (outs[f1].empty())
                                            outs[f1] = Vec(dd);
                                        for (std::size_t k = 0; k < da; ++k) {
                                            if (hp[k].is_zero()) continue;
                                            Scalar ck = c * hp[k];
                                            for (std::size_t l = 0; l < D; ++l)
                                                if (!fp[l].is_zero())
                                                    outs[f1][k * D + l] +=
                                                        ck * fp[l];
                                        }
                                    }
                                }
                            }
                        for (std::size_t f1 = 0; f1 < D; ++f1) {
                            if (outs[f1].empty()) continue;
                            for (std::size_t k = 0; k < dd; ++k)
                                if (!outs[f1][k].is_zero())
                                    C.mul.at(i * D + f1, row2, k) = outs[f1][k];
                        }
                    }
            }
        Dc.components[a] = C;
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t f = 0; f < D; ++f)
                Dc.basis_names[a].push_back(base_name(H, a, i) + "*" +
                                            dual_names[f]);
    }
    Dc.allocate();

    // Comultiplication: Δ(h⊛F) = (h₍₁₎⊛F₍₁₎)⊗(h₍₂₎⊛F₍₂₎) with F cut by the
    // packed-dual comultiplication at the second grade.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = G.mul(a, b);
            std::size_t dda = H.dim(a) * D, ddb = H.dim(b) * D;
            Matrix M(dda * ddb, H.dim(ab) * D);
            for (std::size_t i = 0; i < H.dim(ab); ++i) {
                Vec hc = H.comul(a, b).column(i);
                for (std::size_t f = 0; f < D; ++f) {
                    Vec fc = mcom[b].column(f);
                    std::size_t col = i * D + f;
                    for (std::size_t i1 = 0; i1 < H.dim(a); ++i1)
                        for (std::size_t i2 = 0; i2 < H.dim(b); ++i2) {
                            const Scalar &ch = hc[i1 * H.dim(b) + i2];
                            if (ch.is_zero()) continue;
                            for (std::size_t f1 = 0; f1 < D; ++f1)
                                for (std::size_t f2 = 0; f2 < D; ++f2) {
                                    const Scalar &cf = fc[f1 * D + f2];
                                    if (cf.is_zero()) continue;
                                    M.at((i1 * D + f1) * ddb + (i2 * D + f2),
                                         col) += ch * cf;
                                }
                        }
                }
            }
            Dc.comul(a, b) = M;
        }

    // Counit: ε(h)·⟨f, 1⟩.
    Matrix eps(1, H.dim(0) * D);
    for (std::size_t i = 0; i < H.dim(0); ++i) {
        const Scalar &e = H.counit_.at(0, i);
        if (e.is_zero()) continue;
        for (int g = 0; g < n; ++g)
            for (std::size_t k = 0; k < H.dim(g); ++k)
                eps.at(0, i * D + off[g] + k) = e * H.unit(g)[k];
    }
    Dc.counit_ = eps;

    // Conjugation: φ_β acts on both factors.
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) Dc.conj(b, a) = kron(H.conj(b, a), mconj[b]);

    // Antipode: s(h⊛F) = (s(h)⊛ε)·(1⊛s*(F)), a product in the α⁻¹ component.
    for (int a = 0; a < n; ++a) {
        int ai = G.inv(a);
        std::size_t dsrc = H.dim(a) * D, dtgt = H.dim(ai) * D;
        Matrix M(dtgt, dsrc);
        const Component &Ct = Dc.components[ai];
        for (std::size_t i = 0; i < H.dim(a); ++i) {
            Vec sh = H.antipode(a).column(i);
            Vec v1(dtgt);
            for (std::size_t k = 0; k < H.dim(ai); ++k) {
                if (sh[k].is_zero()) continue;
                for (std::size_t l = 0; l < D; ++l)
                    if (!dualC.unit[l].is_zero())
                        v1[k * D + l] = sh[k] * dualC.unit[l];
            }
            for (std::size_t f = 0; f < D; ++f) {
                Vec sf = manti[a].column(f);
                Vec v2(dtgt);
                for (std::size_t k = 0; k < H.dim(ai); ++k) {
                    if (H.unit(ai)[k].is_zero()) continue;
                    for (std::size_t l = 0; l < D; ++l)
                        if (!sf[l].is_zero())
                            v2[k * D + l] = H.unit(ai)[k] * sf[l];
                }
                Vec prod = Ct.mulvec(v1, v2);
                for (std::size_t t = 0; t < dtgt; ++t)
                    if (!prod[t].is_zero()) M.at(t, i * D + f) = prod[t];
            }
        }
        Dc.antipode(a) = M;
    }
    Dc.check_shapes();

    // Canonical R: R_{α,β} = Σ_i (1_α ⊛ e^{β⁻¹.i}) ⊗ (s_{β⁻¹}(e_{β⁻¹.i}) ⊛ ε),
    // whose inverse replaces s by the identity at grade β.
    out.R.allocate(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int bi = G.inv(b);
            std::size_t dda = H.dim(a) * D, ddb = H.dim(b) * D;
            Vec R(dda * ddb), Ri(dda * ddb);
            for (std::size_t i = 0; i < H.dim(bi); ++i) {
                Vec leg1(dda);
                for (std::size_t k = 0; k < H.dim(a); ++k)
                    if (!H.unit(a)[k].is_zero())
                        leg1[k * D + off[bi] + i] = H.unit(a)[k];
                Vec sh = H.antipode(bi).column(i);
                Vec leg2(ddb);
                for (std::size_t k = 0; k < H.dim(b); ++k) {
                    if (sh[k].is_zero()) continue;
                    for (std::size_t l = 0; l < D; ++l)
                        if (!dualC.unit[l].is_zero())
                            leg2[k * D + l] = sh[k] * dualC.unit[l];
                }
                R = vec_add(R, kron_vec(leg1, leg2));
            }
            for (std::size_t i = 0; i < H.dim(b); ++i) {
                Vec leg1(dda);
                for (std::size_t k = 0; k < H.dim(a); ++k)
                    if (!H.unit(a)[k].is_zero())
                        leg1[k * D + off[b] + i] = H.unit(a)[k];
                Vec leg2(ddb);
                for (std::size_t l = 0; l < D; ++l)
                    if (!dualC.unit[l].is_zero())
                        leg2[i * D + l] = dualC.unit[l];
                Ri = vec_add(Ri, kron_vec(leg1, leg2));
            }
            out.R.R(a, b) = R;
            out.R.Rinv(a, b) = Ri;
        }
    return out;
}

RibbonTCoalg ribbon_extension(const QuasiTCoalg &Q) {
    const TCoalg &H = Q.H;
    const int n = H.order();
    const FiniteGroup &G = H.group;
    RMatrixFamily R = Q.R;
    ensure_rmatrix_inverses(H, R);
    DrinfeldFamily Dr = drinfeld_elements(H, R);

    std::vector<Vec> w(n), winv(n);
    for (int a = 0; a < n; ++a) {
        int ai = G.inv(a);
        w[a] = H.mulvec(a, Dr.u[a], H.antipode_apply(ai, Dr.u[ai]));
        const Component &C = H.components[a];
        winv[a] = solve(C.left_mult(w[a]), C.unit);
        if (!vec_eq(C.mulvec(winv[a], w[a]), C.unit))
            throw Singular("u·s(u) has no two-sided inverse");
    }

    RibbonTCoalg out;
    TCoalg &E = out.H;
    E.group = G;
    E.components.resize(n);
    E.basis_names.resize(n);

    // Product: (h + k v)(h' + k' v) = (hh' + k φ(k') w) + (hk' + k φ(h')) v.
    for (int a = 0; a < n; ++a) {
        const std::size_t d = H.dim(a), dd = 2 * d;
        Component C;
        C.dim = dd;
        C.mul = Tensor3(dd, dd, dd);
        C.unit = Vec(dd);
        for (std::size_t k = 0; k < d; ++k) C.unit[k] = H.unit(a)[k];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vec c1 = H.mulvec(a, H.basis(a, i), H.basis(a, j));
                Vec pj = H.conj_apply(a, a, H.basis(a, j));
                Vec c2 = H.mulvec(a, H.basis(a, i), pj);
                Vec c3 = H.mulvec(a, c2, w[a]);
                for (std::size_t k = 0; k < d; ++k) {
                    if (!c1[k].is_zero()) {
                        C.mul.at(i, j, k) = c1[k];
                        C.mul.at(i, d + j, d + k) = c1[k];
                    }
                    if (!c2[k].is_zero()) C.mul.at(d + i, j, d + k) = c2[k];
                    if (!c3[k].is_zero()) C.mul.at(d + i, d + j, k) = c3[k];
                }
            }
        E.components[a] = C;
        for (std::size_t i = 0; i < d; ++i)
            E.basis_names[a].push_back(base_name(H, a, i));
        for (std::size_t i = 0; i < d; ++i)
            E.basis_names[a].push_back(base_name(H, a, i) + ".v");
    }
    E.allocate();

    // Δ(h) is inherited; Δ(k v) expands v through the two R̃ families.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = G.mul(a, b), abai = G.conj(b, a), ainv = G.inv(a);
            std::size_t da = H.dim(a), db = H.dim(b), dab = H.dim(ab);
            Matrix M(4 * da * db, 2 * dab);
            for (std::size_t i = 0; i < dab; ++i) {
                Vec hc = H.comul(a, b).column(i);
                for (std::size_t i1 = 0; i1 < da; ++i1)
                    for (std::size_t i2 = 0; i2 < db; ++i2) {
                        const Scalar &c = hc[i1 * db + i2];
                        if (!c.is_zero()) M.at(i1 * 2 * db + i2, i) = c;
                    }
                const Vec &A = R.Rinv(a, b);
                const Vec &B = R.Rinv(abai, a);
                Vec outv(da * db);
                for (std::size_t k1 = 0; k1 < da; ++k1)
                    for (std::size_t k2 = 0; k2 < db; ++k2) {
                        const Scalar &ck = hc[k1 * db + k2];
                        if (ck.is_zero()) continue;
                        for (std::size_t aI = 0; aI < da; ++aI)
                            for (std::size_t bJ = 0; bJ < db; ++bJ) {
                                const Scalar &rA = A[aI * db + bJ];
                                if (rA.is_zero()) continue;
                                for (std::size_t p = 0; p < H.dim(abai); ++p)
                                    for (std::size_t q = 0; q < da; ++q) {
                                        const Scalar &rB = B[p * da + q];
                                        if (rB.is_zero()) continue;
                                        Vec l1 = H.mulvec(
                                            a,
                                            H.mulvec(a, H.basis(a, k1),
                                                     H.basis(a, aI)),
                                            H.basis(a, q));
                                        Vec l2 = H.mulvec(
                                            b,
                                            H.mulvec(b, H.basis(b, k2),
                                                     H.basis(b, bJ)),
                                            H.conj_apply(ainv, abai,
                                                         H.basis(abai, p)));
                                        Scalar cc = ck * rA * rB;
                                        for (std::size_t x = 0; x < da; ++x) {
                                            if (l1[x].is_zero()) continue;
                                            for (std::size_t y = 0; y < db; ++y)
                                                if (!l2[y].is_zero())
                                                    outv[x * db + y] +=
                                                        cc * l1[x] * l2[y];
                                        }
                                    }
                            }
                    }
                for (std::size_t x = 0; x < da; ++x)
                    for (std::size_t y = 0; y < db; ++y)
                        if (!outv[x * db + y].is_zero())
                            M.at((da + x) * 2 * db + (db + y), dab + i) =
                                outv[x * db + y];
            }
            E.comul(a, b) = M;
        }

    Matrix eps(1, 2 * H.dim(0));
    for (std::size_t i = 0; i < H.dim(0); ++i) {
        eps.at(0, i) = H.counit_.at(0, i);
        eps.at(0, H.dim(0) + i) = H.counit_.at(0, i);
    }
    E.counit_ = eps;

    for (int a = 0; a < n; ++a) {
        int ai = G.inv(a);
        std::size_t ds = H.dim(a), dt = H.dim(ai);
        Matrix M(2 * dt, 2 * ds);
        const Matrix &S = H.antipode(a);
        Matrix Sv = mat_mul(S, H.conj(ai, a));
        for (std::size_t r = 0; r < dt; ++r)
            for (std::size_t c = 0; c < ds; ++c) {
                if (!S.at(r, c).is_zero()) M.at(r, c) = S.at(r, c);
                if (!Sv.at(r, c).is_zero()) M.at(dt + r, ds + c) = Sv.at(r, c);
            }
        E.antipode(a) = M;
    }

    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            int t = G.conj(a, b);
            std::size_t ds = H.dim(a), dt = H.dim(t);
            Matrix M(2 * dt, 2 * ds);
            const Matrix &P = H.conj(b, a);
            for (std::size_t r = 0; r < dt; ++r)
                for (std::size_t c = 0; c < ds; ++c)
                    if (!P.at(r, c).is_zero()) {
                        M.at(r, c) = P.at(r, c);
                        M.at(dt + r, ds + c) = P.at(r, c);
                    }
            E.conj(b, a) = M;
        }
    E.check_shapes();

    // R lives in the underlying (h-part) subalgebra.
    out.R.allocate(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::size_t da = H.dim(a), db = H.dim(b);
            Vec Re(4 * da * db), Ie(4 * da * db);
            for (std::size_t i = 0; i < da; ++i)
                for (std::size_t j = 0; j < db; ++j) {
                    const Scalar &r = R.R(a, b)[i * db + j];
                    const Scalar &s = R.Rinv(a, b)[i * db + j];
                    if (!r.is_zero()) Re[i * 2 * db + j] = r;
                    if (!s.is_zero()) Ie[i * 2 * db + j] = s;
                }
            out.R.R(a, b) = Re;
            out.R.Rinv(a, b) = Ie;
        }

    // θ_α = v_α⁻¹ = w_α⁻¹ v_α, with θ_α⁻¹ = v_α.
    out.theta.theta.resize(n);
    out.theta.theta_inv.resize(n);
    for (int a = 0; a < n; ++a) {
        std::size_t d = H.dim(a);
        Vec th(2 * d), ti(2 * d);
        for (std::size_t k = 0; k < d; ++k) {
            th[d + k] = winv[a][k];
            ti[d + k] = H.unit(a)[k];
        }
        out.theta.theta[a] = th;
        out.theta.theta_inv[a] = ti;
    }
    return out;
}

}  // namespace hopf
