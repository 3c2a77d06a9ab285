#include "hopf/modules.hpp"

namespace hopf {

Matrix module_act(const HModule &U, const Vec &x) {
    if (x.size() != U.action.size())
        throw ShapeMismatch("module_act coordinate size mismatch");
    Matrix m(U.dim, U.dim);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t r = 0; r < U.dim; ++r)
            for (std::size_t c = 0; c < U.dim; ++c) {
                const Scalar &s = U.action[i].at(r, c);
                if (!s.is_zero()) m.at(r, c) += x[i] * s;
            }
    }
    return m;
}

Report validate_module(const TCoalg &H, const HModule &U) {
    Report rep;
    const int a = U.grade;
    bool shapes = a >= 0 && a < H.order() && U.action.size() == H.dim(a);
    for (const Matrix &m : U.action)
        if (m.rows() != U.dim || m.cols() != U.dim) shapes = false;
    rep.add("module.shape", idx({}), shapes, "action matrices malformed");
    if (!shapes) return rep;
    rep.add("module.unit", idx({}),
            module_act(U, H.unit(a)) == Matrix::identity(U.dim),
            "unit does not act as identity");
    const Component &C = H.components[a];
    for (std::size_t i = 0; i < H.dim(a); ++i)
        for (std::size_t j = 0; j < H.dim(a); ++j) {
            Matrix lhs = mat_mul(U.action[i], U.action[j]);
            Matrix rhs(U.dim, U.dim);
            for (std::size_t k = 0; k < H.dim(a); ++k) {
                const Scalar &s = C.mul.at(i, j, k);
                if (s.is_zero()) continue;
                for (std::size_t r = 0; r < U.dim; ++r)
                    for (std::size_t c = 0; c < U.dim; ++c)
                        if (!U.action[k].at(r, c).is_zero())
                            rhs.at(r, c) += s * U.action[k].at(r, c);
            }
            rep.add("module.action", idx({(long)i, (long)j}), lhs == rhs,
                    "ρ(e_i)ρ(e_j) != ρ(e_i e_j)");
        }
    return rep;
}

bool module_equal(const HModule &a, const HModule &b) {
    if (a.grade != b.grade || a.dim != b.dim ||
        a.action.size() != b.action.size())
        return false;
    for (std::size_t i = 0; i < a.action.size(); ++i)
        if (a.action[i] != b.action[i]) return false;
    return true;
}

HModule tensor_modules(const TCoalg &H, const HModule &U, const HModule &V) {
    int a = U.grade, b = V.grade, ab = H.group.mul(a, b);
    HModule W;
    W.grade = ab;
    W.dim = U.dim * V.dim;
    W.action.resize(H.dim(ab));
    const Matrix &D = H.comul(a, b);
    for (std::size_t k = 0; k < H.dim(ab); ++k) {
        Matrix m(W.dim, W.dim);
        for (std::size_t i = 0; i < H.dim(a); ++i)
            for (std::size_t j = 0; j < H.dim(b); ++j) {
                const Scalar &s = D.at(i * H.dim(b) + j, k);
                if (s.is_zero()) continue;
                Matrix t = kron(U.action[i], V.action[j]);
                for (std::size_t r = 0; r < W.dim; ++r)
                    for (std::size_t c = 0; c < W.dim; ++c)
                        if (!t.at(r, c).is_zero()) m.at(r, c) += s * t.at(r, c);
            }
        W.action[k] = m;
    }
    return W;
}

HModule crossing(const TCoalg &H, int b, const HModule &U) {
    int t = H.group.conj(U.grade, b);
    const Matrix &P = H.conj(H.group.inv(b), t);  // φ_{b⁻¹}: H_t → H_{|U|}
    HModule W;
    W.grade = t;
    W.dim = U.dim;
    W.action.resize(H.dim(t));
    for (std::size_t k = 0; k < H.dim(t); ++k) {
        Matrix m(U.dim, U.dim);
        for (std::size_t l = 0; l < H.dim(U.grade); ++l) {
            const Scalar &s = P.at(l, k);
            if (s.is_zero()) continue;
            for (std::size_t r = 0; r < U.dim; ++r)
                for (std::size_t c = 0; c < U.dim; ++c)
                    if (!U.action[l].at(r, c).is_zero())
                        m.at(r, c) += s * U.action[l].at(r, c);
        }
        W.action[k] = m;
    }
    return W;
}

DualModule dual_module(const TCoalg &H, const HModule &U) {
    int ai = H.group.inv(U.grade);
    const Matrix &S = H.antipode(ai);  // s_{|U|⁻¹}: H_{|U|⁻¹} → H_{|U|}
    DualModule D;
    D.mod.grade = ai;
    D.mod.dim = U.dim;
    D.mod.action.resize(H.dim(ai));
    for (std::size_t k = 0; k < H.dim(ai); ++k) {
        Matrix m(U.dim, U.dim);
        for (std::size_t l = 0; l < H.dim(U.grade); ++l) {
            const Scalar &s = S.at(l, k);
            if (s.is_zero()) continue;
            for (std::size_t r = 0; r < U.dim; ++r)
                for (std::size_t c = 0; c < U.dim; ++c)
                    if (!U.action[l].at(r, c).is_zero())
                        m.at(r, c) += s * U.action[l].at(r, c);
        }
        D.mod.action[k] = m.transpose();
    }
    D.coev = Vec(U.dim * U.dim);
    D.ev = Vec(U.dim * U.dim);
    for (std::size_t i = 0; i < U.dim; ++i) {
        D.coev[i * U.dim + i] = Scalar::one();
        D.ev[i * U.dim + i] = Scalar::one();
    }
    return D;
}

Matrix braiding_map(const TCoalg &H, const RMatrixFamily &R, const HModule &U,
                    const HModule &V) {
    int a = U.grade, b = V.grade;
    const Vec &r = R.R(a, b);
    Matrix S(U.dim * V.dim, U.dim * V.dim);
    for (std::size_t i = 0; i < H.dim(a); ++i)
        for (std::size_t j = 0; j < H.dim(b); ++j) {
            const Scalar &c = r[i * H.dim(b) + j];
            if (c.is_zero()) continue;
            Matrix t = kron(U.action[i], V.action[j]);
            for (std::size_t p = 0; p < S.rows(); ++p)
                for (std::size_t q = 0; q < S.cols(); ++q)
                    if (!t.at(p, q).is_zero()) S.at(p, q) += c * t.at(p, q);
        }
    return mat_mul(flip(U.dim, V.dim), S);
}

Matrix twist_map(const RibbonFamily &T, const HModule &U) {
    return module_act(U, T.theta[U.grade]);
}

std::vector<Vec> center_basis(const TCoalg &H, int a) {
    const Component &C = H.components[a];
    const std::size_t d = C.dim;
    Matrix K(d * d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t i = 0; i < d; ++i)
                K.at(j * d + k, i) = C.mul.at(i, j, k) - C.mul.at(j, i, k);
    return nullspace(K);
}

Report check_braiding_axioms(const TCoalg &H, const RMatrixFamily &R,
                             const std::vector<HModule> &mods) {
    Report rep;
    const int n = H.order();
    const long m = static_cast<long>(mods.size());
    for (long u = 0; u < m; ++u)
        for (long v = 0; v < m; ++v) {
            const HModule &U = mods[u], &V = mods[v];
            Matrix c = braiding_map(H, R, U, V);
            bool inv_ok = true;
            try {
                mat_inv(c);
            } catch (const Singular &) {
                inv_ok = false;
            }
            rep.add("braiding.invertible", idx({u, v}), inv_ok,
                    "braiding is singular");
            bool cross_ok = true;
            for (int g = 0; g < n; ++g)
                if (braiding_map(H, R, crossing(H, g, U), crossing(H, g, V)) != c)
                    cross_ok = false;
            rep.add("braiding.crossing", idx({u, v}), cross_ok,
                    "braiding changes under the crossing functor");
            bool nat_ok = true;
            for (const Vec &z : center_basis(H, U.grade))
                for (const Vec &y : center_basis(H, V.grade)) {
                    Matrix f = module_act(U, z), g = module_act(V, y);
                    if (mat_mul(c, kron(f, g)) != mat_mul(kron(g, f), c))
                        nat_ok = false;
                }
            rep.add("braiding.natural", idx({u, v}), nat_ok,
                    "braiding is not natural against central arrows");
        }
    for (long u = 0; u < m; ++u)
        for (long v = 0; v < m; ++v)
            for (long w = 0; w < m; ++w) {
                const HModule &U = mods[u], &V = mods[v], &W = mods[w];
                Matrix lhs1 = braiding_map(H, R, tensor_modules(H, U, V), W);
                Matrix rhs1 = mat_mul(
                    kron(braiding_map(H, R, U, crossing(H, V.grade, W)),
                         Matrix::identity(V.dim)),
                    kron(Matrix::identity(U.dim), braiding_map(H, R, V, W)));
                rep.add("braiding.hexagon-left", idx({u, v, w}), lhs1 == rhs1,
                        "c_{U⊗V,W} fails the hexagon");
                Matrix lhs2 = braiding_map(H, R, U, tensor_modules(H, V, W));
                Matrix rhs2 = mat_mul(
                    kron(Matrix::identity(V.dim), braiding_map(H, R, U, W)),
                    kron(braiding_map(H, R, U, V), Matrix::identity(W.dim)));
                rep.add("braiding.hexagon-right", idx({u, v, w}), lhs2 == rhs2,
                        "c_{U,V⊗W} fails the hexagon");
            }
    return rep;
}

Report check_twist_axioms(const TCoalg &H, const RMatrixFamily &R,
                          const RibbonFamily &T,
                          const std::vector<HModule> &mods) {
    Report rep;
    const int n = H.order();
    const long m = static_cast<long>(mods.size());
    for (long u = 0; u < m; ++u) {
        const HModule &U = mods[u];
        int a = U.grade, ai = H.group.inv(a);
        Matrix tw = twist_map(T, U);
        bool inv_ok = true;
        try {
            mat_inv(tw);
        } catch (const Singular &) {
            inv_ok = false;
        }
        rep.add("twist.invertible", idx({u}), inv_ok, "twist is singular");
        bool arrow_ok = true;
        for (std::size_t h = 0; h < H.dim(a); ++h) {
            Matrix lhs = mat_mul(tw, U.action[h]);
            Matrix rhs = mat_mul(
                module_act(U, H.conj_apply(ai, a, H.basis(a, h))), tw);
            if (lhs != rhs) arrow_ok = false;
        }
        rep.add("twist.arrow", idx({u}), arrow_ok,
                "twist is not an arrow into the conjugated module");
        bool cross_ok = true;
        for (int g = 0; g < n; ++g)
            if (twist_map(T, crossing(H, g, U)) != tw) cross_ok = false;
        rep.add("twist.crossing", idx({u}), cross_ok,
                "twist changes under the crossing functor");
    }
    for (long u = 0; u < m; ++u)
        for (long v = 0; v < m; ++v) {
            const HModule &U = mods[u], &V = mods[v];
            int a = U.grade, b = V.grade, ab = H.group.mul(a, b);
            Matrix lhs = twist_map(T, tensor_modules(H, U, V));
            Matrix rhs = mat_mul(
                mat_mul(braiding_map(H, R, crossing(H, ab, V), crossing(H, a, U)),
                        braiding_map(H, R, crossing(H, a, U), crossing(H, b, V))),
                kron(twist_map(T, U), twist_map(T, V)));
            rep.add("twist.tensor", idx({u, v}), lhs == rhs,
                    "θ_{U⊗V} != (double braiding)∘(θ_U⊗θ_V)");
        }
    return rep;
}

Matrix omega_matrix(const TCoalg &H, const RMatrixFamily &R, const HModule &U,
                    bool inverse_braiding) {
    const std::size_t n = U.dim;
    int a = U.grade;
    HModule A = crossing(H, a, U);
    HModule B = crossing(H, H.group.mul(a, a), U);
    DualModule dA = dual_module(H, A);
    Vec v1 = hopf::apply(braiding_map(H, R, A, dA.mod), dA.coev);
    Matrix ct = inverse_braiding ? mat_inv(braiding_map(H, R, B, U))
                                 : braiding_map(H, R, A, B);
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar &c = v1[i * n + j];
            if (c.is_zero()) continue;
            for (std::size_t k2 = 0; k2 < n; ++k2)
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar &s = ct.at(i * n + k2, j * n + k);
                    if (!s.is_zero()) out.at(k2, k) += c * s;
                }
        }
    return out;
}

Matrix twistator(const TCoalg &H, const RMatrixFamily &R, const HModule &U,
                 const HModule &V) {
    int a = U.grade, b = V.grade, ab = H.group.mul(a, b);
    return mat_mul(
        braiding_map(H, R, crossing(H, ab, V), crossing(H, a, U)),
        braiding_map(H, R, crossing(H, a, U), crossing(H, b, V)));
}

DualityFlags good_dual_predicates(const TCoalg &H, const RMatrixFamily &R,
                                  const RibbonFamily &T, const HModule &U) {
    DualityFlags out;
    const std::size_t n = U.dim;
    int a = U.grade, ai = H.group.inv(a);
    Matrix tw = twist_map(T, U);
    DualModule dU = dual_module(H, U);
    HModule A = crossing(H, a, U);
    DualModule dA = dual_module(H, A);

    try {
        out.reflexive =
            mat_inv(mat_mul(tw, tw)) == omega_matrix(H, R, U, true);
    } catch (const Singular &) {
        out.reflexive = false;
    }
    out.good = module_act(dU.mod, T.theta[ai]) == tw.transpose();
    out.tortile =
        vec_eq(hopf::apply(kron(Matrix::identity(n),
                          module_act(dA.mod, T.theta[ai])),
                     dA.coev),
               hopf::apply(kron(tw, Matrix::identity(n)), dU.coev));

    // Braided coevaluation/evaluation for the right dual, then the triangles.
    Vec b2 = hopf::apply(kron(Matrix::identity(n), tw),
                   hopf::apply(braiding_map(H, R, U, dU.mod), dU.coev));
    Matrix evrow(1, n * n);
    for (std::size_t i = 0; i < n * n; ++i) evrow.at(0, i) = dU.ev[i];
    Matrix d2 = mat_mul(mat_mul(evrow, braiding_map(H, R, A, dU.mod)),
                        kron(tw, Matrix::identity(n)));
    Matrix Dm(n, n), Bm(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Dm.at(i, j) = d2.at(0, i * n + j);
            Bm.at(i, j) = b2[i * n + j];
        }
    out.snake = mat_mul(Dm, Bm) == Matrix::identity(n) &&
                mat_mul(Bm, Dm) == Matrix::identity(n);
    return out;
}

}  // namespace hopf
