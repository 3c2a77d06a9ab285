#include "hopf/rib.hpp"

namespace hopf {

namespace {

/// w_α = u_α s_{α⁻¹}(u_{α⁻¹}) for every grade.
std::vector<Vec> w_family(const TCoalg &H, const RMatrixFamily &R) {
    RMatrixFamily Rc = R;
    ensure_rmatrix_inverses(H, Rc);
    DrinfeldFamily D = drinfeld_elements(H, Rc);
    std::vector<Vec> w(H.order());
    for (int a = 0; a < H.order(); ++a) {
        int ai = H.group.inv(a);
        w[a] = H.mulvec(a, D.u[a], H.antipode_apply(ai, D.u[ai]));
    }
    return w;
}

}  // namespace

Report validate_rib(const TCoalg &H, const RMatrixFamily &R,
                    const RibObject &O) {
    Report rep;
    const int a = O.module.grade;
    const std::size_t n = O.module.dim;
    bool shape = O.t.rows() == n && O.t.cols() == n;
    rep.add("rib.shape", idx({}), shape, "twist matrix malformed");
    if (!shape) return rep;
    bool inv_ok = true;
    Matrix tinv;
    try {
        tinv = mat_inv(O.t);
    } catch (const Singular &) {
        inv_ok = false;
    }
    rep.add("rib.invertible", idx({}), inv_ok, "twist is singular");
    if (!inv_ok) return rep;

    int ai = H.group.inv(a);
    for (std::size_t h = 0; h < H.dim(a); ++h) {
        Matrix lhs = mat_mul(O.t, O.module.action[h]);
        Matrix rhs = mat_mul(
            module_act(O.module, H.conj_apply(ai, a, H.basis(a, h))), O.t);
        rep.add("rib.linear", idx({(long)h}), lhs == rhs,
                "t is not an arrow into the conjugated module");
    }

    std::vector<Vec> w = w_family(H, R);
    rep.add("rib.square", idx({}),
            mat_inv(mat_mul(O.t, O.t)) == module_act(O.module, w[a]),
            "t⁻² is not the action of u·s(u)");
    return rep;
}

RibObject rib_tensor(const TCoalg &H, const RMatrixFamily &R,
                     const RibObject &A, const RibObject &B) {
    RibObject O;
    O.module = tensor_modules(H, A.module, B.module);
    Matrix c1 = braiding_map(H, R, A.module, B.module);
    Matrix c2 = braiding_map(H, R, crossing(H, A.module.grade, B.module),
                             A.module);
    O.t = mat_mul(kron(A.t, B.t), mat_mul(c2, c1));
    return O;
}

RibObject rib_dual(const TCoalg &H, const RibObject &O) {
    RibObject D;
    D.module = dual_module(H, O.module).mod;
    D.t = O.t.transpose();
    return D;
}

HModule rt_module_from_rib(const TCoalg &H, const RibObject &O) {
    const int a = O.module.grade;
    const std::size_t d = H.dim(a);
    Matrix tinv = mat_inv(O.t);
    HModule N;
    N.grade = a;
    N.dim = O.module.dim;
    N.action.resize(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        N.action[i] = O.module.action[i];
        N.action[d + i] = mat_mul(O.module.action[i], tinv);
    }
    return N;
}

RibObject rib_from_rt_module(const TCoalg &H, const HModule &N) {
    const int a = N.grade;
    const std::size_t d = H.dim(a);
    if (N.action.size() != 2 * d)
        throw ShapeMismatch("module is not over the doubled component");
    RibObject O;
    O.module.grade = a;
    O.module.dim = N.dim;
    O.module.action.assign(N.action.begin(), N.action.begin() + d);
    Matrix vact(N.dim, N.dim);
    const Vec &unit_a = H.components[a].unit;
    for (std::size_t k = 0; k < d; ++k) {
        const Scalar &u = unit_a[k];
        if (u.is_zero()) continue;
        for (std::size_t r = 0; r < N.dim; ++r)
            for (std::size_t c = 0; c < N.dim; ++c)
                if (!N.action[d + k].at(r, c).is_zero())
                    vact.at(r, c) += u * N.action[d + k].at(r, c);
    }
    O.t = mat_inv(vact);
    return O;
}

Report check_lemma_identities(const TCoalg &H, const RMatrixFamily &R) {
    Report rep;
    RMatrixFamily Rc = R;
    ensure_rmatrix_inverses(H, Rc);
    DrinfeldFamily D = drinfeld_elements(H, Rc);
    std::vector<Matrix> sinv = antipode_inverse(H);
    const FiniteGroup &G = H.group;
    for (int a = 0; a < H.order(); ++a) {
        int ai = G.inv(a);
        Vec su = H.antipode_apply(ai, D.u[ai]);

        // s_{α⁻¹}(u_{α⁻¹}) = ξ_{(α).i} s_{α⁻¹}(ζ_{(α⁻¹).i})
        const Vec &Ra = Rc.R(a, ai);
        Vec rhs(H.dim(a));
        for (std::size_t i = 0; i < H.dim(a); ++i)
            for (std::size_t j = 0; j < H.dim(ai); ++j) {
                const Scalar &r = Ra[i * H.dim(ai) + j];
                if (r.is_zero()) continue;
                rhs = vec_add(
                    rhs, vec_scale(r, H.mulvec(a, H.basis(a, i),
                                               H.antipode_apply(
                                                   ai, H.basis(ai, j)))));
            }
        rep.add("lemma.antipode-u", idx({a}), vec_eq(su, rhs),
                "s(u) does not match its R expansion");

        // s_{α⁻¹}(u_{α⁻¹}) h = (s_α⁻¹ ∘ s_{α⁻¹}⁻¹ ∘ φ_α)(h) s_{α⁻¹}(u_{α⁻¹})
        for (std::size_t h = 0; h < H.dim(a); ++h) {
            Vec lhs = H.mulvec(a, su, H.basis(a, h));
            Vec z = hopf::apply(
                sinv[a],
                hopf::apply(sinv[ai], H.conj_apply(a, a, H.basis(a, h))));
            Vec rhs2 = H.mulvec(a, z, su);
            rep.add("lemma.commutation", idx({a, (long)h}), vec_eq(lhs, rhs2),
                    "s(u) commutation law fails");
        }
    }
    return rep;
}

}  // namespace hopf
