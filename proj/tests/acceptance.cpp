// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "hopf/demos.hpp"

using namespace hopf;
using clk = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string &what,
               const std::function<bool()> &body) {
    auto t0 = clk::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception &e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    double s = std::chrono::duration<double>(clk::now() - t0).count();
    if (!ok) ++g_failures;
    std::cout << "criterion " << number << " " << (ok ? "PASS" : "FAIL")
              << ": " << what << " [" << s << "s]" << note << std::endl;
}

HModule trivial_module(const TCoalg &H) {
    HModule m;
    m.grade = 0;
    m.dim = 1;
    for (std::size_t i = 0; i < H.dim(0); ++i) {
        Matrix a(1, 1);
        a.at(0, 0) = H.counit_apply(H.basis(0, i));
        m.action.push_back(a);
    }
    return m;
}

/// Graded line over k[Z/2] at trivial π: sign action, grouplike coaction.
YDModule signed_line(std::vector<long> signs, std::vector<int> degs) {
    std::size_t n = signs.size();
    YDModule v;
    v.module.grade = 0;
    v.module.dim = n;
    Matrix g(n, n);
    for (std::size_t r = 0; r < n; ++r) g.at(r, r) = Scalar(signs[r]);
    v.module.action = {Matrix::identity(n), g};
    Matrix co(2 * n, n);
    for (std::size_t r = 0; r < n; ++r) co.at(r * 2 + degs[r], r) = Scalar(1);
    v.coaction = {co};
    return v;
}

/// Every single-entry bump of every structure array must trip some check.
bool mutations_all_caught(const TCoalg &H0) {
    auto flips = [&](TCoalg H) { return !validate_tcoalg(H).clean(); };
    const int n = H0.order();
    for (int a = 0; a < n; ++a) {
        for (std::size_t e = 0; e < H0.components[a].mul.entries().size();
             ++e) {
            TCoalg H = H0;
            H.components[a].mul.entries()[e] += Scalar(1);
            if (!flips(H)) return false;
        }
        for (std::size_t e = 0; e < H0.components[a].unit.size(); ++e) {
            TCoalg H = H0;
            H.components[a].unit[e] += Scalar(1);
            if (!flips(H)) return false;
        }
        for (std::size_t e = 0; e < H0.antipode(a).entries().size(); ++e) {
            TCoalg H = H0;
            H.antipode(a).entries()[e] += Scalar(1);
            if (!flips(H)) return false;
        }
        for (int b = 0; b < n; ++b) {
            for (std::size_t e = 0; e < H0.comul(a, b).entries().size(); ++e) {
                TCoalg H = H0;
                H.comul(a, b).entries()[e] += Scalar(1);
                if (!flips(H)) return false;
            }
            for (std::size_t e = 0; e < H0.conj(a, b).entries().size(); ++e) {
                TCoalg H = H0;
                H.conj(a, b).entries()[e] += Scalar(1);
                if (!flips(H)) return false;
            }
        }
    }
    for (std::size_t e = 0; e < H0.counit_.entries().size(); ++e) {
        TCoalg H = H0;
        H.counit_.entries()[e] += Scalar(1);
        if (!flips(H)) return false;
    }
    return true;
}

bool quasi_clean(QuasiTCoalg &q) {
    ensure_rmatrix_inverses(q.H, q.R);
    return validate_tcoalg(q.H).clean() && validate_rmatrix(q.H, q.R).clean() &&
           check_drinfeld_props(q.H, q.R).clean();
}

/// Mirror-module at the inverse grade (same underlying matrices).
HModule mirrored(const FiniteGroup &G, const HModule &U) {
    HModule m = U;
    m.grade = G.inv(U.grade);
    return m;
}

bool mirror_braiding_law(const QuasiTCoalg &q,
                         const std::vector<HModule> &mods) {
    QuasiTCoalg m = mirror(q);
    for (const HModule &u : mods)
        for (const HModule &v : mods) {
            Matrix lhs = braiding_map(m.H, m.R, mirrored(q.H.group, u),
                                      mirrored(q.H.group, v));
            Matrix rhs = mat_inv(braiding_map(q.H, q.R, v, u));
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace

int main() {
    auto t_start = clk::now();

    TCoalgData tz2 = demo("trivial_z2"), tz3 = demo("trivial_z3");
    TCoalgData ga2 = demo("group_algebra2"), ga3 = demo("group_algebra3");
    TCoalgData sw = demo("sweedler"), ct = demo("constant_kz3_z2");
    QuasiTCoalg dk{demo("double_kz2").H, demo("double_kz2").R};
    ensure_rmatrix_inverses(dk.H, dk.R);
    TCoalgData rt = demo("rt_double_kz2");
    ensure_rmatrix_inverses(rt.H, rt.R);
    ensure_ribbon_inverses(rt.H, rt.theta);

    criterion(1, "axiom soundness and single-entry mutation detection", [&] {
        for (const TCoalgData *d : {&tz2, &ga2, &ga3, &sw, &ct}) {
            if (!validate_tcoalg(d->H).clean()) return false;
            if (!mutations_all_caught(d->H)) return false;
        }
        return true;
    });

    criterion(2, "doubles of k[Z/2] and of the constant coalgebra verify "
                 "(R axioms and all eight Drinfeld identities)", [&] {
        QuasiTCoalg q2 = drinfeld_double(ga2.H);
        QuasiTCoalg q18 = drinfeld_double(ct.H);
        if (q2.H.dim(0) != 4) return false;
        if (q18.H.dim(0) != 18 || q18.H.dim(1) != 18) return false;
        return quasi_clean(q2) && quasi_clean(q18);
    });

    criterion(3, "mirror is a bit-exact involution, R families included", [&] {
        for (const std::string &name : demo_names()) {
            TCoalgData d = demo(name);
            if (!d.has_r) {
                if (!tcoalg_equal(mirror(mirror(d.H)), d.H)) return false;
                continue;
            }
            ensure_rmatrix_inverses(d.H, d.R);
            QuasiTCoalg back = mirror(mirror(QuasiTCoalg{d.H, d.R}));
            if (!tcoalg_equal(back.H, d.H)) return false;
            for (int a = 0; a < d.H.order(); ++a)
                for (int b = 0; b < d.H.order(); ++b)
                    if (!vec_eq(back.R.R(a, b), d.R.R(a, b)) ||
                        !vec_eq(back.R.Rinv(a, b), d.R.Rinv(a, b)))
                        return false;
        }
        return true;
    });

    criterion(4, "mirror braiding = inverse of the swapped braiding on "
                 ">= 6 module pairs per fixture", [&] {
        // double of k[Z/2]
        std::vector<HModule> m1 = {trivial_module(dk.H),
                                   regular_module(dk.H, 0)};
        m1.push_back(tensor_modules(dk.H, m1[1], m1[0]));
        if (!mirror_braiding_law(dk, m1)) return false;
        // a fixture with a nontrivial grading group
        TCoalgData t3 = demo("trivial_z3");
        std::vector<HModule> m2;
        for (int a = 0; a < 3; ++a) m2.push_back(regular_module(t3.H, a));
        return mirror_braiding_law(QuasiTCoalg{t3.H, t3.R}, m2);
    });

    criterion(5, "ribbon extension of the double verifies with theta = "
                 "v^{-1} and fails the comultiplication law with theta = v",
              [&] {
        if (rt.H.dim(0) != 8) return false;
        if (!validate_tcoalg(rt.H).clean()) return false;
        if (!validate_rmatrix(rt.H, rt.R).clean()) return false;
        if (!validate_ribbon(rt.H, rt.R, rt.theta).clean()) return false;
        // over k[Z/2] the square u s(u) is the unit, so v is its own inverse
        // and both sign choices coincide; the discriminating half of the
        // criterion needs the k[Z/3] double, where u s(u) != 1.
        if (!vec_eq(rt.theta.theta[0], rt.theta.theta_inv[0])) return false;
        QuasiTCoalg q3 = drinfeld_double(ga3.H);
        RibbonTCoalg rt3 = ribbon_extension(q3);
        ensure_rmatrix_inverses(rt3.H, rt3.R);
        if (!validate_ribbon(rt3.H, rt3.R, rt3.theta).clean()) return false;
        RibbonFamily wrong;  // v itself: the inverse family, swapped
        wrong.theta = rt3.theta.theta_inv;
        wrong.theta_inv = rt3.theta.theta;
        Report rep = validate_ribbon(rt3.H, rt3.R, wrong);
        return rep.has_failure("ribbon.comul");
    });

    criterion(6, "the s(u) expansion and commutation identities hold in "
                 "every quasitriangular fixture", [&] {
        for (const std::string &name : demo_names()) {
            TCoalgData d = demo(name);
            if (!d.has_r) continue;
            ensure_rmatrix_inverses(d.H, d.R);
            if (!check_lemma_identities(d.H, d.R).clean()) return false;
        }
        QuasiTCoalg q18 = drinfeld_double(ct.H);
        ensure_rmatrix_inverses(q18.H, q18.R);
        if (!check_lemma_identities(q18.H, q18.R).clean()) return false;
        QuasiTCoalg mdk = mirror(dk);
        return check_lemma_identities(mdk.H, mdk.R).clean();
    });

    // Shared module-comodule fixtures.
    std::vector<YDModule> yds_ga2 = {
        signed_line({1, -1}, {0, 1}), signed_line({-1}, {1}),
        trivial_yd(ga2.H, regular_module(ga2.H, 0))};
    yds_ga2.push_back(yd_tensor(ga2.H, yds_ga2[0], yds_ga2[1]));
    std::vector<YDModule> yds_ct;
    {
        YDModule v;
        v.module.grade = 0;
        v.module.dim = 1;
        for (int i = 0; i < 3; ++i)
            v.module.action.push_back(Matrix::identity(1));
        for (int l = 0; l < 2; ++l) {
            Matrix co(3, 1);
            co.at(1, 0) = Scalar(1);
            v.coaction.push_back(co);
        }
        yds_ct.push_back(v);
        yds_ct.push_back(yd_crossing(ct.H, 1, v));
    }

    criterion(7, "module-comodule <-> half-braiding round trips, tensor "
                 "splitting, and naturality on sampled evaluation modules",
              [&] {
        auto run = [&](const TCoalg &H, const std::vector<YDModule> &yds) {
            std::vector<HModule> xs;  // evaluation sample per grade
            for (const YDModule &v : yds) {
                if (!validate_yd(H, v).clean()) return false;
                // half-braiding -> coactions -> half-braiding
                std::vector<Matrix> sig;
                for (int l = 0; l < H.order(); ++l)
                    sig.push_back(
                        halfbraiding_eval(H, v, regular_module(H, l)).second);
                YDModule back = yd_from_halfbraiding(H, v.module, sig);
                if (!yd_equal(back, v)) return false;
                for (int l = 0; l < H.order(); ++l) {
                    HModule reg = regular_module(H, l);
                    auto orig = halfbraiding_eval(H, v, reg);
                    auto redo = halfbraiding_eval(H, back, reg);
                    if (orig.first != redo.first) return false;
                    if (mat_mul(orig.first, orig.second) !=
                        Matrix::identity(orig.first.rows()))
                        return false;
                }
                // tensor splitting over pairs of evaluation modules
                HModule x = regular_module(H, 0), y = trivial_module(H);
                auto sx = halfbraiding_eval(H, v, x).first;
                auto sy = halfbraiding_eval(H, v, y).first;
                auto sxy =
                    halfbraiding_eval(H, v, tensor_modules(H, x, y)).first;
                Matrix split = mat_mul(kron(Matrix::identity(x.dim), sy),
                                       kron(sx, Matrix::identity(y.dim)));
                if (sxy != split) return false;
                // naturality against central endomorphisms of regulars
                for (int l = 0; l < H.order(); ++l) {
                    HModule reg = regular_module(H, l);
                    Matrix s = halfbraiding_eval(H, v, reg).first;
                    for (const Vec &z : center_basis(H, l)) {
                        Matrix f = module_act(reg, z);
                        Matrix lhs =
                            mat_mul(s, kron(Matrix::identity(v.module.dim), f));
                        Matrix rhs =
                            mat_mul(kron(f, Matrix::identity(v.module.dim)), s);
                        if (lhs != rhs) return false;
                    }
                }
            }
            return true;
        };
        return run(ga2.H, yds_ga2) && run(ct.H, yds_ct);
    });

    criterion(8, "transport to double modules is mutually inverse and "
                 "matches the braidings on >= 6 pairs", [&] {
        QuasiTCoalg qct = drinfeld_double(ct.H);
        ensure_rmatrix_inverses(qct.H, qct.R);
        auto run = [&](const TCoalg &H, const QuasiTCoalg &q,
                       const std::vector<YDModule> &yds) {
            for (const YDModule &v : yds) {
                HModule w = yd_to_ddouble(H, v);
                if (!validate_module(q.H, w).clean()) return false;
                if (!yd_equal(ddouble_to_yd(H, w), v)) return false;
            }
            for (const YDModule &v : yds)
                for (const YDModule &u : yds) {
                    Matrix through = braiding_map(q.H, q.R, yd_to_ddouble(H, v),
                                                  yd_to_ddouble(H, u));
                    if (yd_braiding(H, v, u) != through) return false;
                }
            // a module born on the double side round trips too
            HModule reg = regular_module(q.H, 0);
            YDModule y = ddouble_to_yd(H, reg);
            if (!validate_yd(H, y).clean()) return false;
            return module_equal(yd_to_ddouble(H, y), reg);
        };
        return run(ga2.H, dk, yds_ga2) && run(ct.H, qct, yds_ct);
    });

    std::vector<HModule> rt_mods = {trivial_module(rt.H),
                                    regular_module(rt.H, 0)};
    rt_mods.push_back(tensor_modules(rt.H, rt_mods[0], rt_mods[1]));

    criterion(9, "braiding and twist axiom suites plus Yang-Baxter on the "
                 "ribbon-extension sample", [&] {
        if (!check_braiding_axioms(rt.H, rt.R, rt_mods).clean()) return false;
        if (!check_twist_axioms(rt.H, rt.R, rt.theta, rt_mods).clean())
            return false;
        // Yang-Baxter composite on >= 3 triples in the identity grade
        auto cmat = [&](const HModule &u, const HModule &v) {
            return braiding_map(rt.H, rt.R, u, v);
        };
        const HModule &t = rt_mods[0], &r = rt_mods[1];
        std::vector<std::array<const HModule *, 3>> triples = {
            {&t, &r, &r}, {&r, &t, &r}, {&r, &r, &t}, {&t, &t, &r}};
        for (auto [u, v, w] : triples) {
            // both sides map U⊗V⊗W to W⊗V⊗U
            Matrix lhs = mat_mul(
                kron(cmat(*v, *w), Matrix::identity(u->dim)),
                mat_mul(kron(Matrix::identity(v->dim), cmat(*u, *w)),
                        kron(cmat(*u, *v), Matrix::identity(w->dim))));
            Matrix rhs = mat_mul(
                kron(Matrix::identity(w->dim), cmat(*u, *v)),
                mat_mul(kron(cmat(*u, *w), Matrix::identity(v->dim)),
                        kron(Matrix::identity(u->dim), cmat(*v, *w))));
            if (lhs != rhs) return false;
        }
        return true;
    });

    criterion(10, "the coevaluation double-braiding endomorphism equals the "
                  "action of u s(u), for the inverse-braiding reading only",
              [&] {
        DrinfeldFamily du = drinfeld_elements(dk.H, dk.R);
        Vec w = dk.H.mulvec(0, du.u[0], dk.H.antipode_apply(0, du.u[0]));
        std::vector<HModule> mods = {trivial_module(dk.H),
                                     regular_module(dk.H, 0)};
        mods.push_back(tensor_modules(dk.H, mods[1], mods[1]));
        for (const HModule &u : mods)
            if (omega_matrix(dk.H, dk.R, u, true) != module_act(u, w))
                return false;
        // over k[Z/2] u s(u) = 1 and the two readings coincide, so the
        // exactly-one assertion is settled on the k[Z/3] double instead
        QuasiTCoalg q3 = drinfeld_double(ga3.H);
        ensure_rmatrix_inverses(q3.H, q3.R);
        DrinfeldFamily du3 = drinfeld_elements(q3.H, q3.R);
        Vec w3 = q3.H.mulvec(0, du3.u[0], q3.H.antipode_apply(0, du3.u[0]));
        std::vector<HModule> mods3 = {trivial_module(q3.H),
                                      regular_module(q3.H, 0)};
        bool inverse_all = true, direct_all = true;
        for (const HModule &u : mods3) {
            Matrix target = module_act(u, w3);
            if (omega_matrix(q3.H, q3.R, u, true) != target)
                inverse_all = false;
            if (omega_matrix(q3.H, q3.R, u, false) != target)
                direct_all = false;
        }
        if (inverse_all == direct_all) return false;  // exactly one reading
        std::cout << "  (passing reading: "
                  << (inverse_all ? "inverse braiding" : "direct braiding")
                  << ")\n";
        return inverse_all;
    });

    criterion(11, "twist pairs <-> extended modules round trip and the "
                  "tensor twist matches the extension comultiplication on "
                  ">= 4 pairs", [&] {
        HModule reg = regular_module(rt.H, 0);
        RibObject a = rib_from_rt_module(dk.H, reg);
        if (!validate_rib(dk.H, dk.R, a).clean()) return false;
        if (!module_equal(rt_module_from_rib(dk.H, a), reg)) return false;
        RibObject b = rib_dual(dk.H, a);
        if (!validate_rib(dk.H, dk.R, b).clean()) return false;
        std::vector<const RibObject *> objs = {&a, &b};
        for (const RibObject *x : objs)
            for (const RibObject *y : objs) {
                RibObject t = rib_tensor(dk.H, dk.R, *x, *y);
                RibObject rtrip =
                    rib_from_rt_module(dk.H, rt_module_from_rib(dk.H, t));
                if (!module_equal(rtrip.module, t.module) || rtrip.t != t.t)
                    return false;
                // tensoring the extended modules through Δ gives the same twist
                HModule big = tensor_modules(rt.H, rt_module_from_rib(dk.H, *x),
                                             rt_module_from_rib(dk.H, *y));
                RibObject through = rib_from_rt_module(dk.H, big);
                if (!module_equal(through.module, t.module) ||
                    through.t != t.t)
                    return false;
            }
        return true;
    });

    criterion(12, "every sampled extension module is reflexive, good, and "
                  "tortile; duals and tensor products stay good", [&] {
        const HModule &triv = rt_mods[0], &reg = rt_mods[1];
        std::vector<HModule> sample = {triv, reg,
                                       dual_module(rt.H, reg).mod,
                                       tensor_modules(rt.H, triv, reg),
                                       tensor_modules(rt.H, reg, triv)};
        for (const HModule &u : sample) {
            DualityFlags f = good_dual_predicates(rt.H, rt.R, rt.theta, u);
            if (!f.reflexive || !f.good || !f.tortile || !f.snake)
                return false;
            // closure: the dual and unit-tensors of a good object are good
            DualityFlags fd = good_dual_predicates(rt.H, rt.R, rt.theta,
                                                   dual_module(rt.H, u).mod);
            if (!fd.good) return false;
        }
        return true;
    });

    double total = std::chrono::duration<double>(clk::now() - t_start).count();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT")
              << " (" << total << "s total)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
