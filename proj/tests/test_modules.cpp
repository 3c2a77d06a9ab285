#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopf/demos.hpp"
#include "hopf/yd.hpp"

using namespace hopf;

namespace {

/// The one-dimensional module at grade 1 on which H acts through ε.
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

}  // namespace

TEST_CASE("regular, trivial, tensor, and crossed modules validate") {
    TCoalg H = demo("constant_kz3_z2").H;
    HModule reg0 = regular_module(H, 0), reg1 = regular_module(H, 1);
    CHECK(validate_module(H, reg0).clean());
    CHECK(validate_module(H, reg1).clean());
    CHECK(validate_module(H, trivial_module(H)).clean());

    HModule t = tensor_modules(H, reg0, reg1);
    CHECK(t.grade == 1);
    CHECK(t.dim == 9);
    CHECK(validate_module(H, t).clean());

    HModule c = crossing(H, 1, reg0);
    CHECK(validate_module(H, c).clean());
    CHECK_FALSE(module_equal(c, reg0));  // φ₁ inverts the fibre

    // module axioms detect a broken action
    HModule bad = reg0;
    bad.action[1].at(0, 0) += Scalar(1);
    CHECK_FALSE(validate_module(H, bad).clean());
}

TEST_CASE("duals pair correctly with their evaluation") {
    TCoalg H = demo("sweedler").H;
    HModule reg = regular_module(H, 0);
    DualModule d = dual_module(H, reg);
    CHECK(validate_module(H, d.mod).clean());
    // the coevaluation/evaluation contraction is the trace pairing
    Scalar tr(0);
    std::size_t n = reg.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            tr += d.coev[i * n + j] * d.ev[j * n + i];
    CHECK(tr == Scalar((long)n));
}

TEST_CASE("centre elements commute") {
    TCoalg H = demo("sweedler").H;
    auto z = center_basis(H, 0);
    CHECK(!z.empty());
    for (const Vec &v : z)
        for (std::size_t i = 0; i < H.dim(0); ++i)
            CHECK(vec_eq(H.mulvec(0, v, H.basis(0, i)),
                         H.mulvec(0, H.basis(0, i), v)));
    // commutative fixture: the centre is everything
    TCoalg C = demo("group_algebra3").H;
    CHECK(center_basis(C, 0).size() == 3);
}

TEST_CASE("braiding axioms over the double of k[Z/2]") {
    QuasiTCoalg q = drinfeld_double(demo("group_algebra2").H);
    ensure_rmatrix_inverses(q.H, q.R);
    std::vector<HModule> mods = {trivial_module(q.H), regular_module(q.H, 0)};
    Report rep = check_braiding_axioms(q.H, q.R, mods);
    CHECK(rep.clean());
    CHECK(rep.total() > 0);
}

TEST_CASE("twist axioms over the ribbon extension") {
    TCoalgData d = demo("rt_double_kz2");
    ensure_rmatrix_inverses(d.H, d.R);
    ensure_ribbon_inverses(d.H, d.theta);
    std::vector<HModule> mods = {trivial_module(d.H), regular_module(d.H, 0)};
    Report rep = check_twist_axioms(d.H, d.R, d.theta, mods);
    CHECK(rep.clean());

    // the twistator is exactly the failure of θ to be monoidal on the nose
    const HModule &u = mods[1];
    Matrix lhs = twist_map(d.theta, tensor_modules(d.H, u, u));
    Matrix rhs =
        mat_mul(twistator(d.H, d.R, u, u),
                kron(twist_map(d.theta, u), twist_map(d.theta, u)));
    CHECK(lhs == rhs);
}
