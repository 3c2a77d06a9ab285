#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopf/demos.hpp"

using namespace hopf;

namespace {

/// Graded line with a sign action and a grouplike coaction over k[Z/2]
/// (grading group trivial): ρ(g) = diag(signs), Δ(e_r) = e_r ⊗ g^{deg r}.
YDModule signed_line(const TCoalg &H, std::vector<long> signs,
                     std::vector<int> degs) {
    std::size_t n = signs.size();
    YDModule v;
    v.module.grade = 0;
    v.module.dim = n;
    Matrix one = Matrix::identity(n), g(n, n);
    for (std::size_t r = 0; r < n; ++r) g.at(r, r) = Scalar(signs[r]);
    v.module.action = {one, g};
    Matrix co(2 * n, n);
    for (std::size_t r = 0; r < n; ++r)
        co.at(r * 2 + degs[r], r) = Scalar(1);
    v.coaction = {co};
    return v;
}

}  // namespace

TEST_CASE("module-comodule compatibility on graded lines") {
    TCoalg H = demo("group_algebra2").H;
    YDModule a = signed_line(H, {1, -1}, {0, 1});
    YDModule b = signed_line(H, {-1}, {1});
    CHECK(validate_yd(H, a).clean());
    CHECK(validate_yd(H, b).clean());
    CHECK(validate_yd(H, trivial_yd(H, regular_module(H, 0))).clean());

    YDModule t = yd_tensor(H, a, b);
    CHECK(validate_yd(H, t).clean());
    CHECK(validate_yd(H, yd_crossing(H, 0, a)).clean());

    YDModule bad = a;
    bad.coaction[0].at(0, 0) = Scalar(0);
    CHECK_FALSE(validate_yd(H, bad).clean());
}

TEST_CASE("compatibility with a nontrivial grading group") {
    TCoalg H = demo("constant_kz3_z2").H;
    // trivial H_1-module line whose coaction inserts the generator g
    YDModule v;
    v.module.grade = 0;
    v.module.dim = 1;
    for (int i = 0; i < 3; ++i) v.module.action.push_back(Matrix::identity(1));
    for (int l = 0; l < 2; ++l) {
        Matrix co(3, 1);
        co.at(1, 0) = Scalar(1);
        v.coaction.push_back(co);
    }
    CHECK(validate_yd(H, v).clean());
    YDModule c = yd_crossing(H, 1, v);
    CHECK(validate_yd(H, c).clean());
    CHECK_FALSE(yd_equal(c, v));  // conjugation inverts the coleg
    CHECK(validate_yd(H, yd_tensor(H, v, c)).clean());
}

TEST_CASE("braiding agrees with the evaluated half-braiding") {
    TCoalg H = demo("group_algebra2").H;
    YDModule a = signed_line(H, {1, -1}, {0, 1});
    YDModule b = signed_line(H, {1, 1, -1}, {1, 0, 1});
    Matrix c = yd_braiding(H, a, b);
    auto [sigma, sigma_inv] = halfbraiding_eval(H, a, b.module);
    CHECK(c == sigma);
    CHECK(mat_mul(sigma, sigma_inv) == Matrix::identity(6));
    CHECK(mat_mul(sigma_inv, sigma) == Matrix::identity(6));
}

TEST_CASE("coactions are recovered from half-braidings on regular modules") {
    for (const std::string &name : {"group_algebra2", "constant_kz3_z2"}) {
        CAPTURE(name);
        TCoalg H = demo(name).H;
        YDModule v = trivial_yd(H, regular_module(H, 0));
        std::vector<Matrix> sig;
        for (int l = 0; l < H.order(); ++l)
            sig.push_back(
                halfbraiding_eval(H, v, regular_module(H, l)).second);
        YDModule back = yd_from_halfbraiding(H, v.module, sig);
        CHECK(yd_equal(back, v));
    }
}

TEST_CASE("transport to double modules and back") {
    TCoalg H = demo("group_algebra2").H;
    YDModule a = signed_line(H, {1, -1}, {0, 1});
    QuasiTCoalg q = drinfeld_double(H);
    HModule w = yd_to_ddouble(H, a);
    CHECK(validate_module(q.H, w).clean());
    CHECK(yd_equal(ddouble_to_yd(H, w), a));

    // and the reverse direction, starting from a double module
    HModule reg = regular_module(q.H, 0);
    YDModule y = ddouble_to_yd(H, reg);
    CHECK(validate_yd(H, y).clean());
    CHECK(module_equal(yd_to_ddouble(H, y), reg));
}
