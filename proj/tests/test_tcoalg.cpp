#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopf/demos.hpp"

using namespace hopf;

TEST_CASE("demo fixtures satisfy every Hopf-level axiom") {
    for (const std::string &name :
         {"trivial_z2", "trivial_z3", "group_algebra2", "group_algebra3",
          "sweedler", "constant_kz3_z2"}) {
        CAPTURE(name);
        Report rep = validate_tcoalg(demo(name).H);
        CHECK(rep.clean());
        CHECK(rep.total() > 0);
    }
}

TEST_CASE("single-entry mutations are caught") {
    TCoalg H = demo("sweedler").H;
    SUBCASE("multiplication") {
        H.components[0].mul.at(2, 2, 0) = Scalar(1);  // x² = 1 breaks Δ
        CHECK_FALSE(validate_tcoalg(H).clean());
    }
    SUBCASE("comultiplication") {
        H.comul(0, 0).at(1 * 4 + 2, 2) = Scalar(0);
        CHECK_FALSE(validate_tcoalg(H).clean());
    }
    SUBCASE("antipode") {
        H.antipode(0).at(3, 2) = Scalar(1);
        CHECK_FALSE(validate_tcoalg(H).clean());
    }
    SUBCASE("conjugation") {
        TCoalg C = demo("constant_kz3_z2").H;
        C.conj(1, 0).at(1, 1) = Scalar(1);
        CHECK_FALSE(validate_tcoalg(C).clean());
    }
}

TEST_CASE("coopposite is a valid coalgebra and an involution") {
    for (const std::string &name :
         {"sweedler", "constant_kz3_z2", "group_algebra3"}) {
        CAPTURE(name);
        TCoalg H = demo(name).H;
        TCoalg C = coopposite(H);
        CHECK(validate_tcoalg(C).clean());
        CHECK(tcoalg_equal(coopposite(C), H));
    }
}

TEST_CASE("iterated comultiplication agrees with nesting by hand") {
    TCoalg H = demo("constant_kz3_z2").H;
    // grades (1,1,0): left-nested (Δ_{1,1} ⊗ id) ∘ Δ_{0,0} on H_0
    Matrix lhs = iterated_comul(H, {1, 1, 0});
    Matrix byhand =
        mat_mul(kron(H.comul(1, 1), Matrix::identity(H.dim(0))), H.comul(0, 0));
    CHECK(lhs == byhand);
}

TEST_CASE("antipode inverse and graded multiplication") {
    TCoalg H = demo("sweedler").H;
    auto sinv = antipode_inverse(H);
    CHECK(mat_mul(sinv[0], H.antipode(0)) == Matrix::identity(4));

    GradedElement g{0, H.basis(0, 1)}, x{0, H.basis(0, 2)};
    GradedElement gx = elem_mul(H, g, x);
    CHECK(gx.grade == 0);
    CHECK(vec_eq(gx.coords, H.basis(0, 3)));
}

TEST_CASE("tensor algebra products and inverses") {
    TCoalg H = demo("constant_kz3_z2").H;
    TensorAlgebra T(H, {0, 1});
    CHECK(T.dim() == 9);
    Vec u = T.unit();
    Vec g2 = kron_vec(H.basis(0, 1), H.basis(1, 2));
    CHECK(vec_eq(T.mul(u, g2), g2));
    CHECK(vec_eq(T.mul(g2, T.inverse(g2)), u));

    Vec with_leg = insert_unit_leg(H, H.basis(0, 1), {3}, 1, 1);
    CHECK(vec_eq(with_leg, kron_vec(H.basis(0, 1), H.unit(1))));
}
