#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopf/demos.hpp"

using namespace hopf;

TEST_CASE("mirror is a valid coalgebra and an involution") {
    for (const std::string &name :
         {"trivial_z3", "group_algebra2", "sweedler", "constant_kz3_z2"}) {
        CAPTURE(name);
        TCoalg H = demo(name).H;
        TCoalg M = mirror(H);
        CHECK(validate_tcoalg(M).clean());
        CHECK(tcoalg_equal(mirror(M), H));
    }
}

TEST_CASE("mirror carries R families along") {
    QuasiTCoalg q = drinfeld_double(demo("group_algebra2").H);
    ensure_rmatrix_inverses(q.H, q.R);
    QuasiTCoalg m = mirror(q);
    CHECK(validate_tcoalg(m.H).clean());
    CHECK(validate_rmatrix(m.H, m.R).clean());
    QuasiTCoalg back = mirror(m);
    CHECK(tcoalg_equal(back.H, q.H));
    for (int a = 0; a < q.H.order(); ++a)
        for (int b = 0; b < q.H.order(); ++b) {
            CHECK(vec_eq(back.R.R(a, b), q.R.R(a, b)));
            CHECK(vec_eq(back.R.Rinv(a, b), q.R.Rinv(a, b)));
        }
}

TEST_CASE("packed dual validates") {
    for (const std::string &name :
         {"group_algebra2", "sweedler", "constant_kz3_z2"}) {
        CAPTURE(name);
        TCoalg H = demo(name).H;
        TCoalg D = dual_coop(H);
        auto off = dual_block_offsets(H);
        CHECK(D.dim(0) == off.back());
        CHECK(validate_tcoalg(D).clean());
    }
}

TEST_CASE("doubles validate at the Hopf level") {
    QuasiTCoalg q = drinfeld_double(demo("group_algebra3").H);
    CHECK(q.H.dim(0) == 9);
    ensure_rmatrix_inverses(q.H, q.R);
    CHECK(validate_tcoalg(q.H).clean());
    CHECK(validate_rmatrix(q.H, q.R).clean());
}

TEST_CASE("ribbon extension of the double of k[Z/2]") {
    QuasiTCoalg q = drinfeld_double(demo("group_algebra2").H);
    RibbonTCoalg r = ribbon_extension(q);
    CHECK(r.H.dim(0) == 8);
    ensure_rmatrix_inverses(r.H, r.R);
    CHECK(validate_tcoalg(r.H).clean());
    CHECK(validate_rmatrix(r.H, r.R).clean());
    CHECK(validate_ribbon(r.H, r.R, r.theta).clean());
}
