#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopf/demos.hpp"

using namespace hopf;

TEST_CASE("swap_legs") {
    Vec x = {Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5), Scalar(6)};
    Vec s = swap_legs(x, 2, 3);
    CHECK(vec_eq(s, Vec{Scalar(1), Scalar(4), Scalar(2), Scalar(5), Scalar(3),
                        Scalar(6)}));
    CHECK(vec_eq(swap_legs(s, 3, 2), x));
}

TEST_CASE("unit R families on cocommutative fixtures") {
    for (const std::string &name :
         {"trivial_z2", "trivial_z3", "group_algebra2", "group_algebra3"}) {
        CAPTURE(name);
        TCoalgData d = demo(name);
        REQUIRE(d.has_r);
        ensure_rmatrix_inverses(d.H, d.R);
        CHECK(validate_rmatrix(d.H, d.R).clean());

        DrinfeldFamily u = drinfeld_elements(d.H, d.R);
        for (int a = 0; a < d.H.order(); ++a) {
            CHECK(vec_eq(u.u[a], d.H.unit(a)));
            CHECK(vec_eq(u.uinv[a], d.H.unit(a)));
        }
        CHECK(check_drinfeld_props(d.H, d.R).clean());
        CHECK(validate_ribbon(d.H, d.R, d.theta).clean());
    }
}

TEST_CASE("a rescaled R family violates the splitting axioms") {
    TCoalgData d = demo("group_algebra2");
    for (auto &v : d.R.R_)
        for (Scalar &s : v) s *= Scalar(2);
    d.R.Rinv_.assign(d.R.Rinv_.size(), Vec());
    ensure_rmatrix_inverses(d.H, d.R);
    Report rep = validate_rmatrix(d.H, d.R);
    CHECK(rep.has_failure("rmatrix.split-right"));
    CHECK(rep.has_failure("rmatrix.split-left"));
}

TEST_CASE("the double of k[Z/2] is quasitriangular with Drinfeld identities") {
    QuasiTCoalg q = drinfeld_double(demo("group_algebra2").H);
    CHECK(q.H.dim(0) == 4);
    ensure_rmatrix_inverses(q.H, q.R);
    CHECK(validate_tcoalg(q.H).clean());
    CHECK(validate_rmatrix(q.H, q.R).clean());
    CHECK(check_drinfeld_props(q.H, q.R).clean());
}
