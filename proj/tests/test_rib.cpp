#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopf/demos.hpp"

using namespace hopf;

namespace {

struct Fixture {
    QuasiTCoalg q;
    RibbonTCoalg rt;
    Fixture() {
        q = drinfeld_double(demo("group_algebra2").H);
        ensure_rmatrix_inverses(q.H, q.R);
        rt = ribbon_extension(q);
        ensure_rmatrix_inverses(rt.H, rt.R);
    }
};

}  // namespace

TEST_CASE("restriction of an extended-algebra module is a twist pair") {
    Fixture f;
    HModule reg = regular_module(f.rt.H, 0);
    RibObject o = rib_from_rt_module(f.q.H, reg);
    CHECK(validate_rib(f.q.H, f.q.R, o).clean());

    HModule back = rt_module_from_rib(f.q.H, o);
    CHECK(module_equal(back, reg));

    // a wrong twist is rejected
    RibObject bad = o;
    bad.t.at(0, 0) += Scalar(1);
    CHECK_FALSE(validate_rib(f.q.H, f.q.R, bad).clean());
}

TEST_CASE("tensor and dual stay inside the twist-paired class") {
    Fixture f;
    RibObject o = rib_from_rt_module(f.q.H, regular_module(f.rt.H, 0));
    RibObject t = rib_tensor(f.q.H, f.q.R, o, o);
    CHECK(validate_rib(f.q.H, f.q.R, t).clean());
    RibObject d = rib_dual(f.q.H, o);
    CHECK(validate_rib(f.q.H, f.q.R, d).clean());
    RibObject td = rib_tensor(f.q.H, f.q.R, o, d);
    CHECK(validate_rib(f.q.H, f.q.R, td).clean());
}

TEST_CASE("round trip starting from a twist pair") {
    Fixture f;
    RibObject o = rib_from_rt_module(f.q.H, regular_module(f.rt.H, 0));
    RibObject o2 = rib_tensor(f.q.H, f.q.R, o, rib_dual(f.q.H, o));
    RibObject back = rib_from_rt_module(f.q.H, rt_module_from_rib(f.q.H, o2));
    CHECK(module_equal(back.module, o2.module));
    CHECK(back.t == o2.t);
}

TEST_CASE("structural identities for s(u)") {
    Fixture f;
    CHECK(check_lemma_identities(f.q.H, f.q.R).clean());
    CHECK(check_lemma_identities(f.rt.H, f.rt.R).clean());
    TCoalgData g = demo("group_algebra3");
    CHECK(check_lemma_identities(g.H, g.R).clean());
}
