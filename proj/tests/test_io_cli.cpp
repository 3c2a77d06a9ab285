#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>

#include "doctest.h"
#include "hopf/demos.hpp"

using namespace hopf;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string &p) : path(p) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("coalgebra files round trip bit-exact") {
    for (const std::string &name : demo_names()) {
        CAPTURE(name);
        TCoalgData d = demo(name);
        TempFile f("io_test_" + name + ".json");
        save_tcoalg(d, f.path);
        TCoalgData back = load_tcoalg(f.path);
        CHECK(tcoalg_equal(back.H, d.H));
        CHECK(back.has_r == d.has_r);
        CHECK(back.has_theta == d.has_theta);
        CHECK(tcoalg_to_json(back) == tcoalg_to_json(d));

        // canonicalization is idempotent: save ∘ load = identity on files
        TempFile g("io_test_again_" + name + ".json");
        save_tcoalg(back, g.path);
        CHECK(read_json_file(f.path) == read_json_file(g.path));
    }
}

TEST_CASE("module, comodule, and twist-pair files round trip") {
    TCoalg H = demo("constant_kz3_z2").H;
    HModule reg = regular_module(H, 1);
    TempFile f1("io_test_mod.json");
    save_hmodule(reg, f1.path);
    CHECK(module_equal(load_hmodule(f1.path), reg));

    YDModule v = trivial_yd(H, reg);
    TempFile f2("io_test_yd.json");
    save_yd(v, f2.path);
    CHECK(yd_equal(load_yd(f2.path), v));

    QuasiTCoalg q = drinfeld_double(demo("group_algebra2").H);
    ensure_rmatrix_inverses(q.H, q.R);
    RibbonTCoalg rt = ribbon_extension(q);
    RibObject o = rib_from_rt_module(q.H, regular_module(rt.H, 0));
    TempFile f3("io_test_rib.json");
    save_rib(o, f3.path);
    RibObject back = load_rib(f3.path);
    CHECK(module_equal(back.module, o.module));
    CHECK(back.t == o.t);
}

TEST_CASE("malformed inputs raise typed errors") {
    CHECK_THROWS_AS(load_tcoalg("no_such_file.json"), ParseError);
    CHECK_THROWS_AS(demo("nonexistent"), UnknownDemo);

    njson j = tcoalg_to_json(demo("sweedler"));
    njson wrong = j;
    wrong["format"] = "something-else";
    CHECK_THROWS_AS(tcoalg_from_json(wrong), ParseError);

    // a comul block of the wrong shape is rejected with the pair named
    njson bad = j;
    bad["comul"]["0,0"].erase(0);
    CHECK_THROWS_AS(tcoalg_from_json(bad), ShapeMismatch);

    njson missing = j;
    missing.erase("antipode");
    CHECK_THROWS_AS(tcoalg_from_json(missing), ParseError);
}

TEST_CASE("reloaded constructions still verify") {
    TCoalgData d = demo("double_kz2");
    TempFile f("io_test_double.json");
    ensure_rmatrix_inverses(d.H, d.R);
    save_tcoalg(d, f.path);
    TCoalgData back = load_tcoalg(f.path);
    CHECK(validate_tcoalg(back.H).clean());
    CHECK(validate_rmatrix(back.H, back.R).clean());
}
