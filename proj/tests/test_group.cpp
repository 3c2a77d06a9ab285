#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopf/group.hpp"

using namespace hopf;

TEST_CASE("cyclic groups validate") {
    for (int n : {1, 2, 3, 6}) {
        FiniteGroup g = FiniteGroup::cyclic(n);
        CHECK(g.validate().clean());
        for (int a = 0; a < n; ++a) {
            CHECK(g.mul(a, g.inv(a)) == 0);
            CHECK(g.conj(a, (a + 1) % n) == a);  // abelian
        }
    }
}

TEST_CASE("symmetric group on three letters") {
    // elements: id, (12), (13), (23), (123), (132)
    auto perm_mul = [](int a, int b) {
        static const int P[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                    {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
        int c[3];
        for (int i = 0; i < 3; ++i) c[i] = P[a][P[b][i]];
        for (int k = 0; k < 6; ++k)
            if (c[0] == P[k][0] && c[1] == P[k][1] && c[2] == P[k][2]) return k;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) t[a][b] = perm_mul(a, b);
    FiniteGroup g(t);
    CHECK(g.validate().clean());
    CHECK(g.mul(1, 2) != g.mul(2, 1));  // nonabelian
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(g.mul(g.mul(b, a), g.inv(b)) == g.conj(a, b));
}

TEST_CASE("broken tables are reported") {
    FiniteGroup bad(std::vector<std::vector<int>>{{0, 1}, {1, 1}});
    Report rep = bad.validate();
    CHECK_FALSE(rep.clean());
    CHECK(rep.has_failure("group.row-permutation"));

    // identity not at index 0
    FiniteGroup shifted(std::vector<std::vector<int>>{{1, 0}, {0, 1}});
    CHECK(shifted.validate().has_failure("group.identity"));
}
