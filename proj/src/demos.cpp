#include "hopf/demos.hpp"

namespace hopf {

namespace {

/// The group algebra k[Z/n] as a single component (grouplike basis).
Component cyclic_component(int n) {
    Component c;
    c.dim = n;
    c.mul = Tensor3(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.mul.at(i, j, (i + j) % n) = Scalar(1);
    c.unit = Vec(n, Scalar(0));
    c.unit[0] = Scalar(1);
    return c;
}

/// Grouplike comultiplication matrix for a cyclic component: e_i ↦ e_i ⊗ e_i.
Matrix grouplike_comul(int n) {
    Matrix m(n * n, n);
    for (int i = 0; i < n; ++i) m.at(i * n + i, i) = Scalar(1);
    return m;
}

/// g^i ↦ g^{-i}.
Matrix cyclic_inversion(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at((n - i) % n, i) = Scalar(1);
    return m;
}

RibbonFamily unit_ribbon(const TCoalg &H) {
    RibbonFamily t;
    t.theta.resize(H.order());
    t.theta_inv.resize(H.order());
    for (int a = 0; a < H.order(); ++a)
        t.theta[a] = t.theta_inv[a] = H.unit(a);
    return t;
}

std::vector<std::string> cyclic_names(int n) {
    std::vector<std::string> v;
    v.push_back("1");
    for (int i = 1; i < n; ++i)
        v.push_back(i == 1 ? "g" : "g" + std::to_string(i));
    return v;
}

TCoalgData trivial_demo(int n) {
    TCoalgData d;
    TCoalg &H = d.H;
    H.group = FiniteGroup::cyclic(n);
    H.components.assign(n, Component{});
    for (Component &c : H.components) {
        c.dim = 1;
        c.mul = Tensor3(1, 1, 1);
        c.mul.at(0, 0, 0) = Scalar(1);
        c.unit = Vec(1, Scalar(1));
    }
    H.allocate();
    Matrix one = Matrix::identity(1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            H.comul(a, b) = one;
            H.conj(a, b) = one;
        }
        H.antipode(a) = one;
    }
    H.counit_ = one;
    d.R = trivial_rmatrix(H);
    d.has_r = true;
    d.theta = unit_ribbon(H);
    d.has_theta = true;
    return d;
}

TCoalgData group_algebra_demo(int n) {
    TCoalgData d;
    TCoalg &H = d.H;
    H.group = FiniteGroup(std::vector<std::vector<int>>{{0}});
    H.components = {cyclic_component(n)};
    H.allocate();
    H.comul(0, 0) = grouplike_comul(n);
    H.counit_ = Matrix(1, n);
    for (int i = 0; i < n; ++i) H.counit_.at(0, i) = Scalar(1);
    H.antipode(0) = cyclic_inversion(n);
    H.conj(0, 0) = Matrix::identity(n);
    H.basis_names = {cyclic_names(n)};
    d.R = trivial_rmatrix(H);
    d.has_r = true;
    d.theta = unit_ribbon(H);
    d.has_theta = true;
    return d;
}

TCoalgData sweedler_demo() {
    TCoalgData d;
    TCoalg &H = d.H;
    H.group = FiniteGroup(std::vector<std::vector<int>>{{0}});
    Component c;
    c.dim = 4;  // basis 1, g, x, gx with g² = 1, x² = 0, xg = -gx
    c.mul = Tensor3(4, 4, 4);
    auto set = [&](int i, int j, int k, long v) {
        c.mul.at(i, j, k) = Scalar(v);
    };
    for (int j = 0; j < 4; ++j) set(0, j, j, 1);
    for (int i = 1; i < 4; ++i) set(i, 0, i, 1);
    set(1, 1, 0, 1);   // g·g = 1
    set(1, 2, 3, 1);   // g·x = gx
    set(1, 3, 2, 1);   // g·gx = x
    set(2, 1, 3, -1);  // x·g = -gx
    set(3, 1, 2, -1);  // gx·g = -x
    c.unit = {Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
    H.components = {c};
    H.allocate();
    Matrix cm(16, 4);
    cm.at(0 * 4 + 0, 0) = Scalar(1);  // Δ(1)  = 1⊗1
    cm.at(1 * 4 + 1, 1) = Scalar(1);  // Δ(g)  = g⊗g
    cm.at(2 * 4 + 0, 2) = Scalar(1);  // Δ(x)  = x⊗1 + g⊗x
    cm.at(1 * 4 + 2, 2) = Scalar(1);
    cm.at(3 * 4 + 1, 3) = Scalar(1);  // Δ(gx) = gx⊗g + 1⊗gx
    cm.at(0 * 4 + 3, 3) = Scalar(1);
    H.comul(0, 0) = cm;
    H.counit_ = Matrix(1, 4);
    H.counit_.at(0, 0) = Scalar(1);
    H.counit_.at(0, 1) = Scalar(1);
    Matrix s(4, 4);
    s.at(0, 0) = Scalar(1);
    s.at(1, 1) = Scalar(1);
    s.at(3, 2) = Scalar(-1);  // s(x)  = -gx
    s.at(2, 3) = Scalar(1);   // s(gx) = x
    H.antipode(0) = s;
    H.conj(0, 0) = Matrix::identity(4);
    H.basis_names = {{"1", "g", "x", "gx"}};
    return d;
}

TCoalgData constant_demo() {
    TCoalgData d;
    TCoalg &H = d.H;
    H.group = FiniteGroup::cyclic(2);
    H.components = {cyclic_component(3), cyclic_component(3)};
    H.allocate();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            H.comul(a, b) = grouplike_comul(3);
            // the nontrivial grade acts by the inversion automorphism
            H.conj(b, a) = b == 0 ? Matrix::identity(3) : cyclic_inversion(3);
        }
        H.antipode(a) = cyclic_inversion(3);
    }
    H.counit_ = Matrix(1, 3);
    for (int i = 0; i < 3; ++i) H.counit_.at(0, i) = Scalar(1);
    H.basis_names = {cyclic_names(3), cyclic_names(3)};
    return d;
}

TCoalgData double_kz2_demo() {
    QuasiTCoalg q = drinfeld_double(group_algebra_demo(2).H);
    return TCoalgData{std::move(q.H), std::move(q.R), true, {}, false};
}

TCoalgData rt_double_kz2_demo() {
    QuasiTCoalg q = drinfeld_double(group_algebra_demo(2).H);
    RibbonTCoalg r = ribbon_extension(q);
    return TCoalgData{std::move(r.H), std::move(r.R), true,
                      std::move(r.theta), true};
}

}  // namespace

std::vector<std::string> demo_names() {
    return {"trivial_z2",     "trivial_z3",   "group_algebra2",
            "group_algebra3", "sweedler",     "constant_kz3_z2",
            "double_kz2",     "rt_double_kz2"};
}

TCoalgData demo(const std::string &name) {
    if (name == "trivial" || name == "trivial_z2") return trivial_demo(2);
    if (name == "trivial_z3") return trivial_demo(3);
    if (name == "group_algebra2") return group_algebra_demo(2);
    if (name == "group_algebra3") return group_algebra_demo(3);
    if (name == "sweedler") return sweedler_demo();
    if (name == "constant_kz3_z2") return constant_demo();
    if (name == "double_kz2") return double_kz2_demo();
    if (name == "rt_double_kz2") return rt_double_kz2_demo();
    throw UnknownDemo(name);
}

}  // namespace hopf
