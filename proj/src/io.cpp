#include "hopf/io.hpp"

#include <fstream>

namespace hopf {

namespace {

std::string key2(int a, int b) {
    return std::to_string(a) + "," + std::to_string(b);
}

njson vec_json(const Vec &v) {
    njson a = njson::array();
    for (const Scalar &s : v) a.push_back(s.str());
    return a;
}

Vec vec_parse(const njson &a, std::uint32_t p) {
    if (!a.is_array()) throw ParseError("expected an array of scalars");
    Vec v;
    v.reserve(a.size());
    for (const auto &s : a) v.push_back(Scalar::parse(s.get<std::string>(), p));
    return v;
}

njson mat_json(const Matrix &m) {
    njson a = njson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
    return a;
}

Matrix mat_parse(const njson &a, std::uint32_t p) {
    if (!a.is_array()) throw ParseError("expected a matrix (array of rows)");
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    Matrix m(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) throw ParseError("ragged matrix rows");
        Vec r = vec_parse(a[i], p);
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = r[j];
    }
    return m;
}

njson mul_json(const Tensor3 &t) {
    njson a = njson::array();
    for (std::size_t i = 0; i < t.d1(); ++i) {
        njson row = njson::array();
        for (std::size_t j = 0; j < t.d2(); ++j) {
            njson cell = njson::array();
            for (std::size_t k = 0; k < t.d3(); ++k)
                cell.push_back(t.at(i, j, k).str());
            row.push_back(cell);
        }
        a.push_back(row);
    }
    return a;
}

Tensor3 mul_parse(const njson &a, std::size_t d, std::uint32_t p) {
    if (!a.is_array() || a.size() != d)
        throw ParseError("structure-constant block has wrong size");
    Tensor3 t(d, d, d, p);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].size() != d) throw ParseError("ragged structure constants");
        for (std::size_t j = 0; j < d; ++j) {
            if (a[i][j].size() != d)
                throw ParseError("ragged structure constants");
            for (std::size_t k = 0; k < d; ++k)
                t.at(i, j, k) =
                    Scalar::parse(a[i][j][k].get<std::string>(), p);
        }
    }
    return t;
}

std::uint32_t infer_field(const TCoalg &H) {
    for (const Component &c : H.components)
        for (const Scalar &s : c.unit)
            if (s.modulus() != 0) return s.modulus();
    return 0;
}

const njson &field_at(const njson &j, const std::string &key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError("missing field '" + key + "'");
    return *it;
}

}  // namespace

njson read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return njson::parse(in);
    } catch (const njson::exception &e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const njson &j, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << j.dump(1) << "\n";
}

njson tcoalg_to_json(const TCoalgData &d) {
    const TCoalg &H = d.H;
    const int n = H.order();
    njson j;
    j["format"] = "tcoalg-v1";
    j["field"] = infer_field(H);
    j["group"] = H.group.table();
    njson comps = njson::array();
    for (int a = 0; a < n; ++a) {
        njson c;
        c["dim"] = H.dim(a);
        c["mul"] = mul_json(H.components[a].mul);
        c["unit"] = vec_json(H.unit(a));
        comps.push_back(c);
    }
    j["components"] = comps;
    njson comul;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) comul[key2(a, b)] = mat_json(H.comul(a, b));
    j["comul"] = comul;
    j["counit"] = vec_json(H.counit_.row(0));
    njson anti = njson::array();
    for (int a = 0; a < n; ++a) anti.push_back(mat_json(H.antipode(a)));
    j["antipode"] = anti;
    njson conj;
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) conj[key2(b, a)] = mat_json(H.conj(b, a));
    j["conj"] = conj;
    if (d.has_r) {
        njson rm, rmi;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                rm[key2(a, b)] = vec_json(d.R.R(a, b));
                if (!d.R.Rinv(a, b).empty())
                    rmi[key2(a, b)] = vec_json(d.R.Rinv(a, b));
            }
        j["rmatrix"] = rm;
        if (!rmi.empty()) j["rmatrix_inv"] = rmi;
    }
    if (d.has_theta) {
        njson tw = njson::array(), twi = njson::array();
        for (int a = 0; a < n; ++a) {
            tw.push_back(vec_json(d.theta.theta[a]));
            if (!d.theta.theta_inv.empty())
                twi.push_back(vec_json(d.theta.theta_inv[a]));
        }
        j["twist"] = tw;
        if (!twi.empty()) j["twist_inv"] = twi;
    }
    if (!H.basis_names.empty()) {
        bool any = false;
        for (const auto &v : H.basis_names)
            if (!v.empty()) any = true;
        if (any) j["basis_names"] = H.basis_names;
    }
    return j;
}

TCoalgData tcoalg_from_json(const njson &j) {
    if (j.value("format", "") != std::string("tcoalg-v1"))
        throw ParseError("not a tcoalg-v1 file");
    std::uint32_t p = j.value("field", 0u);
    TCoalgData d;
    TCoalg &H = d.H;
    H.group = FiniteGroup(
        field_at(j, "group").get<std::vector<std::vector<int>>>());
    const int n = H.order();
    const njson &comps = field_at(j, "components");
    if ((int)comps.size() != n)
        throw ParseError("component count does not match the group order");
    H.components.resize(n);
    for (int a = 0; a < n; ++a) {
        std::size_t dim = comps[a].at("dim").get<std::size_t>();
        H.components[a].dim = dim;
        H.components[a].mul = mul_parse(comps[a].at("mul"), dim, p);
        H.components[a].unit = vec_parse(comps[a].at("unit"), p);
        if (H.components[a].unit.size() != dim)
            throw ShapeMismatch("unit length mismatch in component " +
                                std::to_string(a));
    }
    H.allocate();
    const njson &comul = field_at(j, "comul");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = comul.find(key2(a, b));
            if (it == comul.end())
                throw ParseError("missing comul block " + key2(a, b));
            H.comul(a, b) = mat_parse(*it, p);
        }
    Vec eps = vec_parse(field_at(j, "counit"), p);
    H.counit_ = Matrix(1, eps.size(), p);
    for (std::size_t i = 0; i < eps.size(); ++i) H.counit_.at(0, i) = eps[i];
    const njson &anti = field_at(j, "antipode");
    if ((int)anti.size() != n) throw ParseError("antipode family has wrong size");
    for (int a = 0; a < n; ++a) H.antipode(a) = mat_parse(anti[a], p);
    const njson &conj = field_at(j, "conj");
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            auto it = conj.find(key2(b, a));
            if (it == conj.end())
                throw ParseError("missing conj block " + key2(b, a));
            H.conj(b, a) = mat_parse(*it, p);
        }
    H.check_shapes();

    if (j.contains("rmatrix")) {
        d.has_r = true;
        d.R.allocate(n);
        const njson &rm = j.at("rmatrix");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto it = rm.find(key2(a, b));
                if (it == rm.end())
                    throw ParseError("missing rmatrix block " + key2(a, b));
                d.R.R(a, b) = vec_parse(*it, p);
                if (d.R.R(a, b).size() != H.dim(a) * H.dim(b))
                    throw ShapeMismatch("rmatrix block " + key2(a, b) +
                                        " has wrong length");
            }
        if (j.contains("rmatrix_inv")) {
            const njson &rmi = j.at("rmatrix_inv");
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    auto it = rmi.find(key2(a, b));
                    if (it != rmi.end()) d.R.Rinv(a, b) = vec_parse(*it, p);
                }
        }
    }
    if (j.contains("twist")) {
        d.has_theta = true;
        const njson &tw = j.at("twist");
        if ((int)tw.size() != n) throw ParseError("twist family has wrong size");
        d.theta.theta.resize(n);
        for (int a = 0; a < n; ++a) {
            d.theta.theta[a] = vec_parse(tw[a], p);
            if (d.theta.theta[a].size() != H.dim(a))
                throw ShapeMismatch("twist element at grade " +
                                    std::to_string(a) + " has wrong length");
        }
        if (j.contains("twist_inv")) {
            const njson &twi = j.at("twist_inv");
            if ((int)twi.size() != n)
                throw ParseError("twist_inv family has wrong size");
            d.theta.theta_inv.resize(n);
            for (int a = 0; a < n; ++a)
                d.theta.theta_inv[a] = vec_parse(twi[a], p);
        }
    }
    if (j.contains("basis_names"))
        H.basis_names =
            j.at("basis_names").get<std::vector<std::vector<std::string>>>();
    return d;
}

TCoalgData load_tcoalg(const std::string &path) {
    return tcoalg_from_json(read_json_file(path));
}

void save_tcoalg(const TCoalgData &d, const std::string &path) {
    write_json_file(tcoalg_to_json(d), path);
}

njson hmodule_to_json(const HModule &m, std::uint32_t field) {
    njson j;
    j["format"] = "hmodule-v1";
    j["field"] = field;
    j["grade"] = m.grade;
    j["dim"] = m.dim;
    njson act = njson::array();
    for (const Matrix &a : m.action) act.push_back(mat_json(a));
    j["action"] = act;
    return j;
}

namespace {

HModule hmodule_parse_core(const njson &j) {
    std::uint32_t p = j.value("field", 0u);
    HModule m;
    m.grade = field_at(j, "grade").get<int>();
    m.dim = field_at(j, "dim").get<std::size_t>();
    const njson &act = field_at(j, "action");
    for (const auto &a : act) {
        Matrix mat = mat_parse(a, p);
        if (mat.rows() != m.dim || mat.cols() != m.dim)
            throw ShapeMismatch("action matrix is not dim x dim");
        m.action.push_back(mat);
    }
    return m;
}

}  // namespace

HModule hmodule_from_json(const njson &j) {
    if (j.value("format", "") != std::string("hmodule-v1"))
        throw ParseError("not an hmodule-v1 file");
    return hmodule_parse_core(j);
}

HModule load_hmodule(const std::string &path) {
    return hmodule_from_json(read_json_file(path));
}

void save_hmodule(const HModule &m, const std::string &path,
                  std::uint32_t field) {
    write_json_file(hmodule_to_json(m, field), path);
}

njson yd_to_json(const YDModule &v, std::uint32_t field) {
    njson j = hmodule_to_json(v.module, field);
    j["format"] = "yd-v1";
    njson co = njson::array();
    for (const Matrix &c : v.coaction) co.push_back(mat_json(c));
    j["coaction"] = co;
    return j;
}

YDModule yd_from_json(const njson &j) {
    if (j.value("format", "") != std::string("yd-v1"))
        throw ParseError("not a yd-v1 file");
    std::uint32_t p = j.value("field", 0u);
    YDModule v;
    v.module = hmodule_parse_core(j);
    for (const auto &c : field_at(j, "coaction"))
        v.coaction.push_back(mat_parse(c, p));
    return v;
}

YDModule load_yd(const std::string &path) {
    return yd_from_json(read_json_file(path));
}

void save_yd(const YDModule &v, const std::string &path, std::uint32_t field) {
    write_json_file(yd_to_json(v, field), path);
}

njson rib_to_json(const RibObject &o, std::uint32_t field) {
    njson j = hmodule_to_json(o.module, field);
    j["format"] = "rib-v1";
    j["t"] = mat_json(o.t);
    return j;
}

RibObject rib_from_json(const njson &j) {
    if (j.value("format", "") != std::string("rib-v1"))
        throw ParseError("not a rib-v1 file");
    std::uint32_t p = j.value("field", 0u);
    RibObject o;
    o.module = hmodule_parse_core(j);
    o.t = mat_parse(field_at(j, "t"), p);
    return o;
}

RibObject load_rib(const std::string &path) {
    return rib_from_json(read_json_file(path));
}

void save_rib(const RibObject &o, const std::string &path,
              std::uint32_t field) {
    write_json_file(rib_to_json(o, field), path);
}

}  // namespace hopf
