#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hopf/demos.hpp"

using namespace hopf;

namespace {

/// FILE arguments accept a plain path or the demo:NAME scheme.
TCoalgData load_any(const std::string &spec) {
    if (spec.rfind("demo:", 0) == 0) return demo(spec.substr(5));
    return load_tcoalg(spec);
}

void print_report(const Report &rep, const std::string &format) {
    if (format == "json")
        std::cout << rep.to_json() << "\n";
    else
        std::cout << rep.to_text();
}

Report run_level(const TCoalgData &d, const std::string &level) {
    Report rep = validate_tcoalg(d.H);
    if (level == "hopf") return rep;
    if (!d.has_r)
        throw ParseError("input carries no R family (required for --level " +
                         level + ")");
    TCoalgData c = d;
    ensure_rmatrix_inverses(c.H, c.R);
    rep.merge(validate_rmatrix(c.H, c.R));
    if (level == "quasi") return rep;
    if (!d.has_theta)
        throw ParseError("input carries no twist family (required for "
                         "--level ribbon)");
    ensure_ribbon_inverses(c.H, c.theta);
    rep.merge(validate_ribbon(c.H, c.R, c.theta));
    return rep;
}

std::string elem_str(const TCoalg &H, int a, const Vec &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string name =
            a < (int)H.basis_names.size() && i < H.basis_names[a].size()
                ? H.basis_names[a][i]
                : "e" + std::to_string(i);
        if (!out.empty()) out += " + ";
        out += v[i].str() + "*" + name;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact structure-constant engine for crossed Hopf "
                 "group-coalgebras"};
    app.require_subcommand(1);

    std::string file, out, level = "hopf", format = "text", kind, name;
    std::string hfile, vfile;

    auto *check = app.add_subcommand("check", "run the axiom verifier stack");
    check->add_option("FILE", file)->required();
    check->add_option("--level", level)
        ->check(CLI::IsMember({"hopf", "quasi", "ribbon"}));
    check->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));

    auto *construct =
        app.add_subcommand("construct", "derive a new coalgebra from FILE");
    construct->add_option("KIND", kind)
        ->required()
        ->check(CLI::IsMember(
            {"coop", "mirror", "dualcoop", "double", "ribbon-ext"}));
    construct->add_option("FILE", file)->required();
    construct->add_option("-o,--output", out)->required();

    auto *drinfeld = app.add_subcommand(
        "drinfeld", "print the Drinfeld elements and verify their identities");
    drinfeld->add_option("FILE", file)->required();
    drinfeld->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));

    auto *yd = app.add_subcommand("yd", "module-comodule operations");
    yd->require_subcommand(1);
    auto *ydcheck = yd->add_subcommand("check", "verify the compatibility axioms");
    ydcheck->add_option("HFILE", hfile)->required();
    ydcheck->add_option("VFILE", vfile)->required();
    auto *ydround = yd->add_subcommand(
        "roundtrip", "transport to a double module and back, compare bit-exact");
    ydround->add_option("HFILE", hfile)->required();
    ydround->add_option("VFILE", vfile)->required();

    auto *rib = app.add_subcommand("rib", "twist-paired module operations");
    rib->require_subcommand(1);
    auto *ribcheck = rib->add_subcommand("check", "verify the twist conditions");
    ribcheck->add_option("HFILE", hfile)->required();
    ribcheck->add_option("OFILE", vfile)->required();

    auto *demo_cmd = app.add_subcommand("demo", "emit a built-in fixture");
    demo_cmd->add_option("NAME", name)->required();
    demo_cmd->add_option("-o,--output", out);

    auto *report_cmd =
        app.add_subcommand("report", "full verifier stack for everything "
                                     "the file carries");
    report_cmd->add_option("FILE", file)->required();
    report_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            Report rep = run_level(load_any(file), level);
            print_report(rep, format);
            return rep.clean() ? 0 : 1;
        }
        if (*construct) {
            TCoalgData d = load_any(file);
            TCoalgData r;
            if (kind == "coop") {
                r.H = coopposite(d.H);
            } else if (kind == "mirror") {
                if (d.has_r) {
                    QuasiTCoalg m = mirror(QuasiTCoalg{d.H, d.R});
                    r = TCoalgData{std::move(m.H), std::move(m.R), true, {},
                                   false};
                } else {
                    r.H = mirror(d.H);
                }
            } else if (kind == "dualcoop") {
                r.H = dual_coop(d.H);
            } else if (kind == "double") {
                QuasiTCoalg m = drinfeld_double(d.H);
                r = TCoalgData{std::move(m.H), std::move(m.R), true, {}, false};
            } else {  // ribbon-ext
                if (!d.has_r)
                    throw ParseError("ribbon-ext needs an R family");
                RibbonTCoalg m = ribbon_extension(QuasiTCoalg{d.H, d.R});
                r = TCoalgData{std::move(m.H), std::move(m.R), true,
                               std::move(m.theta), true};
            }
            save_tcoalg(r, out);
            return 0;
        }
        if (*drinfeld) {
            TCoalgData d = load_any(file);
            if (!d.has_r) throw ParseError("input carries no R family");
            ensure_rmatrix_inverses(d.H, d.R);
            DrinfeldFamily u = drinfeld_elements(d.H, d.R);
            for (int a = 0; a < d.H.order(); ++a)
                std::cout << "u[" << a
                          << "] = " << elem_str(d.H, a, u.u[a]) << "\n";
            Report rep = check_drinfeld_props(d.H, d.R);
            print_report(rep, format);
            return rep.clean() ? 0 : 1;
        }
        if (*yd) {
            TCoalgData d = load_any(hfile);
            YDModule v = load_yd(vfile);
            if (*ydcheck) {
                Report rep = validate_yd(d.H, v);
                print_report(rep, format);
                return rep.clean() ? 0 : 1;
            }
            YDModule back = ddouble_to_yd(d.H, yd_to_ddouble(d.H, v));
            bool ok = yd_equal(v, back);
            std::cout << (ok ? "roundtrip: identity\n"
                             : "roundtrip: MISMATCH\n");
            return ok ? 0 : 1;
        }
        if (*rib) {
            TCoalgData d = load_any(hfile);
            if (!d.has_r) throw ParseError("input carries no R family");
            RibObject o = load_rib(vfile);
            Report rep = validate_rib(d.H, d.R, o);
            print_report(rep, format);
            return rep.clean() ? 0 : 1;
        }
        if (*demo_cmd) {
            TCoalgData d = demo(name);
            if (!out.empty()) {
                save_tcoalg(d, out);
            } else {
                std::cout << "demo " << name << ": group order "
                          << d.H.order() << ", dims";
                for (int a = 0; a < d.H.order(); ++a)
                    std::cout << " " << d.H.dim(a);
                std::cout << (d.has_r ? ", with R" : "")
                          << (d.has_theta ? ", with twist" : "") << "\n";
            }
            return 0;
        }
        // report
        TCoalgData d = load_any(file);
        std::string lvl = d.has_theta ? "ribbon" : d.has_r ? "quasi" : "hopf";
        Report rep = run_level(d, lvl);
        print_report(rep, format);
        return rep.clean() ? 0 : 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
