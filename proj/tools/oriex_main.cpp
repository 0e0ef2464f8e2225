#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oriex/io.hpp"

using namespace oriex;

namespace {

double parse_angle(const std::string& s) {
    std::string t = s;
    bool radians = false;
    if (t.size() > 3 && t.substr(t.size() - 3) == "rad") {
        radians = true;
        t = t.substr(0, t.size() - 3);
    } else if (!t.empty() && (t.back() == 'r' || t.back() == 'R')) {
        radians = true;
        t.pop_back();
    }
    size_t pos = 0;
    double v = std::stod(t, &pos);
    if (pos != t.size()) throw CLI::ValidationError("angle", "cannot parse angle '" + s + "'");
    return radians ? v : deg2rad(v);
}

Tolerance global_tol() {
    Tolerance tol;
    if (const char* env = std::getenv("ORIEX_TOLERANCE")) {
        double v = std::atof(env);
        if (v > 0) {
            tol.eps_len = v;
            tol.eps_ang = v;
        }
    }
    return tol;
}

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open output file: " + path);
    os << content;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void write_outputs(const CreasePattern& cp, const std::string& out, const std::string& format,
                   const Tolerance& tol) {
    bool fold = format == "fold" || format == "both";
    bool svg = format == "svg" || format == "both";
    if (out == "-") {
        if (fold) std::cout << emit_fold(cp, tol);
        if (svg) std::cout << emit_svg(cp, {}, tol);
        return;
    }
    std::string base = out;
    auto dot = base.rfind('.');
    if (dot != std::string::npos && (base.substr(dot) == ".fold" || base.substr(dot) == ".svg"))
        base = base.substr(0, dot);
    if (fold) write_file(base + ".fold", emit_fold(cp, tol));
    if (svg) write_file(base + ".svg", emit_svg(cp, {}, tol));
}

int report_diagnostics(const CreasePattern& cp, const Tolerance& tol) {
    auto diags = validate_pattern(cp, tol);
    if (diags.empty()) {
        std::cout << "pattern ok: " << cp.vertices.size() << " vertices, "
                  << cp.creases.size() << " creases\n";
        return 0;
    }
    for (const auto& d : diags) std::cout << "diagnostic: " << d.message << "\n";
    return 1;
}

std::string fam_name(Family f) {
    return f == Family::Conventional ? "conv" : (f == Family::New ? "new" : "auto");
}

void print_report_text(const PolyhedronSpec& s, const InterferenceReport& rep) {
    std::ostringstream os;
    os << "vertices (angles in degrees, kappa per unit height):\n";
    os << "  i   alpha   beta_l  beta_r  gamma   lambda  kconv(L,R)      kin(L,R)        "
          "kout(L,R)\n";
    for (int i = 0; i < s.n(); ++i) {
        const auto& r = rep.vertex_rows[i];
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "  %-3d %-7.3f %-7.3f %-7.3f %-7.3f %-7.5f %-7.5f %-7.5f %-7.5f %-7.5f "
                      "%-7.5f %-7.5f\n",
                      i, rad2deg(r.alpha), rad2deg(s.ang(i).beta_l), rad2deg(s.ang(i).beta_r),
                      rad2deg(r.gamma), r.lambda, r.kconv_l, r.kconv_r, r.kin_l, r.kin_r,
                      r.kout_l, r.kout_r);
        os << buf;
    }
    os << "edges:\n  i   len      kconv    knew     used     order      flipped\n";
    for (int i = 0; i < s.n(); ++i) {
        const auto& e = rep.edge_rows[i];
        const char* ord = e.order == PleatOrder::ThisInner
                              ? "this-in"
                              : (e.order == PleatOrder::NextInner ? "next-in" : "tie");
        char buf[256];
        std::snprintf(buf, sizeof buf, "  %-3d %-8.5f %-8.5f %-8.5f %-8.5f %-10s %s\n", i,
                      e.len, e.kconv, e.knew, e.knew_used, ord, e.flipped ? "yes" : "no");
        os << buf;
    }
    auto num = [](double v) {
        return std::isinf(v) ? std::string("inf") : format_number(v);
    };
    os << "h_max  = " << num(rep.h_max) << "\n";
    os << "h_conv = " << num(rep.h_conv);
    if (rep.binding_conv >= 0) os << "  (binding edge " << rep.binding_conv << ")";
    os << "\n";
    os << "h_new  = " << num(rep.h_new);
    if (rep.binding_new >= 0) os << "  (binding edge " << rep.binding_new << ")";
    os << "\n";
    os << "height = " << num(rep.height) << "  feasible: conv=" << (rep.feasible_conv ? "yes" : "no")
       << " new=" << (rep.feasible_new ? "yes" : "no") << "\n";
    os << "fold order:";
    for (int g : rep.fold_order) os << " " << g;
    os << "\n";
    for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
    std::cout << os.str();
}

void print_report_json(const PolyhedronSpec& s, const InterferenceReport& rep) {
    auto num = [](double v) {
        return std::isinf(v) ? std::string("\"inf\"") : format_number(v);
    };
    for (int i = 0; i < s.n(); ++i) {
        const auto& r = rep.vertex_rows[i];
        std::cout << "{\"vertex\":" << i << ",\"alpha\":" << format_number(rad2deg(r.alpha))
                  << ",\"gamma\":" << format_number(rad2deg(r.gamma))
                  << ",\"lambda\":" << format_number(r.lambda)
                  << ",\"kconv\":[" << format_number(r.kconv_l) << "," << format_number(r.kconv_r)
                  << "],\"kin\":[" << format_number(r.kin_l) << "," << format_number(r.kin_r)
                  << "],\"kout\":[" << format_number(r.kout_l) << "," << format_number(r.kout_r)
                  << "]}\n";
    }
    for (int i = 0; i < s.n(); ++i) {
        const auto& e = rep.edge_rows[i];
        const char* ord = e.order == PleatOrder::ThisInner
                              ? "this-in"
                              : (e.order == PleatOrder::NextInner ? "next-in" : "tie");
        std::cout << "{\"edge\":" << i << ",\"len\":" << format_number(e.len)
                  << ",\"kconv\":" << format_number(e.kconv)
                  << ",\"knew\":" << format_number(e.knew)
                  << ",\"knew_used\":" << format_number(e.knew_used) << ",\"order\":\"" << ord
                  << "\",\"flipped\":" << (e.flipped ? "true" : "false") << "}\n";
    }
    std::cout << "{\"h_max\":" << num(rep.h_max) << ",\"h_conv\":" << num(rep.h_conv)
              << ",\"h_new\":" << num(rep.h_new) << ",\"height\":" << num(rep.height)
              << ",\"binding_conv\":" << rep.binding_conv
              << ",\"binding_new\":" << rep.binding_new << "}\n";
}

PolyhedronSpec regular_prism(int sides, double side_len, double height) {
    PolyhedronSpec s;
    double rr = side_len / (2.0 * std::sin(pi / sides));
    for (int i = 0; i < sides; ++i) {
        double a = 2.0 * pi * i / sides - pi / 2;
        s.base.push_back({rr * std::cos(a), rr * std::sin(a)});
    }
    s.angles.assign(sides, {});
    s.height = height;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"origami extrusion crease-pattern tool"};
    app.require_subcommand(1);
    Tolerance tol = global_tol();
    double tol_override = 0.0;
    app.add_option("--tolerance", tol_override, "absolute tolerance override");

    std::string out = "-";
    std::string format = "fold";

    // gadget
    auto* g = app.add_subcommand("gadget", "single 3D gadget from ridge angles");
    std::string g_alpha, g_bl, g_br, g_dl = "0", g_dr = "0";
    std::string g_family = "new";
    double g_ridge = 1.0;
    bool g_variant_b = false;
    g->add_option("--alpha", g_alpha, "apex angle")->required();
    g->add_option("--beta-l", g_bl, "left ridge angle")->required();
    g->add_option("--beta-r", g_br, "right ridge angle")->required();
    g->add_option("--delta-l", g_dl, "left pleat angle change");
    g->add_option("--delta-r", g_dr, "right pleat angle change");
    g->add_option("--family", g_family, "conv|new")->check(CLI::IsMember({"conv", "new"}));
    g->add_option("--ridge", g_ridge, "ridge length");
    g->add_flag("--variant-b", g_variant_b, "alternate assignment for delta > 0");
    g->add_option("-o,--output", out, "output path ('-' for stdout)");
    g->add_option("--format", format, "fold|svg|both")
        ->check(CLI::IsMember({"fold", "svg", "both"}));

    // prism
    auto* pr = app.add_subcommand("prism", "prism of a regular polygon");
    int pr_sides = 4;
    double pr_side = 1.0;
    std::string pr_height = "max";
    std::string pr_family = "new";
    pr->add_option("--sides", pr_sides, "number of base sides")->check(CLI::Range(3, 64));
    pr->add_option("--side", pr_side, "base side length");
    pr->add_option("--height", pr_height, "height or 'max'");
    pr->add_option("--family", pr_family, "conv|new|auto")
        ->check(CLI::IsMember({"conv", "new", "auto"}));
    pr->add_option("-o,--output", out, "output path");
    pr->add_option("--format", format, "fold|svg|both")
        ->check(CLI::IsMember({"fold", "svg", "both"}));

    // extrude
    auto* ex = app.add_subcommand("extrude", "full development from a spec document");
    std::string ex_spec;
    std::string ex_family, ex_height;
    ex->add_option("spec", ex_spec, "spec JSON file")->required();
    ex->add_option("--family", ex_family, "override family: conv|new|auto");
    ex->add_option("--height", ex_height, "override height or 'max'");
    ex->add_option("-o,--output", out, "output path");
    ex->add_option("--format", format, "fold|svg|both")
        ->check(CLI::IsMember({"fold", "svg", "both"}));

    // divide
    auto* dv = app.add_subcommand("divide", "proportional division of one gadget");
    std::string dv_alpha, dv_bl, dv_br, dv_ratios = "1";
    std::string dv_family = "new";
    int dv_exchange = 0;
    dv->add_option("--alpha", dv_alpha)->required();
    dv->add_option("--beta-l", dv_bl)->required();
    dv->add_option("--beta-r", dv_br)->required();
    dv->add_option("--ratios", dv_ratios, "p1:p2:...:pd");
    dv->add_option("--family", dv_family, "conv|new")->check(CLI::IsMember({"conv", "new"}));
    dv->add_option("--exchange-level", dv_exchange, "apply the layer exchange at level n");
    dv->add_option("-o,--output", out, "output path");
    dv->add_option("--format", format, "fold|svg|both")
        ->check(CLI::IsMember({"fold", "svg", "both"}));

    // negative
    auto* ng = app.add_subcommand("negative", "negative (intruding) gadget");
    std::string ng_alpha, ng_bl, ng_br;
    int ng_construction = 2;
    std::string ng_theta;
    ng->add_option("--alpha", ng_alpha)->required();
    ng->add_option("--beta-l", ng_bl)->required();
    ng->add_option("--beta-r", ng_br)->required();
    ng->add_option("--construction", ng_construction, "1|2")->check(CLI::Range(1, 2));
    ng->add_option("--theta", ng_theta, "rotation override (beta_l = beta_r = 90 only)");
    ng->add_option("-o,--output", out, "output path");
    ng->add_option("--format", format, "fold|svg|both")
        ->check(CLI::IsMember({"fold", "svg", "both"}));

    // analyze
    auto* an = app.add_subcommand("analyze", "interference report for a spec document");
    std::string an_spec, an_report = "text";
    an->add_option("spec", an_spec, "spec JSON file")->required();
    an->add_option("--report", an_report, "text|json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));

    // verify
    auto* vf = app.add_subcommand("verify", "validate a FOLD crease pattern");
    std::string vf_file;
    vf->add_option("fold", vf_file, "FOLD file")->required();

    CLI11_PARSE(app, argc, argv);
    if (tol_override > 0) {
        tol.eps_len = tol_override;
        tol.eps_ang = tol_override;
    }

    try {
        if (*g) {
            GadgetSpec spec{parse_angle(g_alpha), parse_angle(g_bl), parse_angle(g_br),
                            parse_angle(g_dl), parse_angle(g_dr), g_ridge};
            CreasePattern cp;
            if (g_family == "conv") {
                auto viol = validate_conv(spec, tol);
                if (!viol.empty()) {
                    for (auto& v : viol) std::cerr << "invalid: " << v << "\n";
                    return 1;
                }
                cp = construct_conventional(spec, std::nullopt, {}, tol).cp;
            } else {
                auto viol = validate_new(spec, tol);
                if (!viol.empty()) {
                    for (auto& v : viol) std::cerr << "invalid: " << v << "\n";
                    return 1;
                }
                NewGadgetOptions o;
                o.variant_b = g_variant_b;
                cp = construct_new(spec, std::nullopt, o, tol).cp;
            }
            write_outputs(cp, out, format, tol);
            return 0;
        }
        if (*pr) {
            double h = pr_height == "max" ? 0.0 : std::stod(pr_height);
            PolyhedronSpec s = regular_prism(pr_sides, pr_side, h);
            LayoutOptions lo;
            lo.family = pr_family == "conv"
                            ? Family::Conventional
                            : (pr_family == "new" ? Family::New : Family::Auto);
            Development dev = develop(s, lo, tol);
            std::cerr << "height " << format_number(dev.height) << "\n";
            write_outputs(dev.cp, out, format, tol);
            return 0;
        }
        if (*ex) {
            SpecDocument doc = parse_spec(read_file(ex_spec));
            if (doc.has_tol) tol = doc.tol;
            if (!ex_family.empty())
                doc.layout.family = ex_family == "conv"
                                        ? Family::Conventional
                                        : (ex_family == "new" ? Family::New : Family::Auto);
            if (!ex_height.empty())
                doc.poly.height = ex_height == "max" ? 0.0 : std::stod(ex_height);
            Development dev = doc.insert_widths.empty()
                                  ? develop(doc.poly, doc.layout, tol)
                                  : develop_inserted_prism(doc.poly, doc.insert_widths, tol);
            std::cerr << "height " << format_number(dev.height) << " family "
                      << fam_name(doc.layout.family) << "\n";
            for (const auto& w : dev.warnings) std::cerr << "note: " << w << "\n";
            write_outputs(dev.cp, out, format, tol);
            return 0;
        }
        if (*dv) {
            GadgetSpec spec{parse_angle(dv_alpha), parse_angle(dv_bl), parse_angle(dv_br),
                            0.0, 0.0, 1.0};
            std::vector<double> ratios;
            std::stringstream ss(dv_ratios);
            std::string tok;
            while (std::getline(ss, tok, ':')) ratios.push_back(std::stod(tok));
            DivisionPlan plan = DivisionPlan::of(ratios);
            DividedGadgetCP dg = dv_family == "conv"
                                     ? construct_divided_conventional(spec, plan, std::nullopt,
                                                                      {}, tol)
                                     : construct_divided_new(spec, plan, std::nullopt, {}, tol);
            if (dv_exchange > 0) dg = layer_exchange_option(dg, dv_exchange, tol);
            write_outputs(dg.cp, out, format, tol);
            return 0;
        }
        if (*ng) {
            GadgetSpec spec{parse_angle(ng_alpha), parse_angle(ng_bl), parse_angle(ng_br),
                            0.0, 0.0, 1.0};
            NegativeGadgetCP neg =
                ng_construction == 1
                    ? construct_negative_first(spec, std::nullopt, {}, tol)
                    : construct_negative_second(spec,
                                                ng_theta.empty()
                                                    ? std::nullopt
                                                    : std::optional<double>(parse_angle(ng_theta)),
                                                std::nullopt, {}, tol);
            std::cerr << "theta " << format_number(rad2deg(neg.theta)) << " deg\n";
            write_outputs(neg.cp, out, format, tol);
            return 0;
        }
        if (*an) {
            SpecDocument doc = parse_spec(read_file(an_spec));
            if (doc.has_tol) tol = doc.tol;
            InterferenceReport rep = solve_heights(doc.poly);
            if (an_report == "text")
                print_report_text(doc.poly, rep);
            else
                print_report_json(doc.poly, rep);
            return 0;
        }
        if (*vf) {
            CreasePattern cp = parse_fold(read_file(vf_file));
            auto schema = validate_fold_text(read_file(vf_file));
            for (const auto& s : schema) std::cout << "schema: " << s << "\n";
            int rc = report_diagnostics(cp, tol);
            return schema.empty() ? rc : 1;
        }
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
