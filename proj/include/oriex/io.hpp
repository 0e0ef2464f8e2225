#ifndef ORIEX_IO_HPP
#define ORIEX_IO_HPP

#include <string>
#include <vector>

#include "oriex/layout.hpp"

namespace oriex {

// Parsed spec document: the polyhedron data plus layout directives.
struct SpecDocument {
    PolyhedronSpec poly;
    LayoutOptions layout;
    std::vector<double> insert_widths;  // non-empty selects the inserted-prism layout
    bool height_max = false;
    Tolerance tol;
    bool has_tol = false;
};

SpecDocument parse_spec(const std::string& text);
std::string emit_spec(const SpecDocument& doc);

std::string emit_fold(const CreasePattern& cp, const Tolerance& tol = {});
CreasePattern parse_fold(const std::string& text);

// Checks types and index consistency of the FOLD keys this tool reads/writes.
std::vector<std::string> validate_fold_text(const std::string& text);

struct SvgStyle {
    double stroke_width = 0.0;  // 0: scaled from the sheet size
    std::string mountain = "#d40000";
    std::string valley = "#0044cc";
    std::string boundary = "#000000";
    bool dash_valley = true;
};

std::string emit_svg(const CreasePattern& cp, const SvgStyle& style = {},
                     const Tolerance& tol = {});

std::string format_number(double v);  // 12 significant digits

}  // namespace oriex

#endif
