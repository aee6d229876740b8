#include "pqm/render.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace pqm {

namespace {

constexpr Nat kCanvas = 480;
constexpr Nat kMargin = 48;
constexpr Nat kPlot = kCanvas - 2 * kMargin;  // 384

}  // namespace

std::string render_diagram_svg(const Barcode& barcode) {
    const Nat big_t = barcode.stabilization;
    const Nat range = big_t + 1;  // finite values live in 0..T; T+1 is the inf row
    auto x_of = [&](Nat v) { return kMargin + v * kPlot / range; };
    auto y_of = [&](Nat v) { return kCanvas - kMargin - v * kPlot / range; };
    const Nat inf_y = y_of(range);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
        << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas
        << "\" fill=\"white\"/>\n";
    // Axes.
    svg << "  <line x1=\"" << kMargin << "\" y1=\"" << y_of(0) << "\" x2=\"" << x_of(range)
        << "\" y2=\"" << y_of(0) << "\" stroke=\"black\"/>\n";
    svg << "  <line x1=\"" << kMargin << "\" y1=\"" << y_of(0) << "\" x2=\"" << kMargin
        << "\" y2=\"" << inf_y << "\" stroke=\"black\"/>\n";
    // Integer ticks and labels.
    for (Nat v = 0; v <= big_t; ++v) {
        svg << "  <line x1=\"" << x_of(v) << "\" y1=\"" << y_of(0) << "\" x2=\"" << x_of(v)
            << "\" y2=\"" << y_of(0) + 4 << "\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << x_of(v) << "\" y=\"" << y_of(0) + 16
            << "\" font-size=\"10\" text-anchor=\"middle\">" << v << "</text>\n";
        svg << "  <line x1=\"" << kMargin - 4 << "\" y1=\"" << y_of(v) << "\" x2=\"" << kMargin
            << "\" y2=\"" << y_of(v) << "\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << kMargin - 8 << "\" y=\"" << y_of(v) + 3
            << "\" font-size=\"10\" text-anchor=\"end\">" << v << "</text>\n";
    }
    // Diagonal and the inf row.
    svg << "  <line x1=\"" << x_of(0) << "\" y1=\"" << y_of(0) << "\" x2=\"" << x_of(range)
        << "\" y2=\"" << y_of(range) << "\" stroke=\"gray\"/>\n";
    svg << "  <line x1=\"" << kMargin << "\" y1=\"" << inf_y << "\" x2=\"" << x_of(range)
        << "\" y2=\"" << inf_y << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    svg << "  <text x=\"" << kMargin - 8 << "\" y=\"" << inf_y + 3
        << "\" font-size=\"10\" text-anchor=\"end\">inf</text>\n";

    // Multiplicity-collapsed marks.
    std::map<std::pair<Nat, Nat>, Nat> marks;
    for (const auto& bar : barcode.intervals) {
        const Nat y = is_inf(bar.death) ? inf_y : y_of(bar.death);
        ++marks[{x_of(bar.birth), y}];
    }
    for (const auto& [pos, mult] : marks) {
        svg << "  <circle cx=\"" << pos.first << "\" cy=\"" << pos.second
            << "\" r=\"4\" fill=\"black\"/>\n";
        if (mult > 1)
            svg << "  <text x=\"" << pos.first + 6 << "\" y=\"" << pos.second - 6
                << "\" font-size=\"10\">x" << mult << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void render_diagram_to_file(const Barcode& barcode, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    out << render_diagram_svg(barcode);
}

}  // namespace pqm
