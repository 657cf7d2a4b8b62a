#include "planiv/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "planiv/errors.hpp"
#include "planiv/rep_builder.hpp"
#include "planiv/rep_verify.hpp"

namespace planiv {

namespace {

struct Bar {
    long lo, hi;
    int vertex;
    int row = -1;
};

std::vector<Bar> layout(const Representation& norm, long& width) {
    std::vector<Bar> bars;
    for (const auto& [v, ivs] : norm.intervals)
        for (const auto& iv : ivs)
            bars.push_back({static_cast<long>(iv.lo.get_num().get_si()),
                            static_cast<long>(iv.hi.get_num().get_si()), v});
    std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
        return std::tuple(a.lo, a.hi, a.vertex) < std::tuple(b.lo, b.hi, b.vertex);
    });
    std::vector<long> row_end;  // rightmost occupied column per row
    width = 0;
    for (auto& bar : bars) {
        for (std::size_t r = 0; r < row_end.size(); ++r)
            if (row_end[r] < bar.lo) {
                bar.row = static_cast<int>(r);
                break;
            }
        if (bar.row == -1) {
            bar.row = static_cast<int>(row_end.size());
            row_end.push_back(-1);
        }
        row_end[bar.row] = bar.hi;
        width = std::max(width, bar.hi + 1);
    }
    return bars;
}

}  // namespace

std::string render(const Representation& rep, RenderFormat format,
                   bool highlight_displayed) {
    Representation norm = normalize(rep);
    long width = 0;
    auto bars = layout(norm, width);
    int rows = 0;
    for (const auto& b : bars) rows = std::max(rows, b.row + 1);

    std::map<int, Witness> shown_vertices;
    std::map<std::pair<int, int>, Witness> shown_edges;
    if (highlight_displayed) {
        auto [dv, de] = displayed(norm);
        shown_vertices = std::move(dv);
        shown_edges = std::move(de);
    }

    if (format == RenderFormat::Ascii) {
        std::vector<std::string> grid(rows, std::string(static_cast<std::size_t>(width), ' '));
        for (const auto& b : bars) {
            auto& line = grid[b.row];
            for (long c = b.lo; c <= b.hi; ++c) line[c] = '=';
            line[b.lo] = '[';
            line[b.hi] = ']';
            std::string label = std::to_string(b.vertex);
            for (std::size_t i = 0; i < label.size() && b.lo + 1 + static_cast<long>(i) < b.hi;
                 ++i)
                line[b.lo + 1 + i] = label[i];
        }
        std::ostringstream out;
        for (const auto& line : grid) out << line << "\n";
        if (highlight_displayed) {
            std::string marks(static_cast<std::size_t>(width), ' ');
            for (const auto& [v, w] : shown_vertices)
                for (long c = w.lo.get_num().get_si(); c <= w.hi.get_num().get_si(); ++c)
                    if (c > w.lo.get_num().get_si() || c < w.hi.get_num().get_si()) marks[c] = '^';
            out << marks << "  (^ = portion covered by one vertex alone)\n";
        }
        return out.str();
    }

    // SVG: 16px per row, 6px per unit.
    const long ux = 6, uy = 16;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width * ux + 20
        << "\" height=\"" << rows * uy + 24 << "\">\n";
    out << "  <line x1=\"10\" y1=\"" << rows * uy + 12 << "\" x2=\"" << width * ux + 10
        << "\" y2=\"" << rows * uy + 12 << "\" stroke=\"black\"/>\n";
    for (const auto& b : bars) {
        long x = 10 + b.lo * ux, w = (b.hi - b.lo) * ux;
        long y = 4 + b.row * uy;
        out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
            << "\" height=\"10\" fill=\"#9ecbff\" stroke=\"#235a97\"/>\n";
        out << "  <text x=\"" << x + 2 << "\" y=\"" << y + 9
            << "\" font-size=\"9\" font-family=\"monospace\">" << b.vertex << "</text>\n";
    }
    if (highlight_displayed) {
        for (const auto& [v, w] : shown_vertices) {
            long a = w.lo.get_num().get_si(), b2 = w.hi.get_num().get_si();
            out << "  <rect x=\"" << 10 + a * ux << "\" y=\"" << rows * uy + 8 << "\" width=\""
                << (b2 - a) * ux << "\" height=\"4\" fill=\"#39a845\"/>\n";
        }
        for (const auto& [e, w] : shown_edges) {
            long a = w.lo.get_num().get_si(), b2 = w.hi.get_num().get_si();
            out << "  <rect x=\"" << 10 + a * ux << "\" y=\"" << rows * uy + 14 << "\" width=\""
                << (b2 - a) * ux << "\" height=\"4\" fill=\"#e0a43b\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

RenderFormat render_format_from_name(const std::string& name) {
    if (name == "ascii" || name.empty()) return RenderFormat::Ascii;
    if (name == "svg") return RenderFormat::Svg;
    throw ValidationError("unknown render format '" + name + "'");
}

}  // namespace planiv
