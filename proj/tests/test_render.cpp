#include <doctest.h>

#include <algorithm>

#include "planiv/corpus.hpp"
#include "planiv/rep_builder.hpp"
#include "planiv/render.hpp"

using namespace planiv;

TEST_CASE("ascii render of the base triangle is stable") {
    auto [rep, state] = base_triangle({0, 1, 2});
    std::string a = render(rep, RenderFormat::Ascii);
    std::string b = render(rep, RenderFormat::Ascii);
    CHECK(a == b);
    // depth 3 means the greedy row assignment needs exactly 3 rows
    CHECK(std::count(a.begin(), a.end(), '\n') == 3);
    CHECK(a.find('[') != std::string::npos);
    CHECK(a.find("0") != std::string::npos);
}

TEST_CASE("single vertex needs one row") {
    Representation rep;
    rep.add(5, {Rational(0), Rational(2)});
    std::string out = render(rep, RenderFormat::Ascii);
    CHECK(std::count(out.begin(), out.end(), '\n') == 1);
    CHECK(out.find("[5]") != std::string::npos);
}

TEST_CASE("svg smoke") {
    Representation rep = build(corpus::complete(4));
    std::string svg = render(rep, RenderFormat::Svg, true);
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t rects = 0, pos = 0;
    while ((pos = svg.find("<rect", pos)) != std::string::npos) {
        ++rects;
        pos += 5;
    }
    std::size_t total_intervals = 0;
    for (const auto& [v, ivs] : rep.intervals) total_intervals += ivs.size();
    CHECK(rects >= total_intervals);
}

TEST_CASE("render format names") {
    CHECK(render_format_from_name("svg") == RenderFormat::Svg);
    CHECK(render_format_from_name("ascii") == RenderFormat::Ascii);
    CHECK_THROWS(render_format_from_name("pdf"));
}
