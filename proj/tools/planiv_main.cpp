// planiv: interval representations of planar graphs.
//
// Subcommands: represent, verify, decompose, gen, render, selftest.
// Exit codes: 0 ok, 2 parse/validation error, 3 non-planar input,
// 4 verification failure, 5 search exhausted, 1 anything else.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "planiv/corpus.hpp"
#include "planiv/errors.hpp"
#include "planiv/generator.hpp"
#include "planiv/graph_io.hpp"
#include "planiv/inner_decomposition.hpp"
#include "planiv/planarity.hpp"
#include "planiv/rep_builder.hpp"
#include "planiv/rep_verify.hpp"
#include "planiv/render.hpp"
#include "planiv/triangle_split.hpp"
#include "planiv/triangulation.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNonPlanar = 3;
constexpr int kExitVerify = 4;
constexpr int kExitSearch = 5;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw planiv::ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw planiv::ValidationError("cannot write '" + out_path + "'");
    out << content;
}

planiv::Triangulation load_triangulation(const std::string& path, const std::string& format) {
    auto g = planiv::parse_graph(slurp(path), planiv::graph_format_from_name(format));
    return planiv::triangulation_from_graph(g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval representations of planar graphs"};
    app.require_subcommand(1);

    std::string in_path, rep_path, out_path, format = "auto", render_format = "ascii";
    bool depth2 = false, schedule = false, highlight = false;
    std::uint64_t seed = 1;
    int n = 4, flips = 0;

    auto* represent = app.add_subcommand(
        "represent", "build a certified interval representation of a planar graph");
    represent->add_option("graph", in_path, "graph file or - for stdin")->required();
    represent->add_option("--format", format, "edges|g6|json|auto");
    represent->add_option("--out", out_path, "write the representation JSON here");
    represent->add_flag("--depth2", depth2, "depth-2 construction (4-connected input)");

    auto* verify = app.add_subcommand("verify", "check a representation against a graph");
    verify->add_option("graph", in_path, "graph file or - for stdin")->required();
    verify->add_option("representation", rep_path, "representation JSON file")->required();
    verify->add_option("--format", format, "edges|g6|json|auto");
    verify->add_option("--out", out_path, "write the report JSON here");

    auto* decompose = app.add_subcommand(
        "decompose", "path/tree/forest decomposition of a 4-connected triangulation");
    decompose->add_option("graph", in_path, "graph file or - for stdin")->required();
    decompose->add_option("--format", format, "edges|g6|json|auto");
    decompose->add_option("--out", out_path, "write the JSON here");
    decompose->add_flag("--schedule", schedule,
                        "emit the peeling schedule of any triangulation instead");

    auto* gen = app.add_subcommand("gen", "seeded random triangulation");
    gen->add_option("--seed", seed, "64-bit seed");
    gen->add_option("--n", n, "vertex count (>= 4)");
    gen->add_option("--flips", flips, "number of random legal diagonal flips");
    gen->add_option("--format", format, "edges|g6|json output format");
    gen->add_option("--out", out_path, "write the graph here");

    auto* render = app.add_subcommand("render", "draw a representation");
    render->add_option("representation", rep_path, "representation JSON file")->required();
    render->add_option("--render", render_format, "svg|ascii");
    render->add_option("--out", out_path, "write the drawing here");
    render->add_flag("--displayed", highlight, "highlight displayed portions");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance corpus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (represent->parsed()) {
            auto g = planiv::parse_graph(slurp(in_path), planiv::graph_format_from_name(format));
            planiv::Representation rep;
            planiv::VerificationReport report;
            if (depth2) {
                rep = planiv::build_depth2(g);
                report = planiv::verify_against_graph(rep, g);
            } else {
                planiv::BuildTrace trace;
                rep = planiv::build(g, &trace);
                report = std::move(trace.final_report);
            }
            emit(out_path, planiv::representation_to_json(rep));
            std::cout << "OK depth=" << report.depth
                      << " max_intervals=" << report.max_intervals_per_vertex << "\n";
            return 0;
        }
        if (verify->parsed()) {
            auto g = planiv::parse_graph(slurp(in_path), planiv::graph_format_from_name(format));
            auto rep = planiv::representation_from_json(slurp(rep_path));
            planiv::VerificationReport report;
            bool as_triangulation = false;
            if (g.vertex_count() >= 3) {
                try {
                    auto t = planiv::triangulation_from_graph(g);
                    report = planiv::check_invariants(rep, t);
                    as_triangulation = true;
                } catch (const planiv::ValidationError&) {
                } catch (const planiv::NonPlanarError&) {
                }
            }
            if (!as_triangulation) report = planiv::verify_against_graph(rep, g);
            emit(out_path, planiv::report_to_json(report));
            if (!report.matches_target) {
                std::cerr << "verification failed: representation does not realize the graph\n";
                return kExitVerify;
            }
            std::cout << "OK depth=" << report.depth
                      << " max_intervals=" << report.max_intervals_per_vertex << "\n";
            return 0;
        }
        if (decompose->parsed()) {
            if (schedule) {
                auto t = load_triangulation(in_path, format);
                emit(out_path, planiv::schedule_to_json(planiv::peel(t)));
                return 0;
            }
            auto t = load_triangulation(in_path, format);
            if (!planiv::is_four_connected(t.graph()))
                throw planiv::ValidationError("decompose requires a 4-connected triangulation");
            auto walk = planiv::faces(t.embedding)[t.embedding.outer_face];
            std::array<int, 3> outer{walk[0], walk[1], walk[2]};
            std::sort(outer.begin(), outer.end());
            auto d = planiv::decompose_inner(t, outer);
            emit(out_path, planiv::decomposition_to_json(t, d));
            return 0;
        }
        if (gen->parsed()) {
            auto t = planiv::gen_triangulation({seed, n, flips});
            auto fmt = planiv::graph_format_from_name(format == "auto" ? "edges" : format);
            emit(out_path, planiv::write_graph(t.graph(), fmt));
            return 0;
        }
        if (render->parsed()) {
            auto rep = planiv::representation_from_json(slurp(rep_path));
            emit(out_path, planiv::render(rep, planiv::render_format_from_name(render_format),
                                          highlight));
            return 0;
        }
        if (selftest->parsed()) {
            auto results = planiv::corpus::run_acceptance();
            bool all = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " — " << r.detail
                          << "\n";
                all = all && r.pass;
            }
            return all ? 0 : kExitVerify;
        }
    } catch (const planiv::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const planiv::NonPlanarError& e) {
        std::cerr << "non-planar: " << e.what() << "\n";
        return kExitNonPlanar;
    } catch (const planiv::SearchExhaustedError& e) {
        std::cerr << "search exhausted: " << e.what() << "\n";
        return kExitSearch;
    } catch (const planiv::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerify;
    } catch (const planiv::ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const planiv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
