#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "planiv/display_state.hpp"
#include "planiv/inner_decomposition.hpp"
#include "planiv/rep_verify.hpp"
#include "planiv/representation.hpp"
#include "planiv/triangulation.hpp"

namespace planiv {

/// Where a child interval is placed: inside a vertex's displayed portion or
/// inside a displayed edge's portion.
struct HostRef {
    bool is_edge = false;
    int vertex = -1;
    std::pair<int, int> edge{-1, -1};

    static HostRef of_vertex(int v) { return {false, v, {-1, -1}}; }
    static HostRef of_edge(std::pair<int, int> e) { return {true, -1, e}; }
};

/// The 3-vertex base: f(x)=[0,3], f(y)=[1,4] u [6,7], f(z)=[2,5], with x
/// displayed on (0,1), z on (4,5), y on (6,7), edges xy on (1,2) and yz on
/// (3,4), and the cursor at 8.
std::pair<Representation, DisplayState> base_triangle(std::array<int, 3> xyz);

/// Lays out the path vertices p (one interval each, consecutive overlapping,
/// everything displayed) on fresh line territory at the cursor. Returns the
/// interval per vertex and records all new portions.
std::map<int, Interval> represent_path(const std::vector<int>& p, DisplayState& state);

/// Carves the middle third out of the host's current portion for a new
/// interval of v; the host keeps the right third as its displayed residue.
/// For vertex hosts the new edge (v, host) gets a displayed portion inside
/// the child interval.
Interval attach_child(int v, const HostRef& host, DisplayState& state);

/// One induction step: given a certified representation of G_out whose
/// display state shows the edge xz of delta, adds the interior X of the
/// piece g_in using the decomposition d (in g_in's local ids, computed for
/// the relabeled outer triple). outer holds the global names (x, y, z).
Representation extend_representation(const Representation& rep_out, DisplayState& state,
                                     const Triangulation& g_in,
                                     std::array<int, 3> outer,
                                     const InnerDecomposition& d,
                                     std::pair<int, int> displayed_edge);

/// Per-step evidence collected while building.
struct BuildStep {
    std::array<int, 3> outer{};     // delta relabeled as (x, y, z)
    std::vector<int> interior;      // the X set, global ids
    int piece_size = 0;
    double decompose_seconds = 0.0;
    InnerLemmaReport lemma;
    VerificationReport after;       // invariants on the graph grown so far
};

struct BuildTrace {
    std::vector<BuildStep> steps;
    VerificationReport final_report;
};

/// The depth-3 pipeline: embed, triangulate keeping g induced, peel along
/// minimal non-empty triangles, build bottom-up, restrict to g's vertices.
/// Every step and the result are certified; failures throw.
Representation build(const Graph& g, BuildTrace* trace = nullptr);

/// Depth-2 construction for a 4-connected planar triangulation: the full
/// path/two-forest decomposition laid out as an overlapping chain plus
/// nested pokes, certified to depth <= 2.
Representation build_depth2(const Graph& g);

/// Order-isomorphic remap of all endpoints onto consecutive even integers.
Representation normalize(const Representation& rep);

/// Analysis of rep plus intersection-graph comparison against g. i1_ok is
/// computed over rep's own vertices; i2_ok is vacuously true (no embedding).
VerificationReport verify_against_graph(const Representation& rep, const Graph& g);

}  // namespace planiv
