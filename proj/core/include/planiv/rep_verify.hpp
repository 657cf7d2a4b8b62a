#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "planiv/graph.hpp"
#include "planiv/representation.hpp"
#include "planiv/triangulation.hpp"

namespace planiv {

/// One open sweep cell (lo, hi) backing a displayed-ness claim.
struct Witness {
    Rational lo, hi;
};

/// Everything the verifier can say about a representation, derived from raw
/// intervals only. Every witness is re-checked pointwise at its midpoint
/// against a second, independent cover count before the report is returned.
struct VerificationReport {
    std::vector<int> rep_vertices;
    std::vector<std::pair<int, int>> intersection_edges;
    int depth = 0;
    int max_intervals_per_vertex = 0;
    std::map<int, Witness> displayed_vertices;
    std::map<std::pair<int, int>, Witness> displayed_edges;
    std::vector<std::pair<int, Rational>> broken_ends;
    bool i1_ok = false;
    bool i2_ok = false;
    bool matches_target = false;
    std::vector<std::string> diagnostics;

    bool all_ok() const { return i1_ok && i2_ok && matches_target; }
};

/// Intersection graph under the closed-interval convention: uv is an edge
/// iff some interval of u meets some interval of v, single-point touches
/// included. The graph is over ids 0..max(vertex id).
Graph intersection_graph(const Representation& rep);

/// Largest number of distinct vertices covering one point of the line.
int depth(const Representation& rep);

/// Displayed vertices and edges with one open witness cell each.
std::pair<std::map<int, Witness>, std::map<std::pair<int, int>, Witness>> displayed(
    const Representation& rep);

/// Endpoints (of the reduced interval lists) covered by no other vertex.
std::vector<std::pair<int, Rational>> broken_ends(const Representation& rep);

/// True iff every vertex needs at most k intervals once overlapping
/// same-vertex intervals are merged.
bool count_check(const Representation& rep, int k);

/// Full report relative to a triangulation: intersection graph equality
/// (in t's label space), I1 "every vertex displayed", and I2 "every inner
/// face contains a displayed edge". Requires rep to cover exactly V(t).
VerificationReport check_invariants(const Representation& rep, const Triangulation& t);

/// Report fields without the embedding-relative parts (i1/i2 stay false,
/// matches_target compares against nothing). Handy for raw interval files.
VerificationReport analyze(const Representation& rep);

std::string report_to_json(const VerificationReport& report);

}  // namespace planiv
