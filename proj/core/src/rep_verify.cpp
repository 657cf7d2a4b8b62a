#include "planiv/rep_verify.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "planiv/errors.hpp"

namespace planiv {

namespace {

// Elementary cells of the endpoint sweep: the sorted distinct endpoints and
// the open gaps between consecutive ones, each with its exact cover set.
struct SweepCells {
    std::map<int, std::vector<Interval>> merged;
    std::vector<Rational> points;
    std::vector<std::vector<int>> point_cover;  // cover at points[i]
    std::vector<std::vector<int>> gap_cover;    // cover on (points[i], points[i+1])
    int max_merged = 0;
};

SweepCells sweep(const Representation& rep) {
    SweepCells s;
    struct Event {
        Rational coord;
        int kind;  // 0 = start, 1 = end
        int vertex;
    };
    std::vector<Event> events;
    for (const auto& [v, ivs] : rep.intervals) {
        auto m = merged_intervals(ivs);
        s.max_merged = std::max(s.max_merged, static_cast<int>(m.size()));
        for (const auto& iv : m) {
            events.push_back({iv.lo, 0, v});
            events.push_back({iv.hi, 1, v});
        }
        s.merged[v] = std::move(m);
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.coord != b.coord) return a.coord < b.coord;
        if (a.kind != b.kind) return a.kind < b.kind;  // starts first
        return a.vertex < b.vertex;
    });

    std::vector<int> active;  // sorted vertex ids
    std::size_t i = 0;
    while (i < events.size()) {
        Rational coord = events[i].coord;
        s.points.push_back(coord);
        while (i < events.size() && events[i].coord == coord && events[i].kind == 0) {
            active.insert(std::lower_bound(active.begin(), active.end(), events[i].vertex),
                          events[i].vertex);
            ++i;
        }
        s.point_cover.push_back(active);
        while (i < events.size() && events[i].coord == coord) {
            active.erase(std::lower_bound(active.begin(), active.end(), events[i].vertex));
            ++i;
        }
        s.gap_cover.push_back(active);  // gap to the next point; last one is empty
    }
    return s;
}

// Second, sweep-independent cover check: every probe's full cover must equal
// its claimed vertex set. Probes are verified with per-vertex binary search
// plus a difference-array count over all intervals.
void recheck_pointwise(const SweepCells& s,
                       const std::vector<std::pair<Rational, std::vector<int>>>& claims) {
    std::vector<Rational> probes;
    probes.reserve(claims.size());
    for (const auto& c : claims) probes.push_back(c.first);
    std::vector<std::size_t> order(probes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return probes[a] < probes[b]; });
    std::vector<Rational> sorted;
    sorted.reserve(order.size());
    for (std::size_t i : order) sorted.push_back(probes[i]);

    std::vector<long long> diff(sorted.size() + 1, 0);
    for (const auto& [v, ivs] : s.merged) {
        for (const auto& iv : ivs) {
            auto lo = std::lower_bound(sorted.begin(), sorted.end(), iv.lo);
            auto hi = std::upper_bound(sorted.begin(), sorted.end(), iv.hi);
            diff[lo - sorted.begin()] += 1;
            diff[hi - sorted.begin()] -= 1;
        }
    }
    std::vector<long long> count(sorted.size(), 0);
    long long run = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        run += diff[i];
        count[i] = run;
    }

    std::vector<long long> count_by_claim(claims.size(), 0);
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        count_by_claim[order[rank]] = count[rank];

    for (std::size_t i = 0; i < claims.size(); ++i) {
        const auto& [probe, claimed] = claims[i];
        if (count_by_claim[i] != static_cast<long long>(claimed.size()))
            throw InternalError("verifier witness failed pointwise cover recheck");
        for (int v : claimed) {
            const auto& ivs = s.merged.at(v);
            auto it = std::upper_bound(ivs.begin(), ivs.end(), probe,
                                       [](const Rational& p, const Interval& iv) {
                                           return p < iv.lo;
                                       });
            bool covered = it != ivs.begin() && std::prev(it)->contains(probe);
            if (!covered)
                throw InternalError("verifier witness lost its claimed vertex");
        }
    }
}

struct Analysis {
    SweepCells cells;
    VerificationReport report;
};

Analysis analyze_impl(const Representation& rep) {
    Analysis a;
    for (const auto& [v, ivs] : rep.intervals) {
        if (ivs.empty()) throw ValidationError("vertex with empty interval list");
        a.report.rep_vertices.push_back(v);
    }
    a.cells = sweep(rep);
    const SweepCells& s = a.cells;
    VerificationReport& r = a.report;
    r.max_intervals_per_vertex = s.max_merged;

    std::set<std::pair<int, int>> edges;
    std::vector<std::pair<Rational, std::vector<int>>> claims;

    for (std::size_t i = 0; i < s.points.size(); ++i) {
        const auto& pc = s.point_cover[i];
        r.depth = std::max(r.depth, static_cast<int>(pc.size()));
        for (std::size_t p = 0; p < pc.size(); ++p)
            for (std::size_t q = p + 1; q < pc.size(); ++q)
                edges.insert({pc[p], pc[q]});
        const auto& gc = s.gap_cover[i];
        r.depth = std::max(r.depth, static_cast<int>(gc.size()));
        if (i + 1 < s.points.size()) {
            if (gc.size() == 1 && !r.displayed_vertices.count(gc[0]))
                r.displayed_vertices[gc[0]] = {s.points[i], s.points[i + 1]};
            if (gc.size() == 2 && !r.displayed_edges.count({gc[0], gc[1]}))
                r.displayed_edges[{gc[0], gc[1]}] = {s.points[i], s.points[i + 1]};
        }
    }
    r.intersection_edges.assign(edges.begin(), edges.end());

    for (const auto& [v, ivs] : s.merged) {
        for (const auto& iv : ivs) {
            for (const Rational* b : {&iv.lo, &iv.hi}) {
                auto it = std::lower_bound(s.points.begin(), s.points.end(), *b);
                std::size_t idx = static_cast<std::size_t>(it - s.points.begin());
                if (s.point_cover[idx].size() == 1 && s.point_cover[idx][0] == v)
                    r.broken_ends.emplace_back(v, *b);
            }
        }
    }

    for (const auto& [v, w] : r.displayed_vertices)
        claims.push_back({rational_midpoint(w.lo, w.hi), {v}});
    for (const auto& [e, w] : r.displayed_edges)
        claims.push_back({rational_midpoint(w.lo, w.hi), {e.first, e.second}});
    for (const auto& [v, b] : r.broken_ends) claims.push_back({b, {v}});
    recheck_pointwise(s, claims);
    return a;
}

}  // namespace

Graph intersection_graph(const Representation& rep) {
    auto a = analyze_impl(rep);
    int n = 0;
    for (int v : a.report.rep_vertices) n = std::max(n, v + 1);
    Graph g(n);
    for (auto [u, v] : a.report.intersection_edges) g.add_edge(u, v);
    return g;
}

int depth(const Representation& rep) { return analyze_impl(rep).report.depth; }

std::pair<std::map<int, Witness>, std::map<std::pair<int, int>, Witness>> displayed(
    const Representation& rep) {
    auto a = analyze_impl(rep);
    return {a.report.displayed_vertices, a.report.displayed_edges};
}

std::vector<std::pair<int, Rational>> broken_ends(const Representation& rep) {
    return analyze_impl(rep).report.broken_ends;
}

bool count_check(const Representation& rep, int k) {
    int worst = 0;
    for (const auto& [v, ivs] : rep.intervals)
        worst = std::max(worst, static_cast<int>(merged_intervals(ivs).size()));
    return worst <= k;
}

VerificationReport analyze(const Representation& rep) { return analyze_impl(rep).report; }

VerificationReport check_invariants(const Representation& rep, const Triangulation& t) {
    std::vector<int> expected;
    for (int v = 0; v < t.vertex_count(); ++v) expected.push_back(t.label_of(v));
    std::sort(expected.begin(), expected.end());
    std::vector<int> got;
    for (const auto& [v, ivs] : rep.intervals) got.push_back(v);
    if (got != expected)
        throw ValidationError("representation does not cover exactly V(t)");

    auto a = analyze_impl(rep);
    VerificationReport& r = a.report;

    // Intersection graph equality, in label space.
    std::set<std::pair<int, int>> want;
    for (auto [u, v] : t.graph().edges()) want.insert(edge_key(t.label_of(u), t.label_of(v)));
    std::set<std::pair<int, int>> have(r.intersection_edges.begin(),
                                       r.intersection_edges.end());
    r.matches_target = want == have;
    if (!r.matches_target) {
        for (const auto& e : want)
            if (!have.count(e))
                r.diagnostics.push_back("missing edge " + std::to_string(e.first) + "-" +
                                        std::to_string(e.second));
        for (const auto& e : have)
            if (!want.count(e))
                r.diagnostics.push_back("extra edge " + std::to_string(e.first) + "-" +
                                        std::to_string(e.second));
    }

    r.i1_ok = true;
    for (int v : expected)
        if (!r.displayed_vertices.count(v)) {
            r.i1_ok = false;
            r.diagnostics.push_back("vertex " + std::to_string(v) + " is not displayed");
        }

    r.i2_ok = true;
    auto fs = faces(t.embedding);
    for (std::size_t f = 0; f < fs.size(); ++f) {
        if (f == t.embedding.outer_face) continue;
        bool ok = false;
        for (int i = 0; i < 3 && !ok; ++i) {
            auto e = edge_key(t.label_of(fs[f][i]), t.label_of(fs[f][(i + 1) % 3]));
            ok = r.displayed_edges.count(e) != 0;
        }
        if (!ok) {
            r.i2_ok = false;
            r.diagnostics.push_back(
                "inner face " + std::to_string(t.label_of(fs[f][0])) + "," +
                std::to_string(t.label_of(fs[f][1])) + "," +
                std::to_string(t.label_of(fs[f][2])) + " has no displayed edge");
        }
    }
    return r;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["vertices"] = report.rep_vertices;
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : report.intersection_edges) edges.push_back({u, v});
    j["intersection_edges"] = std::move(edges);
    j["depth"] = report.depth;
    j["max_intervals_per_vertex"] = report.max_intervals_per_vertex;
    nlohmann::ordered_json dv;
    for (const auto& [v, w] : report.displayed_vertices)
        dv[std::to_string(v)] = {rational_to_string(w.lo), rational_to_string(w.hi)};
    j["displayed_vertices"] = std::move(dv);
    nlohmann::ordered_json de;
    for (const auto& [e, w] : report.displayed_edges)
        de[std::to_string(e.first) + "-" + std::to_string(e.second)] = {
            rational_to_string(w.lo), rational_to_string(w.hi)};
    j["displayed_edges"] = std::move(de);
    auto be = nlohmann::ordered_json::array();
    for (const auto& [v, b] : report.broken_ends)
        be.push_back({v, rational_to_string(b)});
    j["broken_ends"] = std::move(be);
    j["i1_ok"] = report.i1_ok;
    j["i2_ok"] = report.i2_ok;
    j["matches_target"] = report.matches_target;
    j["diagnostics"] = report.diagnostics;
    return j.dump(2) + "\n";
}

}  // namespace planiv
