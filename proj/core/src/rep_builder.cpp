#include "planiv/rep_builder.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

#include "planiv/errors.hpp"
#include "planiv/planarity.hpp"
#include "planiv/triangle_split.hpp"

namespace planiv {

namespace {

OpenPortion& host_portion(const HostRef& host, DisplayState& state) {
    if (host.is_edge) {
        auto it = state.edge_portion.find(edge_key(host.edge.first, host.edge.second));
        if (it == state.edge_portion.end())
            throw InvariantViolationError("no displayed portion recorded for edge " +
                                          std::to_string(host.edge.first) + "-" +
                                          std::to_string(host.edge.second));
        return it->second;
    }
    auto it = state.vertex_portion.find(host.vertex);
    if (it == state.vertex_portion.end())
        throw InvariantViolationError("no displayed portion recorded for vertex " +
                                      std::to_string(host.vertex));
    return it->second;
}

}  // namespace

std::pair<Representation, DisplayState> base_triangle(std::array<int, 3> xyz) {
    auto [x, y, z] = xyz;
    if (x == y || y == z || x == z)
        throw ValidationError("base triangle needs three distinct vertices");
    Representation rep;
    rep.add(x, {0, 3});
    rep.add(y, {1, 4});
    rep.add(y, {6, 7});
    rep.add(z, {2, 5});
    DisplayState state;
    state.vertex_portion[x] = {0, 1};
    state.vertex_portion[z] = {4, 5};
    state.vertex_portion[y] = {6, 7};
    state.edge_portion[edge_key(x, y)] = {1, 2};
    state.edge_portion[edge_key(y, z)] = {3, 4};
    state.cursor = 8;
    return {std::move(rep), std::move(state)};
}

std::map<int, Interval> represent_path(const std::vector<int>& p, DisplayState& state) {
    if (p.empty()) throw ValidationError("represent_path needs a non-empty path");
    Rational c = state.cursor;
    std::map<int, Interval> out;
    std::size_t k = p.size();
    for (std::size_t j = 0; j < k; ++j) {
        Rational lo = c + Rational(2 * static_cast<long>(j));
        Interval iv{lo, lo + 3};
        out[p[j]] = iv;

        OpenPortion own;
        if (k == 1) {
            own = {lo, lo + 3};
        } else if (j == 0) {
            own = {lo, lo + 2};
        } else if (j + 1 == k) {
            own = {lo + 1, lo + 3};
        } else {
            own = {lo + 1, lo + 2};
        }
        state.vertex_portion[p[j]] = own;
        if (j + 1 < k)
            state.edge_portion[edge_key(p[j], p[j + 1])] = {lo + 2, lo + 3};
    }
    state.cursor = c + Rational(2 * static_cast<long>(k - 1)) + 4;
    return out;
}

Interval attach_child(int v, const HostRef& host, DisplayState& state) {
    OpenPortion& portion = host_portion(host, state);
    Rational width = portion.hi - portion.lo;
    if (!(width > 0)) throw InternalError("host portion is empty");
    Interval child{portion.lo + width / 3, portion.lo + 2 * width / 3};
    portion.lo = child.hi;  // right third stays displayed for the host
    if (!host.is_edge)
        state.edge_portion[edge_key(v, host.vertex)] = {child.lo, child.hi};
    return child;
}

Representation extend_representation(const Representation& rep_out, DisplayState& state,
                                     const Triangulation& g_in,
                                     std::array<int, 3> outer,
                                     const InnerDecomposition& d,
                                     std::pair<int, int> displayed_edge) {
    auto [x, y, z] = outer;
    if (!state.edge_portion.count(edge_key(displayed_edge.first, displayed_edge.second)))
        throw InvariantViolationError("delta has no displayed edge recorded (I2 upstream)");
    if (edge_key(displayed_edge.first, displayed_edge.second) != edge_key(x, z))
        throw ValidationError("the displayed edge of delta must be relabeled to xz");

    Representation rep = rep_out;

    // f_1: the path without x, on fresh territory.
    std::vector<int> tail;
    for (std::size_t i = 1; i < d.fx_path.size(); ++i)
        tail.push_back(g_in.label_of(d.fx_path[i]));
    auto f1 = represent_path(tail, state);
    for (const auto& [v, iv] : f1) rep.add(v, iv);

    std::vector<int> interior_locals;
    for (int v = 0; v < g_in.vertex_count(); ++v)
        if (v != d.outer[0] && v != d.outer[1] && v != d.outer[2])
            interior_locals.push_back(v);
    std::sort(interior_locals.begin(), interior_locals.end(),
              [&](int a, int b) { return g_in.label_of(a) < g_in.label_of(b); });

    // f_2: one interval per interior vertex inside its F_y parent's portion.
    for (int lv : interior_locals) {
        int lw = d.fy_parent[lv];
        if (lw == -1) throw InternalError("interior vertex without an F_y parent");
        int v = g_in.label_of(lv), w = g_in.label_of(lw);
        rep.add(v, attach_child(v, HostRef::of_vertex(w), state));
    }

    // f_3: inside the F_z parent's portion; u_y instead goes into the
    // displayed portion of edge xz, which realizes x-u_y and z-u_y.
    for (int lv : interior_locals) {
        if (lv == d.opp.u_y) continue;
        int lw = d.fz_parent[lv];
        if (lw == -1) throw InternalError("interior vertex without an F_z parent");
        int v = g_in.label_of(lv), w = g_in.label_of(lw);
        rep.add(v, attach_child(v, HostRef::of_vertex(w), state));
    }
    int uy = g_in.label_of(d.opp.u_y);
    rep.add(uy, attach_child(uy, HostRef::of_edge(edge_key(x, z)), state));
    (void)y;
    return rep;
}

VerificationReport verify_against_graph(const Representation& rep, const Graph& g) {
    VerificationReport r = analyze(rep);
    std::set<std::pair<int, int>> want;
    for (auto [u, v] : g.edges()) want.insert({u, v});
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
    for (int v : r.rep_vertices)
        if (!r.displayed_vertices.count(v)) r.i1_ok = false;
    r.i2_ok = true;  // vacuous: no embedding in play
    return r;
}

Representation build(const Graph& g, BuildTrace* trace) {
    if (g.vertex_count() == 0) throw ValidationError("cannot represent the empty graph");

    PlanarEmbedding emb = planar_embed(g);
    Triangulation t = triangulate_induced(emb);
    PeelingSchedule schedule = peel(t);

    std::array<int, 3> base{};
    for (int v = 0; v < 3; ++v) base[v] = schedule.base.label_of(v);
    std::sort(base.begin(), base.end());
    auto [rep, state] = base_triangle(base);

    for (std::size_t idx = schedule.steps.size(); idx-- > 0;) {
        const SplitResult& s = schedule.steps[idx];

        // Pick the displayed edge of delta and relabel so it is xz.
        std::pair<int, int> chosen{-1, -1};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto e = edge_key(s.delta.vertices[i], s.delta.vertices[j]);
                if (state.edge_portion.count(e) && (chosen.first == -1 || e < chosen)) chosen = e;
            }
        if (chosen.first == -1)
            throw InvariantViolationError("no edge of delta is displayed (I2 upstream)");
        int x = chosen.first, z = chosen.second, y = -1;
        for (int v : s.delta.vertices)
            if (v != x && v != z) y = v;

        auto local_of = [&](int label) {
            for (int v = 0; v < s.g_in.vertex_count(); ++v)
                if (s.g_in.label_of(v) == label) return v;
            throw InternalError("delta label missing from inner piece");
        };
        std::array<int, 3> outer_local{local_of(x), local_of(y), local_of(z)};

        auto t0 = std::chrono::steady_clock::now();
        InnerDecomposition d = decompose_inner(s.g_in, outer_local);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        rep = extend_representation(rep, state, s.g_in, {x, y, z}, d, chosen);

        const Triangulation& grown = idx == 0 ? t : schedule.steps[idx - 1].g_out;
        VerificationReport report = check_invariants(rep, grown);
        if (!report.i1_ok || !report.i2_ok || !report.matches_target)
            throw VerificationError("invariant check failed after a peeling step: " +
                                    (report.diagnostics.empty() ? std::string("(no detail)")
                                                                : report.diagnostics.front()));
        if (report.depth > 3 || report.max_intervals_per_vertex > 3)
            throw VerificationError("depth or interval budget exceeded mid-build");

        if (trace) {
            BuildStep step;
            step.outer = {x, y, z};
            step.interior = s.delta.interior;
            step.piece_size = s.g_in.vertex_count();
            step.decompose_seconds = secs;
            step.lemma = verify_inner(s.g_in, outer_local, d);
            step.after = std::move(report);
            trace->steps.push_back(std::move(step));
        }
    }

    std::vector<int> original;
    for (int v = 0; v < g.vertex_count(); ++v) original.push_back(v);
    Representation final_rep = restrict_representation(rep, original);

    VerificationReport final_report = verify_against_graph(final_rep, g);
    if (!final_report.matches_target)
        throw VerificationError("final representation does not realize the input graph");
    if (final_report.depth > 3)
        throw VerificationError("final representation exceeds depth 3");
    if (final_report.max_intervals_per_vertex > 3)
        throw VerificationError("a vertex needs more than 3 intervals");
    if (trace) trace->final_report = std::move(final_report);
    return final_rep;
}

Representation build_depth2(const Graph& g) {
    Triangulation t = triangulation_from_graph(g);
    if (!is_four_connected(g))
        throw ValidationError("depth-2 construction requires a 4-connected triangulation");

    auto outer_walk = faces(t.embedding)[t.embedding.outer_face];
    std::array<int, 3> outer{outer_walk[0], outer_walk[1], outer_walk[2]};
    std::sort(outer.begin(), outer.end());
    auto [x, y, z] = outer;

    InnerDecomposition d = decompose_inner(t, outer);
    FullDecomposition full = extend_full(t, outer, d);

    Representation rep;
    int n = g.vertex_count();
    std::vector<OpenPortion> window(n);  // private window per host vertex

    // The path as an overlapping chain; each vertex's private middle part
    // doubles as the window its forest children poke into.
    std::size_t k = full.path.size();
    for (std::size_t j = 0; j < k; ++j) {
        Rational lo = Rational(10 * static_cast<long>(j));
        rep.add(full.path[j], {lo, lo + 13});
        if (j == 0)
            window[full.path[j]] = {lo, lo + 10};
        else if (j + 1 == k)
            window[full.path[j]] = {lo + 3, lo + 13};
        else
            window[full.path[j]] = {lo + 3, lo + 10};
    }
    // z is the one vertex off the path; it gets a standalone host interval.
    Rational zb = Rational(10 * static_cast<long>(k)) + 10;
    rep.add(z, {zb, zb + 7});
    window[z] = {zb, zb + 7};

    // Children from both forests nest side by side in the parent's window.
    std::vector<std::vector<int>> children(n);
    for (int v = 0; v < n; ++v) {
        if (full.forest_a[v] != -1) children[full.forest_a[v]].push_back(v);
        if (full.forest_b[v] != -1) children[full.forest_b[v]].push_back(v);
    }
    for (int w = 0; w < n; ++w) {
        if (children[w].empty()) continue;
        std::sort(children[w].begin(), children[w].end());
        const OpenPortion& win = window[w];
        Rational step = (win.hi - win.lo) / Rational(2 * static_cast<long>(children[w].size()) + 1);
        for (std::size_t i = 0; i < children[w].size(); ++i) {
            Rational lo = win.lo + step * Rational(2 * static_cast<long>(i) + 1);
            rep.add(children[w][i], {lo, lo + step});
        }
    }

    VerificationReport report = verify_against_graph(rep, g);
    if (!report.matches_target)
        throw VerificationError("depth-2 representation does not realize the input graph");
    if (report.depth > 2) throw VerificationError("depth-2 construction exceeded depth 2");
    if (report.max_intervals_per_vertex > 3)
        throw VerificationError("depth-2 construction exceeded 3 intervals per vertex");
    return rep;
}

Representation normalize(const Representation& rep) {
    std::set<Rational> endpoints;
    for (const auto& [v, ivs] : rep.intervals)
        for (const auto& iv : ivs) {
            endpoints.insert(iv.lo);
            endpoints.insert(iv.hi);
        }
    std::map<Rational, Rational> remap;
    long next = 0;
    for (const auto& e : endpoints) {
        remap[e] = Rational(2 * next);
        ++next;
    }
    Representation out;
    for (const auto& [v, ivs] : rep.intervals)
        for (const auto& iv : ivs) out.add(v, {remap.at(iv.lo), remap.at(iv.hi)});
    return out;
}

}  // namespace planiv
