#include "planiv/triangle_split.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "planiv/errors.hpp"

namespace planiv {

namespace {

// Shared index for the region classification of many triangles of one
// triangulation: face list, dual adjacency labeled with the crossed edge,
// and the sorted face triples for facial-clique detection.
struct RegionIndex {
    const Triangulation& t;
    std::vector<FaceWalk> fs;
    std::vector<std::array<long, 3>> crossing;   // edge code per face side
    std::vector<std::array<int, 3>> neighbor;    // face across that side
    std::vector<std::array<int, 3>> face_key;    // sorted vertex triple
    int n;

    long code(int u, int v) const {
        auto [a, b] = edge_key(u, v);
        return static_cast<long>(a) * n + b;
    }

    explicit RegionIndex(const Triangulation& tri) : t(tri), n(tri.vertex_count()) {
        fs = faces(t.embedding);
        std::map<long, std::array<int, 2>> sides;
        for (std::size_t f = 0; f < fs.size(); ++f)
            for (int i = 0; i < 3; ++i) {
                long c = code(fs[f][i], fs[f][(i + 1) % 3]);
                auto it = sides.find(c);
                if (it == sides.end())
                    sides[c] = {static_cast<int>(f), -1};
                else
                    it->second[1] = static_cast<int>(f);
            }
        crossing.resize(fs.size());
        neighbor.resize(fs.size());
        face_key.resize(fs.size());
        for (std::size_t f = 0; f < fs.size(); ++f) {
            for (int i = 0; i < 3; ++i) {
                long c = code(fs[f][i], fs[f][(i + 1) % 3]);
                crossing[f][i] = c;
                auto [p, q] = sides.at(c);
                neighbor[f][i] = p == static_cast<int>(f) ? q : p;
            }
            face_key[f] = {fs[f][0], fs[f][1], fs[f][2]};
            std::sort(face_key[f].begin(), face_key[f].end());
        }
    }

    // Vertices strictly inside the cycle a-b-c (the side away from the
    // outer face). Faces swapping across a non-wall edge share a region.
    std::vector<int> interior(int a, int b, int c) const {
        std::array<long, 3> walls{code(a, b), code(b, c), code(a, c)};
        std::vector<char> outside(fs.size(), 0);
        std::vector<int> stack{static_cast<int>(t.embedding.outer_face)};
        outside[t.embedding.outer_face] = 1;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3; ++i) {
                long cr = crossing[f][i];
                if (cr == walls[0] || cr == walls[1] || cr == walls[2]) continue;
                int g = neighbor[f][i];
                if (g >= 0 && !outside[g]) {
                    outside[g] = 1;
                    stack.push_back(g);
                }
            }
        }
        std::vector<char> inside_vertex(static_cast<std::size_t>(n), 0);
        for (std::size_t f = 0; f < fs.size(); ++f)
            if (!outside[f])
                for (int v : fs[f]) inside_vertex[v] = 1;
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if (inside_vertex[v] && v != a && v != b && v != c) out.push_back(v);
        return out;
    }
};

std::vector<int> map_labels(const Triangulation& t, const std::vector<int>& locals) {
    std::vector<int> out;
    out.reserve(locals.size());
    for (int v : locals) out.push_back(t.label_of(v));
    std::sort(out.begin(), out.end());
    return out;
}

// Restriction of t's embedding to `keep` (sorted local ids): rotations keep
// their cyclic order; the result is relabeled to dense local ids and carries
// the surviving global labels.
Triangulation restrict_to(const Triangulation& t, const std::vector<int>& keep) {
    std::vector<int> local(static_cast<std::size_t>(t.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);

    Triangulation out;
    out.embedding.graph = Graph(static_cast<int>(keep.size()));
    out.embedding.rotation.resize(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (int w : t.embedding.rotation[keep[i]]) {
            if (local[w] == -1) continue;
            out.embedding.rotation[i].push_back(local[w]);
            if (local[w] > static_cast<int>(i)) continue;
            out.embedding.graph.add_edge(static_cast<int>(i), local[w]);
        }
    }
    out.labels.reserve(keep.size());
    for (int v : keep) out.labels.push_back(t.label_of(v));
    for (int v : keep)
        if (std::binary_search(t.original_vertices.begin(), t.original_vertices.end(), v))
            out.original_vertices.push_back(local[v]);
    return out;
}

int local_of_label(const Triangulation& t, int label) {
    if (t.labels.empty()) return label;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.labels[v] == label) return v;
    throw InternalError("label not present in triangulation");
}

}  // namespace

std::vector<TriangleRef> find_nonempty_triangles(const Triangulation& t) {
    const Graph& g = t.graph();
    RegionIndex index(t);

    std::set<std::array<int, 3>> inner_faces, outer_faces;
    for (std::size_t f = 0; f < index.fs.size(); ++f)
        (f == t.embedding.outer_face ? outer_faces : inner_faces).insert(index.face_key[f]);

    std::vector<TriangleRef> out;
    for (auto [u, v] : g.edges()) {
        for (int w : g.neighbors(u)) {
            if (w <= v || !g.has_edge(v, w)) continue;
            std::array<int, 3> key{u, v, w};
            std::vector<int> interior;
            if (outer_faces.count(key)) {
                // The outer triangle holds everything else inside.
                for (int x = 0; x < g.vertex_count(); ++x)
                    if (x != u && x != v && x != w) interior.push_back(x);
            } else if (inner_faces.count(key)) {
                continue;  // an inner facial triangle encloses nothing
            } else {
                interior = index.interior(u, v, w);  // separating triangle
            }
            if (interior.empty()) continue;
            TriangleRef ref;
            ref.vertices = {t.label_of(u), t.label_of(v), t.label_of(w)};
            std::sort(ref.vertices.begin(), ref.vertices.end());
            ref.interior = map_labels(t, interior);
            out.push_back(std::move(ref));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const TriangleRef& a, const TriangleRef& b) { return a.vertices < b.vertices; });
    return out;
}

TriangleRef select_minimal(const std::vector<TriangleRef>& candidates) {
    if (candidates.empty()) throw NoSeparatorError("no non-empty triangle to split on");

    // Interiors as bitsets over the label universe for fast subset tests.
    int max_label = 0;
    for (const auto& c : candidates)
        for (int v : c.interior) max_label = std::max(max_label, v);
    std::size_t words = static_cast<std::size_t>(max_label) / 64 + 1;
    std::vector<std::vector<std::uint64_t>> bits(candidates.size(),
                                                 std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (int v : candidates[i].interior)
            bits[i][static_cast<std::size_t>(v) / 64] |= 1ull << (v % 64);

    const TriangleRef* best = nullptr;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        bool minimal = true;
        for (std::size_t j = 0; j < candidates.size() && minimal; ++j) {
            if (j == i || candidates[j].interior.size() >= c.interior.size()) continue;
            bool subset = true;
            for (std::size_t k = 0; k < words && subset; ++k)
                subset = (bits[j][k] & ~bits[i][k]) == 0;
            minimal = !subset;
        }
        if (minimal && (!best || c.vertices < best->vertices)) best = &c;
    }
    return *best;
}

SplitResult split(const Triangulation& t, const TriangleRef& delta) {
    int a = local_of_label(t, delta.vertices[0]);
    int b = local_of_label(t, delta.vertices[1]);
    int c = local_of_label(t, delta.vertices[2]);
    std::vector<int> interior_local;
    for (int lbl : delta.interior) interior_local.push_back(local_of_label(t, lbl));
    std::sort(interior_local.begin(), interior_local.end());

    std::vector<int> keep_out, keep_in{a, b, c};
    for (int v = 0; v < t.vertex_count(); ++v)
        if (!std::binary_search(interior_local.begin(), interior_local.end(), v))
            keep_out.push_back(v);
    keep_in.insert(keep_in.end(), interior_local.begin(), interior_local.end());
    std::sort(keep_in.begin(), keep_in.end());

    SplitResult res;
    res.delta = delta;
    res.g_out = restrict_to(t, keep_out);
    res.g_in = restrict_to(t, keep_in);

    // Outer face of g_out: the one t's outer face became.
    auto outer_walk = faces(t.embedding)[t.embedding.outer_face];
    {
        auto loc = [&](int v) {
            return static_cast<int>(std::lower_bound(keep_out.begin(), keep_out.end(), v) -
                                    keep_out.begin());
        };
        res.g_out.embedding.outer_face =
            face_of_directed_edge(res.g_out.embedding, loc(outer_walk[0]), loc(outer_walk[1]));
    }
    // Outer face of g_in: the unique face on exactly delta's vertices.
    {
        auto fs = faces(res.g_in.embedding);
        res.g_in.embedding.outer_face = PlanarEmbedding::no_face;
        for (std::size_t f = 0; f < fs.size(); ++f) {
            std::array<int, 3> key{};
            if (fs[f].size() != 3) continue;
            for (int i = 0; i < 3; ++i) key[i] = res.g_in.label_of(fs[f][i]);
            std::sort(key.begin(), key.end());
            if (key == delta.vertices) {
                res.g_in.embedding.outer_face = f;
                break;
            }
        }
    }
    if (res.g_out.embedding.outer_face == PlanarEmbedding::no_face ||
        res.g_in.embedding.outer_face == PlanarEmbedding::no_face)
        throw InternalError("split: lost an outer face");

    validate_triangulation(res.g_out);
    validate_triangulation(res.g_in);
    if (!is_four_connected(res.g_in.graph()))
        throw MinimalityViolationError("inner piece is not 4-connected; delta is not minimal");
    return res;
}

PeelingSchedule peel(const Triangulation& t) {
    PeelingSchedule schedule;
    Triangulation cur = t;
    if (cur.labels.empty()) {
        cur.labels.resize(static_cast<std::size_t>(cur.vertex_count()));
        for (int v = 0; v < cur.vertex_count(); ++v) cur.labels[v] = v;
    }
    while (cur.vertex_count() > 3) {
        auto candidates = find_nonempty_triangles(cur);
        TriangleRef delta = select_minimal(candidates);
        SplitResult step = split(cur, delta);
        cur = step.g_out;
        schedule.steps.push_back(std::move(step));
    }
    schedule.base = std::move(cur);
    return schedule;
}

std::string schedule_to_json(const PeelingSchedule& schedule) {
    nlohmann::ordered_json j;
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : schedule.steps) {
        nlohmann::ordered_json step;
        step["delta"] = s.delta.vertices;
        step["interior"] = s.delta.interior;
        auto edges = nlohmann::ordered_json::array();
        for (auto [u, v] : s.g_in.graph().edges()) {
            auto key = edge_key(s.g_in.label_of(u), s.g_in.label_of(v));
            edges.push_back({key.first, key.second});
        }
        step["piece_edges"] = std::move(edges);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    std::vector<int> base;
    for (int v = 0; v < schedule.base.vertex_count(); ++v)
        base.push_back(schedule.base.label_of(v));
    std::sort(base.begin(), base.end());
    j["base"] = base;
    return j.dump(2) + "\n";
}

}  // namespace planiv
