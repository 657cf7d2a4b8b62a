#include "planiv/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "planiv/errors.hpp"
#include "planiv/planarity.hpp"

namespace planiv {

std::vector<int> component_ids(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

int stellate(PlanarEmbedding& e, const FaceWalk& walk) {
    int s = e.graph.add_vertex();
    e.rotation.emplace_back();
    std::size_t len = walk.size();

    std::vector<std::pair<std::size_t, int>> first_occ;  // (position, vertex)
    for (std::size_t i = 0; i < len; ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i && !seen; ++j) seen = (walk[j] == walk[i]);
        if (!seen) first_occ.emplace_back(i, walk[i]);
    }

    std::vector<int> attach;
    for (auto [p, a] : first_occ) {
        int pr = walk[(p + len - 1) % len];
        auto& rot = e.rotation[a];
        auto it = std::find(rot.begin(), rot.end(), pr);
        rot.insert(it + 1, s);
        e.graph.add_edge(s, a);
        attach.push_back(a);
    }
    // Rotation at s: attachments in reverse walk order close each region face.
    e.rotation[s].assign(attach.rbegin(), attach.rend());
    return s;
}

Triangulation triangulate_induced(const PlanarEmbedding& e) {
    int orig_n = e.graph.vertex_count();
    if (orig_n == 0) throw ValidationError("cannot triangulate the empty graph");

    Graph g = e.graph;
    auto comp = component_ids(g);
    int ncomp = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    bool augmented = false;
    if (ncomp > 1) {
        int hub = g.add_vertex();
        std::vector<char> done(static_cast<std::size_t>(ncomp), 0);
        for (int v = 0; v < orig_n; ++v)
            if (!done[comp[v]]) {
                done[comp[v]] = 1;
                g.add_edge(hub, v);
            }
        augmented = true;
    }
    while (g.vertex_count() < 3) {
        int v = g.add_vertex();
        g.add_edge(v, 0);
        augmented = true;
    }

    PlanarEmbedding emb = augmented ? planar_embed(g) : e;

    auto fs = faces(emb);
    if (fs.empty() || emb.outer_face >= fs.size())
        throw InternalError("triangulate: embedding has no usable outer face");
    // The outer face is tracked across stellations by a representative
    // directed edge, re-resolved after each face rescan.
    std::pair<int, int> outer_rep{fs[emb.outer_face][0], fs[emb.outer_face][1]};

    long long guard = 16LL * (g.vertex_count() + g.edge_count()) + 64;
    while (true) {
        fs = faces(emb);
        std::size_t target = fs.size();
        for (std::size_t f = 0; f < fs.size(); ++f)
            if (fs[f].size() != 3) {
                target = f;
                break;
            }
        if (target == fs.size()) break;
        if (--guard < 0)
            throw InternalError("triangulate: stellation did not terminate");

        const FaceWalk walk = fs[target];
        bool was_outer = false;
        for (std::size_t i = 0; i < walk.size() && !was_outer; ++i)
            was_outer = (walk[i] == outer_rep.first &&
                         walk[(i + 1) % walk.size()] == outer_rep.second);
        stellate(emb, walk);
        if (was_outer) outer_rep = {walk[0], walk[1]};
    }

    emb.outer_face = face_of_directed_edge(emb, outer_rep.first, outer_rep.second);
    if (emb.outer_face == PlanarEmbedding::no_face)
        throw InternalError("triangulate: lost track of the outer face");

    Triangulation t;
    t.embedding = std::move(emb);
    t.original_vertices.resize(static_cast<std::size_t>(orig_n));
    std::iota(t.original_vertices.begin(), t.original_vertices.end(), 0);
    validate_triangulation(t);

    // Only new vertices were added, so the original graph must come back as
    // the induced subgraph on its ids.
    for (int u = 0; u < orig_n; ++u)
        for (int v = u + 1; v < orig_n; ++v)
            if (t.graph().has_edge(u, v) != e.graph.has_edge(u, v))
                throw InternalError("triangulate: input graph is no longer induced");
    return t;
}

Triangulation triangulation_from_graph(const Graph& g) {
    if (g.vertex_count() < 3) throw ValidationError("a triangulation needs >= 3 vertices");
    PlanarEmbedding emb = planar_embed(g);
    for (const auto& w : faces(emb))
        if (w.size() != 3)
            throw ValidationError("graph is not a triangulation: face of length " +
                                  std::to_string(w.size()));
    Triangulation t;
    t.embedding = std::move(emb);
    t.original_vertices.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(t.original_vertices.begin(), t.original_vertices.end(), 0);
    validate_triangulation(t);
    return t;
}

bool is_four_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) throw ValidationError("4-connectivity check requires n >= 4");
    if (g.edge_count() != 3 * n - 6)
        throw ValidationError("4-connectivity check expects a maximal planar graph");

    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    auto separates = [&](int a, int b, int c) {
        if (n - 3 <= 1) return false;
        removed[a] = removed[b] = removed[c] = 1;
        std::fill(seen.begin(), seen.end(), 0);
        int start = -1;
        for (int v = 0; v < n && start == -1; ++v)
            if (!removed[v]) start = v;
        int reached = 1;
        seen[start] = 1;
        stack.assign(1, start);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (!removed[w] && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        removed[a] = removed[b] = removed[c] = 0;
        return reached != n - 3;
    };

    for (auto [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w > v && g.has_edge(v, w) && separates(u, v, w)) return false;
    return true;
}

void validate_triangulation(const Triangulation& t) {
    if (t.vertex_count() < 3)
        throw ValidationError("triangulation has fewer than 3 vertices");
    validate_embedding(t.embedding);
    for (const auto& w : faces(t.embedding)) {
        if (w.size() != 3)
            throw ValidationError("triangulation face of length " + std::to_string(w.size()));
        if (w[0] == w[1] || w[1] == w[2] || w[0] == w[2])
            throw ValidationError("triangulation face with repeated vertex");
    }
    if (!t.labels.empty() &&
        t.labels.size() != static_cast<std::size_t>(t.vertex_count()))
        throw ValidationError("label vector size mismatch");
}

}  // namespace planiv
