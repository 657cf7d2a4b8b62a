#include "planiv/generator.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "planiv/errors.hpp"
#include "planiv/planarity.hpp"

namespace planiv {

namespace {

std::size_t resolve_face(const PlanarEmbedding& e, std::pair<int, int> rep_edge) {
    std::size_t f = face_of_directed_edge(e, rep_edge.first, rep_edge.second);
    if (f == PlanarEmbedding::no_face)
        throw InternalError("generator lost the outer face");
    return f;
}

// Flips edge a-b shared by inner triangles (a,b,c) and (b,a,d) to c-d.
void flip_edge(PlanarEmbedding& e, int a, int b, int c, int d) {
    auto& ra = e.rotation[a];
    ra.erase(std::find(ra.begin(), ra.end(), b));
    auto& rb = e.rotation[b];
    rb.erase(std::find(rb.begin(), rb.end(), a));

    // New corners: at c the face (d,b,c)+(a,d,c) puts d right after b; at d
    // the corner order puts c right after a.
    auto& rc = e.rotation[c];
    rc.insert(std::next(std::find(rc.begin(), rc.end(), b)), d);
    auto& rd = e.rotation[d];
    rd.insert(std::next(std::find(rd.begin(), rd.end(), a)), c);

    // Rebuild adjacency to match.
    Graph g(e.graph.vertex_count());
    for (int v = 0; v < e.graph.vertex_count(); ++v)
        for (int w : e.rotation[v])
            if (v < w) g.add_edge(v, w);
    e.graph = std::move(g);
}

}  // namespace

Triangulation gen_triangulation(const GeneratorConfig& cfg) {
    if (cfg.n < 4) throw ValidationError("generator needs n >= 4");
    SplitMix64 rng(cfg.seed);

    Graph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    PlanarEmbedding emb = planar_embed(k4);

    auto fs = faces(emb);
    std::pair<int, int> outer_rep{fs[emb.outer_face][0], fs[emb.outer_face][1]};

    while (emb.graph.vertex_count() < cfg.n) {
        fs = faces(emb);
        std::size_t outer = resolve_face(emb, outer_rep);
        std::vector<std::size_t> inner;
        for (std::size_t f = 0; f < fs.size(); ++f)
            if (f != outer) inner.push_back(f);
        std::size_t pick = inner[rng.below(inner.size())];
        stellate(emb, fs[pick]);
    }

    for (int step = 0; step < cfg.flips; ++step) {
        fs = faces(emb);
        std::size_t outer = resolve_face(emb, outer_rep);

        // Candidate flips: for every inner-inner edge a-b with triangles
        // (a,b,c) and (b,a,d), legal when c-d is not yet an edge.
        struct Candidate {
            int a, b, c, d;
        };
        std::vector<Candidate> cands;
        std::map<std::pair<int, int>, std::vector<std::pair<std::size_t, int>>> third;
        for (std::size_t f = 0; f < fs.size(); ++f)
            for (int i = 0; i < 3; ++i) {
                auto key = edge_key(fs[f][i], fs[f][(i + 1) % 3]);
                third[key].emplace_back(f, fs[f][(i + 2) % 3]);
            }
        for (auto& [key, sides] : third) {
            if (sides.size() != 2) continue;
            if (sides[0].first == outer || sides[1].first == outer) continue;
            int c = sides[0].second, d = sides[1].second;
            if (c == d || emb.graph.has_edge(c, d)) continue;
            cands.push_back({key.first, key.second, c, d});
        }
        if (cands.empty()) break;
        const Candidate& pick = cands[rng.below(cands.size())];

        // flip_edge wants (a,b) oriented so that face (a,b,c) has walk a->b.
        int a = pick.a, b = pick.b, c = pick.c, d = pick.d;
        std::size_t f_ab = face_of_directed_edge(emb, a, b);
        bool c_on_ab = false;
        for (int v : fs[f_ab]) c_on_ab |= (v == c);
        if (!c_on_ab) std::swap(c, d);
        flip_edge(emb, a, b, c, d);
    }

    emb.outer_face = resolve_face(emb, outer_rep);
    Triangulation t;
    t.embedding = std::move(emb);
    t.original_vertices.resize(static_cast<std::size_t>(t.vertex_count()));
    std::iota(t.original_vertices.begin(), t.original_vertices.end(), 0);
    validate_triangulation(t);
    return t;
}

}  // namespace planiv
