#include "planiv/embedding.hpp"

#include <algorithm>
#include <string>

#include "planiv/errors.hpp"

namespace planiv {

std::vector<FaceWalk> faces(const PlanarEmbedding& e) {
    int n = e.graph.vertex_count();
    std::vector<FaceWalk> out;
    // visited directed edges, keyed by (u, index of v in rotation[u])
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) seen[u].assign(e.rotation[u].size(), 0);

    auto index_of = [&](int at, int nbr) {
        const auto& rot = e.rotation[at];
        return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), nbr) - rot.begin());
    };

    for (int u = 0; u < n; ++u) {
        for (std::size_t i = 0; i < e.rotation[u].size(); ++i) {
            if (seen[u][i]) continue;
            FaceWalk walk;
            int a = u;
            int b = e.rotation[u][i];
            while (true) {
                std::size_t idx = index_of(a, b);
                if (seen[a][idx]) break;
                seen[a][idx] = 1;
                walk.push_back(a);
                // successor of a in the rotation at b continues the face
                const auto& rot_b = e.rotation[b];
                int c = rot_b[(index_of(b, a) + 1) % rot_b.size()];
                a = b;
                b = c;
            }
            out.push_back(std::move(walk));
        }
    }
    return out;
}

std::size_t face_of_directed_edge(const PlanarEmbedding& e, int u, int v) {
    auto fs = faces(e);
    for (std::size_t f = 0; f < fs.size(); ++f) {
        const auto& w = fs[f];
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == u && w[(i + 1) % w.size()] == v) return f;
    }
    return PlanarEmbedding::no_face;
}

void validate_embedding(const PlanarEmbedding& e) {
    int n = e.graph.vertex_count();
    if (static_cast<int>(e.rotation.size()) != n)
        throw ValidationError("rotation size does not match vertex count");
    for (int v = 0; v < n; ++v) {
        auto sorted = e.rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != e.graph.neighbors(v))
            throw ValidationError("rotation at vertex " + std::to_string(v) +
                                  " is not a permutation of its neighbors");
    }

    auto fs = faces(e);
    std::size_t total_len = 0;
    for (const auto& w : fs) total_len += w.size();
    if (total_len != 2 * static_cast<std::size_t>(e.graph.edge_count()))
        throw ValidationError("face walks do not cover every directed edge exactly once");

    // Euler per connected component (components with at least one edge).
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : e.graph.neighbors(u))
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<long long> cv(ncomp, 0), ce(ncomp, 0), cf(ncomp, 0);
    for (int v = 0; v < n; ++v) {
        ++cv[comp[v]];
        ce[comp[v]] += e.graph.degree(v);
    }
    for (const auto& w : fs)
        if (!w.empty()) ++cf[comp[w[0]]];
    for (int c = 0; c < ncomp; ++c) {
        ce[c] /= 2;
        if (ce[c] == 0) continue;  // isolated vertex
        if (cv[c] - ce[c] + cf[c] != 2)
            throw ValidationError("Euler relation fails on component " + std::to_string(c));
    }

    if (e.graph.edge_count() > 0) {
        if (e.outer_face >= fs.size())
            throw ValidationError("outer face id out of range");
    }
}

std::size_t choose_outer_face(const std::vector<FaceWalk>& fs) {
    std::size_t best = PlanarEmbedding::no_face;
    std::vector<int> best_key;
    for (std::size_t f = 0; f < fs.size(); ++f) {
        std::vector<int> key(fs[f]);
        std::sort(key.begin(), key.end());
        if (best == PlanarEmbedding::no_face || fs[f].size() > fs[best].size() ||
            (fs[f].size() == fs[best].size() && key < best_key)) {
            best = f;
            best_key = std::move(key);
        }
    }
    return best;
}

}  // namespace planiv
