#include "planiv/planarity.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "planiv/errors.hpp"

namespace planiv {

namespace {

using Edge = std::pair<int, int>;

// Biconnected components as edge lists (global ids), via the classic
// lowpoint computation with an explicit stack.
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> next_nbr(n, 0);
    std::vector<Edge> estack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1 || g.degree(root) == 0) continue;
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int u = stack.back();
            if (next_nbr[u] < g.neighbors(u).size()) {
                int w = g.neighbors(u)[next_nbr[u]++];
                if (disc[w] == -1) {
                    parent[w] = u;
                    disc[w] = low[w] = timer++;
                    estack.emplace_back(u, w);
                    stack.push_back(w);
                } else if (w != parent[u] && disc[w] < disc[u]) {
                    estack.emplace_back(u, w);
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back();
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p]) {
                        std::vector<Edge> block;
                        while (!estack.empty()) {
                            Edge e = estack.back();
                            estack.pop_back();
                            block.push_back(e);
                            if (e == Edge{p, u}) break;
                        }
                        blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return blocks;
}

// One fragment of the not-yet-embedded part relative to the embedded
// subgraph H: either a single chord, or a connected component of G - V(H)
// with its attachment edges.
struct Fragment {
    std::vector<int> attach;         // embedded vertices, sorted
    std::vector<int> interior;       // non-embedded vertices, sorted
    Edge chord{-1, -1};              // valid when interior is empty
};

// Incremental planar embedding of one 2-connected block. Vertices are the
// block's local ids 0..k-1; returns the local rotation system.
class BlockEmbedder {
public:
    BlockEmbedder(int k, std::vector<std::vector<int>> adj) : k_(k), adj_(std::move(adj)) {
        in_h_.assign(k_, false);
        edge_done_.assign(k_, {});
        for (int v = 0; v < k_; ++v) edge_done_[v].assign(adj_[v].size(), false);
    }

    std::vector<std::vector<int>> run() {
        embed_initial_cycle();
        while (edges_left_ > 0) {
            auto frags = fragments();
            if (frags.empty())
                throw InternalError("planarity: edges remain but no fragment found");
            embed_one(frags);
        }
        return rotation_from_faces();
    }

private:
    std::size_t nbr_index(int u, int w) const {
        auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), w);
        return static_cast<std::size_t>(it - adj_[u].begin());
    }

    bool edge_embedded(int u, int w) const { return edge_done_[u][nbr_index(u, w)]; }

    void mark_edge(int u, int w) {
        edge_done_[u][nbr_index(u, w)] = true;
        edge_done_[w][nbr_index(w, u)] = true;
        --edges_left_;
    }

    void add_face(std::vector<int> walk) {
        face_sets_.push_back(walk);
        std::sort(face_sets_.back().begin(), face_sets_.back().end());
        face_walks_.push_back(std::move(walk));
        face_alive_.push_back(true);
    }

    bool face_contains(std::size_t f, int v) const {
        const auto& s = face_sets_[f];
        return std::binary_search(s.begin(), s.end(), v);
    }

    void embed_initial_cycle() {
        edges_left_ = 0;
        for (int v = 0; v < k_; ++v) edges_left_ += static_cast<int>(adj_[v].size());
        edges_left_ /= 2;

        if (k_ == 2) {  // bridge block: one edge, one face u-v
            in_h_[0] = in_h_[1] = true;
            mark_edge(0, 1);
            add_face({0, 1});
            return;
        }

        // DFS from 0 until a back edge closes a cycle.
        std::vector<int> parent(k_, -1), state(k_, 0);
        std::vector<std::size_t> next(k_, 0);
        std::vector<int> stack{0};
        state[0] = 1;
        std::vector<int> cycle;
        while (!stack.empty() && cycle.empty()) {
            int u = stack.back();
            if (next[u] < adj_[u].size()) {
                int w = adj_[u][next[u]++];
                if (state[w] == 0) {
                    parent[w] = u;
                    state[w] = 1;
                    stack.push_back(w);
                } else if (state[w] == 1 && w != parent[u]) {
                    for (int x = u; x != w; x = parent[x]) cycle.push_back(x);
                    cycle.push_back(w);
                    std::reverse(cycle.begin(), cycle.end());  // w ... u
                }
            } else {
                state[u] = 2;
                stack.pop_back();
            }
        }
        if (cycle.empty())
            throw InternalError("planarity: 2-connected block without a cycle");

        for (std::size_t i = 0; i < cycle.size(); ++i) {
            in_h_[cycle[i]] = true;
            mark_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        }
        std::vector<int> rev(cycle.rbegin(), cycle.rend());
        add_face(std::move(cycle));
        add_face(std::move(rev));
    }

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        // Chords first, in lexicographic order.
        for (int u = 0; u < k_; ++u) {
            if (!in_h_[u]) continue;
            for (std::size_t i = 0; i < adj_[u].size(); ++i) {
                int w = adj_[u][i];
                if (u < w && in_h_[w] && !edge_done_[u][i]) {
                    Fragment f;
                    f.attach = {u, w};
                    f.chord = {u, w};
                    out.push_back(std::move(f));
                }
            }
        }
        // Components of G - V(H).
        std::vector<char> seen(k_, 0);
        for (int s = 0; s < k_; ++s) {
            if (in_h_[s] || seen[s]) continue;
            Fragment f;
            std::vector<int> queue{s};
            seen[s] = 1;
            std::vector<char> att(k_, 0);
            while (!queue.empty()) {
                int u = queue.back();
                queue.pop_back();
                f.interior.push_back(u);
                for (int w : adj_[u]) {
                    if (in_h_[w])
                        att[w] = 1;
                    else if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
            for (int v = 0; v < k_; ++v)
                if (att[v]) f.attach.push_back(v);
            std::sort(f.interior.begin(), f.interior.end());
            out.push_back(std::move(f));
        }
        return out;
    }

    // Admissible-face count capped at 2 (0 means non-planar, 1 forces the
    // choice, >=2 are interchangeable); also reports the smallest such face.
    std::pair<int, std::size_t> admissibility(const Fragment& f) const {
        int count = 0;
        std::size_t first = PlanarEmbedding::no_face;
        for (std::size_t fa = 0; fa < face_walks_.size(); ++fa) {
            if (!face_alive_[fa]) continue;
            bool ok = true;
            for (int a : f.attach)
                if (!face_contains(fa, a)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (count == 0) first = fa;
            if (++count == 2) break;
        }
        return {count, first};
    }

    void embed_one(const std::vector<Fragment>& frags) {
        int best = -1, best_count = 3;
        std::size_t best_face = PlanarEmbedding::no_face;
        for (std::size_t i = 0; i < frags.size(); ++i) {
            auto [count, face] = admissibility(frags[i]);
            if (count == 0)
                throw NonPlanarError("graph has no plane embedding");
            if (count < best_count) {
                best_count = count;
                best = static_cast<int>(i);
                best_face = face;
                if (count == 1) break;
            }
        }
        const Fragment& f = frags[best];

        // Alpha path between two attachment vertices through the fragment.
        std::vector<int> path;
        if (f.interior.empty()) {
            path = {f.chord.first, f.chord.second};
        } else {
            int a = f.attach.front();
            std::vector<int> prev(k_, -2);
            std::vector<int> queue;
            std::size_t head = 0;
            int found = -1;
            for (int w : adj_[a])
                if (!in_h_[w] && prev[w] == -2 &&
                    std::binary_search(f.interior.begin(), f.interior.end(), w)) {
                    prev[w] = a;
                    queue.push_back(w);
                }
            while (head < queue.size() && found == -1) {
                int u = queue[head++];
                for (int w : adj_[u]) {
                    if (in_h_[w]) {
                        if (w != a) {
                            found = w;
                            prev[w] = u;
                            break;
                        }
                    } else if (prev[w] == -2) {
                        prev[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if (found == -1)
                throw InternalError("planarity: fragment with a single attachment");
            for (int x = found; x != -2; x = prev[x]) {
                path.push_back(x);
                if (x == a) break;
            }
            std::reverse(path.begin(), path.end());
        }

        // Split the chosen face along the path.
        const auto walk = face_walks_[best_face];
        face_alive_[best_face] = false;
        auto pos = [&](int v) {
            return std::find(walk.begin(), walk.end(), v) - walk.begin();
        };
        std::size_t ia = static_cast<std::size_t>(pos(path.front()));
        std::size_t ib = static_cast<std::size_t>(pos(path.back()));

        std::vector<int> face1, face2;
        for (std::size_t i = ia; i != ib; i = (i + 1) % walk.size()) face1.push_back(walk[i]);
        face1.push_back(walk[ib]);
        for (std::size_t i = path.size() - 2; i >= 1; --i) face1.push_back(path[i]);
        for (std::size_t i = ib; i != ia; i = (i + 1) % walk.size()) face2.push_back(walk[i]);
        face2.push_back(walk[ia]);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) face2.push_back(path[i]);
        add_face(std::move(face1));
        add_face(std::move(face2));

        for (std::size_t i = 0; i + 1 < path.size(); ++i) mark_edge(path[i], path[i + 1]);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) in_h_[path[i]] = true;
    }

    std::vector<std::vector<int>> rotation_from_faces() const {
        std::vector<std::map<int, int>> after(k_);
        for (std::size_t fa = 0; fa < face_walks_.size(); ++fa) {
            if (!face_alive_[fa]) continue;
            const auto& w = face_walks_[fa];
            std::size_t len = w.size();
            for (std::size_t i = 0; i < len; ++i) {
                int p = w[i], c = w[(i + 1) % len], x = w[(i + 2) % len];
                after[c][p] = x;
            }
        }
        std::vector<std::vector<int>> rot(k_);
        for (int v = 0; v < k_; ++v) {
            if (adj_[v].empty()) continue;
            int start = adj_[v].front();
            int cur = start;
            do {
                rot[v].push_back(cur);
                auto it = after[v].find(cur);
                if (it == after[v].end())
                    throw InternalError("planarity: face system is not a rotation");
                cur = it->second;
            } while (cur != start && rot[v].size() <= adj_[v].size());
            if (rot[v].size() != adj_[v].size())
                throw InternalError("planarity: rotation does not close at a vertex");
        }
        return rot;
    }

    int k_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> in_h_;
    std::vector<std::vector<char>> edge_done_;
    int edges_left_ = 0;
    std::vector<std::vector<int>> face_walks_;
    std::vector<std::vector<int>> face_sets_;
    std::vector<char> face_alive_;
};

}  // namespace

PlanarEmbedding planar_embed(const Graph& g) {
    int n = g.vertex_count();
    PlanarEmbedding e;
    e.graph = g;
    e.rotation.assign(static_cast<std::size_t>(n), {});

    auto blocks = biconnected_blocks(g);
    // Deterministic merge order at cut vertices: by smallest block edge.
    std::vector<std::size_t> order(blocks.size());
    std::vector<Edge> keys(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        Edge k{n, n};
        for (auto [u, v] : blocks[b]) k = std::min(k, edge_key(u, v));
        keys[b] = k;
        order[b] = b;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    for (std::size_t bi : order) {
        const auto& block = blocks[bi];
        std::vector<int> verts;
        for (auto [u, v] : block) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        int k = static_cast<int>(verts.size());
        auto local = [&](int v) {
            return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                                    verts.begin());
        };
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
        for (auto [u, v] : block) {
            adj[local(u)].push_back(local(v));
            adj[local(v)].push_back(local(u));
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());

        auto rot = BlockEmbedder(k, std::move(adj)).run();
        for (int lv = 0; lv < k; ++lv) {
            auto& target = e.rotation[verts[lv]];
            for (int lw : rot[lv]) target.push_back(verts[lw]);
        }
    }

    auto fs = faces(e);
    e.outer_face = fs.empty() ? PlanarEmbedding::no_face : choose_outer_face(fs);
    return e;
}

bool is_planar(const Graph& g) {
    try {
        planar_embed(g);
        return true;
    } catch (const NonPlanarError&) {
        return false;
    }
}

}  // namespace planiv
