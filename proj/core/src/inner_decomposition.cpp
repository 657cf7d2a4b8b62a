#include "planiv/inner_decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "planiv/errors.hpp"

namespace planiv {

namespace {

constexpr unsigned kMaskX = 1u, kMaskY = 2u, kMaskZ = 4u;

// Union-find with union by size and no path compression, so unions can be
// rolled back in LIFO order.
class RollbackUF {
public:
    explicit RollbackUF(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        trail_.push_back(b);
        return true;
    }
    std::size_t mark() const { return trail_.size(); }
    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            int b = trail_.back();
            trail_.pop_back();
            size_[parent_[b]] -= size_[b];
            parent_[b] = b;
        }
    }

private:
    std::vector<int> parent_, size_;
    std::vector<int> trail_;
};

struct EdgeRec {
    int u, v;
};

class DecompositionSearch {
public:
    DecompositionSearch(const Triangulation& t, std::array<int, 3> outer,
                        OpposingVertices opp)
        : g_(t.graph()),
          n_(t.vertex_count()),
          x_(outer[0]),
          y_(outer[1]),
          z_(outer[2]),
          opp_(opp),
          ufx_(n_),
          ufy_(n_),
          ufz_(n_) {
        quota_max_ = n_ - 3;
        ufz_.unite(x_, z_);  // joining the x- and z-sides of F_z is a cycle

        // Inner edges in BFS-from-outer order.
        std::vector<int> dist(n_, -1);
        std::vector<int> queue{x_, y_, z_};
        dist[x_] = dist[y_] = dist[z_] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int w : g_.neighbors(queue[h]))
                if (dist[w] == -1) {
                    dist[w] = dist[queue[h]] + 1;
                    queue.push_back(w);
                }
        for (auto [u, v] : g_.edges()) {
            bool outer_edge = (u == x_ || u == y_ || u == z_) &&
                              (v == x_ || v == y_ || v == z_);
            if (!outer_edge) edges_.push_back({u, v});
        }
        std::stable_sort(edges_.begin(), edges_.end(), [&](const EdgeRec& a, const EdgeRec& b) {
            auto key = [&](const EdgeRec& e) {
                return std::tuple(std::min(dist[e.u], dist[e.v]),
                                  std::max(dist[e.u], dist[e.v]), e.u, e.v);
            };
            return key(a) < key(b);
        });

        int m = static_cast<int>(edges_.size());
        assign_.assign(m, -1);
        domain_.assign(m, 0);
        incident_.assign(n_, {});
        for (int e = 0; e < m; ++e) {
            auto [u, v] = edges_[e];
            unsigned mask = 0;
            if (u != y_ && u != z_ && v != y_ && v != z_) mask |= kMaskX;
            if (u != x_ && u != z_ && v != x_ && v != z_) mask |= kMaskY;
            if (u != y_ && v != y_) mask |= kMaskZ;
            domain_[e] = mask;
            incident_[u].push_back(e);
            incident_[v].push_back(e);
        }
        degx_.assign(n_, 0);
        unassigned_ = m;
    }

    bool run() {
        // The edge x-u_y can only sit on the path; seeding it up front lets
        // the degree cap at x push every other x-edge into F_z immediately.
        int seed = edge_id(x_, opp_.u_y);
        if (seed < 0) throw InternalError("decomposition: edge x-u_y missing");
        if (!assign_edge(seed, 0) || !propagate()) return false;
        return search();
    }

    std::vector<int> bucket_of_edges(int bucket) const {
        std::vector<int> out;
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if (assign_[e] == bucket) out.push_back(static_cast<int>(e));
        return out;
    }

    const EdgeRec& edge(int e) const { return edges_[e]; }
    long long nodes() const { return nodes_; }

private:
    int edge_id(int u, int v) const {
        for (int e : incident_[u]) {
            auto [a, b] = edges_[e];
            if ((a == u && b == v) || (a == v && b == u)) return e;
        }
        return -1;
    }

    int capx(int v) const { return (v == x_ || v == opp_.u_x) ? 1 : 2; }

    bool feasible(int e, int bucket) const {
        unsigned bit = 1u << bucket;
        if (!(domain_[e] & bit)) return false;
        if (quota_[bucket] >= quota_max_) return false;
        auto [u, v] = edges_[e];
        switch (bucket) {
            case 0:
                return degx_[u] < capx(u) && degx_[v] < capx(v) &&
                       ufx_.find(u) != ufx_.find(v);
            case 1: return ufy_.find(u) != ufy_.find(v);
            default: return ufz_.find(u) != ufz_.find(v);
        }
    }

    unsigned feasible_mask(int e) const {
        unsigned m = 0;
        for (int b = 0; b < 3; ++b)
            if (feasible(e, b)) m |= 1u << b;
        return m;
    }

    bool assign_edge(int e, int bucket) {
        if (assign_[e] != -1) return assign_[e] == bucket;
        if (!feasible(e, bucket)) return false;
        auto [u, v] = edges_[e];
        assign_[e] = bucket;
        trail_.push_back(e);
        ++quota_[bucket];
        --unassigned_;
        if (bucket == 0) {
            ++degx_[u];
            ++degx_[v];
            ufx_.unite(u, v);
        } else if (bucket == 1) {
            ufy_.unite(u, v);
        } else {
            ufz_.unite(u, v);
        }
        return true;
    }

    // Unit propagation plus per-vertex degree counting, to fixpoint, then
    // connectivity pruning for the three structures.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (assign_[e] != -1) continue;
                unsigned m = feasible_mask(static_cast<int>(e));
                if (m == 0) return false;
                if ((m & (m - 1)) == 0) {
                    int b = m == kMaskX ? 0 : (m == kMaskY ? 1 : 2);
                    if (!assign_edge(static_cast<int>(e), b)) return false;
                    changed = true;
                }
            }
            for (int v = 0; v < n_; ++v) {
                if (v != y_ && v != z_) {  // path degree is exact
                    int need = capx(v), have = degx_[v], avail = 0;
                    for (int e : incident_[v])
                        if (assign_[e] == -1 && feasible(e, 0)) ++avail;
                    if (have + avail < need) return false;
                    if (have < need && have + avail == need) {
                        for (int e : incident_[v])
                            if (assign_[e] == -1 && feasible(e, 0)) {
                                if (!assign_edge(e, 0)) return false;
                                changed = true;
                            }
                    }
                }
                if (v != x_ && v != z_) {  // spanning tree needs a touch
                    if (!force_cover(v, 1, changed)) return false;
                }
                if (v != y_ && v != x_) {  // spanning forest needs a touch
                    if (!force_cover(v, 2, changed)) return false;
                }
            }
        }
        return connected(0) && connected(1) && connected(2);
    }

    bool force_cover(int v, int bucket, bool& changed) {
        int have = 0, avail = 0, last = -1;
        for (int e : incident_[v]) {
            if (assign_[e] == bucket)
                ++have;
            else if (assign_[e] == -1 && feasible(e, bucket)) {
                ++avail;
                last = e;
            }
        }
        if (have > 0) return true;
        if (avail == 0) return false;
        if (avail == 1) {
            if (!assign_edge(last, bucket)) return false;
            changed = true;
        }
        return true;
    }

    // The assigned-or-still-possible edges of a bucket must span its domain.
    bool connected(int bucket) const {
        std::vector<char> in_dom(n_, 1), seen(n_, 0);
        if (bucket == 0) in_dom[y_] = in_dom[z_] = 0;
        if (bucket == 1) in_dom[x_] = in_dom[z_] = 0;
        if (bucket == 2) in_dom[y_] = 0;
        int start = -1, total = 0;
        for (int v = 0; v < n_; ++v)
            if (in_dom[v]) {
                ++total;
                if (start == -1) start = v;
            }
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 1;
        // x and z count as one node for the F_z forest
        if (bucket == 2 && (start == x_ || start == z_)) {
            int other = start == x_ ? z_ : x_;
            seen[other] = 1;
            ++reached;
            stack.push_back(other);
        }
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e : incident_[u]) {
                if (assign_[e] != bucket && !(assign_[e] == -1 && feasible(e, bucket)))
                    continue;
                auto [a, b] = edges_[e];
                int w = a == u ? b : a;
                if (seen[w]) continue;
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
                if (bucket == 2 && (w == x_ || w == z_)) {
                    int other = w == x_ ? z_ : x_;
                    if (!seen[other]) {
                        seen[other] = 1;
                        ++reached;
                        stack.push_back(other);
                    }
                }
            }
        }
        return reached == total;
    }

    bool search() {
        if (unassigned_ == 0) return true;
        if (++nodes_ > kNodeBudget)
            throw SearchExhaustedError("decomposition search exceeded its node budget");
        int pick = -1;
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if (assign_[e] == -1) {
                pick = static_cast<int>(e);
                break;
            }
        for (int b = 0; b < 3; ++b) {
            if (!feasible(pick, b)) continue;
            std::size_t tmark = trail_.size();
            std::size_t mx = ufx_.mark(), my = ufy_.mark(), mz = ufz_.mark();
            if (assign_edge(pick, b) && propagate() && search()) return true;
            undo_to(tmark, mx, my, mz);
        }
        return false;
    }

    void undo_to(std::size_t tmark, std::size_t mx, std::size_t my, std::size_t mz) {
        while (trail_.size() > tmark) {
            int e = trail_.back();
            trail_.pop_back();
            int b = assign_[e];
            assign_[e] = -1;
            --quota_[b];
            ++unassigned_;
            if (b == 0) {
                --degx_[edges_[e].u];
                --degx_[edges_[e].v];
            }
        }
        ufx_.rollback(mx);
        ufy_.rollback(my);
        ufz_.rollback(mz);
    }

    static constexpr long long kNodeBudget = 20'000'000;

    const Graph& g_;
    int n_;
    int x_, y_, z_;
    OpposingVertices opp_;
    RollbackUF ufx_, ufy_, ufz_;
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> assign_;
    std::vector<unsigned> domain_;
    std::vector<int> degx_;
    std::array<int, 3> quota_{0, 0, 0};
    int quota_max_;
    int unassigned_ = 0;
    std::vector<int> trail_;
    long long nodes_ = 0;
};

void check_outer(const Triangulation& t, std::array<int, 3> outer) {
    auto fs = faces(t.embedding);
    if (t.embedding.outer_face >= fs.size())
        throw ValidationError("triangulation has no designated outer face");
    std::array<int, 3> have{}, want = outer;
    const auto& w = fs[t.embedding.outer_face];
    if (w.size() != 3) throw ValidationError("outer face is not a triangle");
    for (int i = 0; i < 3; ++i) have[i] = w[i];
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    if (have != want)
        throw ValidationError("given outer triple does not match the outer face");
}

std::vector<int> parents_by_bfs(int n, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<int>& roots) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> parent(n, -1), state(n, 0);
    std::vector<int> queue;
    for (int r : roots) {
        state[r] = 1;
        queue.push_back(r);
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (int w : adj[u])
            if (!state[w]) {
                state[w] = 1;
                parent[w] = u;
                queue.push_back(w);
            }
    }
    return parent;
}

}  // namespace

std::vector<std::pair<int, int>> InnerDecomposition::edges_x() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i + 1 < fx_path.size(); ++i)
        out.push_back(edge_key(fx_path[i], fx_path[i + 1]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> InnerDecomposition::edges_y() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t v = 0; v < fy_parent.size(); ++v)
        if (fy_parent[v] != -1) out.push_back(edge_key(static_cast<int>(v), fy_parent[v]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> InnerDecomposition::edges_z() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t v = 0; v < fz_parent.size(); ++v)
        if (fz_parent[v] != -1) out.push_back(edge_key(static_cast<int>(v), fz_parent[v]));
    out.push_back(edge_key(outer[2], opp.u_y));
    std::sort(out.begin(), out.end());
    return out;
}

OpposingVertices opposing_vertices(const Triangulation& t, std::array<int, 3> outer) {
    check_outer(t, outer);
    const Graph& g = t.graph();
    auto [x, y, z] = outer;
    auto unique_common = [&](int a, int b, int excluded) {
        std::vector<int> cands;
        for (int w : g.neighbors(a))
            if (w != excluded && g.has_edge(b, w)) cands.push_back(w);
        if (cands.size() != 1) {
            std::array<int, 3> witness{a, b, cands.empty() ? -1 : cands[0]};
            throw NotFourConnectedError(
                "opposing vertex of the corner across " + std::to_string(a) + "," +
                    std::to_string(b) + " is not unique",
                witness);
        }
        return cands[0];
    };
    OpposingVertices opp{};
    opp.u_x = unique_common(y, z, x);
    opp.u_y = unique_common(x, z, y);
    opp.u_z = unique_common(x, y, z);
    int n = t.vertex_count();
    bool coincide = opp.u_x == opp.u_y && opp.u_y == opp.u_z;
    bool distinct = opp.u_x != opp.u_y && opp.u_y != opp.u_z && opp.u_x != opp.u_z;
    if ((n == 4 && !coincide) || (n >= 5 && !distinct))
        throw NotFourConnectedError("opposing vertices violate the 4-connected pattern",
                                    {opp.u_x, opp.u_y, opp.u_z});
    return opp;
}

InnerDecomposition decompose_inner(const Triangulation& t, std::array<int, 3> outer) {
    OpposingVertices opp = opposing_vertices(t, outer);
    DecompositionSearch search(t, outer, opp);
    if (!search.run())
        throw SearchExhaustedError(
            "no forest decomposition found; the input cannot be a 4-connected "
            "triangulation");

    InnerDecomposition d;
    d.outer = outer;
    d.opp = opp;
    d.k4 = t.vertex_count() == 4;
    int n = t.vertex_count();
    auto [x, y, z] = outer;

    // Path order: walk the X edges from x.
    std::vector<std::vector<int>> xadj(n);
    for (int e : search.bucket_of_edges(0)) {
        xadj[search.edge(e).u].push_back(search.edge(e).v);
        xadj[search.edge(e).v].push_back(search.edge(e).u);
    }
    d.fx_path.push_back(x);
    int prev = -1, cur = x;
    while (true) {
        int nxt = -1;
        for (int w : xadj[cur])
            if (w != prev) nxt = w;
        if (nxt == -1) break;
        d.fx_path.push_back(nxt);
        prev = cur;
        cur = nxt;
    }

    std::vector<std::pair<int, int>> ey, ez_cut;
    for (int e : search.bucket_of_edges(1)) ey.emplace_back(search.edge(e).u, search.edge(e).v);
    for (int e : search.bucket_of_edges(2)) {
        auto rec = search.edge(e);
        if (edge_key(rec.u, rec.v) == edge_key(z, opp.u_y)) continue;  // T1/T2 cut
        ez_cut.emplace_back(rec.u, rec.v);
    }
    d.fy_parent = parents_by_bfs(n, ey, {y});
    d.fz_parent = parents_by_bfs(n, ez_cut, {opp.u_y, z, x});

    auto report = verify_inner(t, outer, d);
    if (!report.all_ok())
        throw InternalError("decomposition certification failed: " + report.detail);
    return d;
}

InnerLemmaReport verify_inner(const Triangulation& t, std::array<int, 3> outer,
                              const InnerDecomposition& d) {
    InnerLemmaReport rep;
    const Graph& g = t.graph();
    int n = t.vertex_count();
    auto [x, y, z] = outer;
    auto fail = [&rep](bool& flag, const std::string& why) {
        flag = false;
        if (!rep.detail.empty()) rep.detail += "; ";
        rep.detail += why;
    };

    // Opposing vertices recomputed from scratch; nothing of d is trusted.
    int ux = -1, uy = -1;
    for (int w : g.neighbors(y))
        if (w != x && g.has_edge(z, w)) ux = w;
    for (int w : g.neighbors(x))
        if (w != y && g.has_edge(z, w)) uy = w;

    auto ex = d.edges_x();
    auto ey = d.edges_y();
    auto ez = d.edges_z();

    rep.partition_ok = true;
    std::vector<std::pair<int, int>> inner;
    std::set<std::pair<int, int>> outer_edges{edge_key(x, y), edge_key(y, z), edge_key(x, z)};
    for (auto [u, v] : g.edges())
        if (!outer_edges.count({u, v})) inner.push_back({u, v});
    std::vector<std::pair<int, int>> all;
    all.insert(all.end(), ex.begin(), ex.end());
    all.insert(all.end(), ey.begin(), ey.end());
    all.insert(all.end(), ez.begin(), ez.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        fail(rep.partition_ok, "an edge appears in two forests");
    for (auto [u, v] : all)
        if (!g.has_edge(u, v)) fail(rep.partition_ok, "listed edge is not in the graph");
    if (all != inner) fail(rep.partition_ok, "forests do not partition the inner edges");

    // F_x: Hamiltonian path of G-{y,z} from x to u_x.
    rep.path_ok = true;
    const auto& p = d.fx_path;
    if (p.empty() || p.front() != x) fail(rep.path_ok, "path does not start at x");
    if (p.empty() || p.back() != ux) fail(rep.path_ok, "path does not end at u_x");
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= n || seen[p[i]] || p[i] == y || p[i] == z) {
            fail(rep.path_ok, "path repeats or leaves G-{y,z}");
            break;
        }
        seen[p[i]] = 1;
        if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1])) {
            fail(rep.path_ok, "path uses a non-edge");
            break;
        }
    }
    if (static_cast<int>(p.size()) != n - 2)
        fail(rep.path_ok, "path is not Hamiltonian in G-{y,z}");

    // F_y: spanning tree of G-{x,z}.
    rep.tree_ok = true;
    {
        RollbackUF uf(n);
        int merges = 0;
        for (auto [u, v] : ey) {
            if (u == x || u == z || v == x || v == z) {
                fail(rep.tree_ok, "F_y leaves G-{x,z}");
                break;
            }
            if (!uf.unite(u, v)) {
                fail(rep.tree_ok, "F_y has a cycle");
                break;
            }
            ++merges;
        }
        if (rep.tree_ok && merges != n - 3) fail(rep.tree_ok, "F_y does not span G-{x,z}");
    }

    // F_z: spanning forest of G-{y}, two trees split between x and z.
    rep.forest_ok = true;
    {
        RollbackUF uf(n);
        bool ok = true;
        for (auto [u, v] : ez) {
            if (u == y || v == y) {
                fail(rep.forest_ok, "F_z touches y");
                ok = false;
                break;
            }
            if (!uf.unite(u, v)) {
                fail(rep.forest_ok, "F_z has a cycle");
                ok = false;
                break;
            }
        }
        if (ok) {
            int comps = 0;
            for (int v = 0; v < n; ++v)
                if (v != y && uf.find(v) == v) ++comps;
            if (comps != 2) fail(rep.forest_ok, "F_z does not consist of exactly two trees");
            if (uf.find(x) == uf.find(z))
                fail(rep.forest_ok, "x and z share an F_z component");
        }
    }

    rep.membership_ok = true;
    if (uy == -1 || !std::binary_search(ex.begin(), ex.end(), edge_key(x, uy)))
        fail(rep.membership_ok, "edge x-u_y is not in F_x");
    if (uy == -1 || !std::binary_search(ez.begin(), ez.end(), edge_key(z, uy)))
        fail(rep.membership_ok, "edge z-u_y is not in F_z");
    return rep;
}

FullDecomposition extend_full(const Triangulation& t, std::array<int, 3> outer,
                              const InnerDecomposition& d) {
    const Graph& g = t.graph();
    int n = t.vertex_count();
    auto [x, y, z] = outer;

    FullDecomposition full;
    full.path.push_back(y);
    full.path.insert(full.path.end(), d.fx_path.begin(), d.fx_path.end());
    full.forest_a = d.fy_parent;
    full.forest_a[z] = y;
    full.forest_b = d.fz_parent;
    full.forest_b[d.opp.u_y] = z;
    full.forest_b[x] = z;

    // Certification: the three edge sets partition E(G), the parent maps are
    // acyclic, and the path is simple.
    std::vector<std::pair<int, int>> all;
    for (std::size_t i = 0; i + 1 < full.path.size(); ++i)
        all.push_back(edge_key(full.path[i], full.path[i + 1]));
    auto add_parents = [&](const std::vector<int>& par) {
        for (int v = 0; v < n; ++v)
            if (par[v] != -1) all.push_back(edge_key(v, par[v]));
    };
    add_parents(full.forest_a);
    add_parents(full.forest_b);
    std::sort(all.begin(), all.end());
    if (all != g.edges())
        throw InternalError("extend_full: path + forests do not partition E(G)");

    for (const auto* par : {&full.forest_a, &full.forest_b}) {
        for (int v = 0; v < n; ++v) {
            int steps = 0, cur = v;
            while (cur != -1 && (*par)[cur] != -1) {
                cur = (*par)[cur];
                if (++steps > n) throw InternalError("extend_full: parent map has a cycle");
            }
        }
    }
    std::vector<char> seen(n, 0);
    for (int v : full.path) {
        if (seen[v]) throw InternalError("extend_full: path revisits a vertex");
        seen[v] = 1;
    }
    return full;
}

std::string decomposition_to_json(const Triangulation& t, const InnerDecomposition& d) {
    auto edges_json = [&](const std::vector<std::pair<int, int>>& es) {
        std::vector<std::pair<int, int>> mapped;
        for (auto [u, v] : es) mapped.push_back(edge_key(t.label_of(u), t.label_of(v)));
        std::sort(mapped.begin(), mapped.end());
        auto arr = nlohmann::ordered_json::array();
        for (auto [u, v] : mapped) arr.push_back({u, v});
        return arr;
    };
    nlohmann::ordered_json j;
    j["outer"] = {t.label_of(d.outer[0]), t.label_of(d.outer[1]), t.label_of(d.outer[2])};
    j["opposing"] = {t.label_of(d.opp.u_x), t.label_of(d.opp.u_y), t.label_of(d.opp.u_z)};
    j["F_x"] = edges_json(d.edges_x());
    j["F_y"] = edges_json(d.edges_y());
    j["F_z"] = edges_json(d.edges_z());
    auto order = nlohmann::ordered_json::array();
    for (int v : d.fx_path) order.push_back(t.label_of(v));
    j["path_order"] = std::move(order);
    return j.dump(2) + "\n";
}

}  // namespace planiv
