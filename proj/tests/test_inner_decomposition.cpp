#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "planiv/corpus.hpp"
#include "planiv/errors.hpp"
#include "planiv/generator.hpp"
#include "planiv/inner_decomposition.hpp"
#include "planiv/triangle_split.hpp"

using namespace planiv;

namespace {

Triangulation named(const Graph& g) { return triangulation_from_graph(g); }

std::array<int, 3> canonical_outer(const Triangulation& t) {
    auto walk = faces(t.embedding)[t.embedding.outer_face];
    std::array<int, 3> outer{walk[0], walk[1], walk[2]};
    std::sort(outer.begin(), outer.end());
    return outer;
}

using EdgeSet = std::set<std::pair<int, int>>;

EdgeSet as_set(const std::vector<std::pair<int, int>>& es) {
    return EdgeSet(es.begin(), es.end());
}

// Test-local re-implementation of the lemma conditions, used as the oracle
// for the exhaustive octahedron scan. Deliberately kept elementary.
bool oracle_conditions(const Graph& g, int x, int y, int z, int ux, int uy,
                       const EdgeSet& fx, const EdgeSet& fy, const EdgeSet& fz) {
    int n = g.vertex_count();
    // F_x: spanning path of V-{y,z} from x to u_x.
    std::vector<int> deg(n, 0);
    for (auto [u, v] : fx) {
        if (u == y || u == z || v == y || v == z) return false;
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < n; ++v) {
        if (v == y || v == z) continue;
        int want = (v == x || v == ux) ? 1 : 2;
        if (x == ux) return false;
        if (deg[v] != want) return false;
    }
    // connectivity of fx
    {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : fx) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::vector<char> seen(n, 0);
        std::vector<int> stack{x};
        seen[x] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n - 2) return false;
    }
    // F_y: spanning tree of V-{x,z}.
    {
        std::vector<int> uf(n);
        for (int i = 0; i < n; ++i) uf[i] = i;
        auto find = [&](int v) {
            while (uf[v] != v) v = uf[v];
            return v;
        };
        int merges = 0;
        for (auto [u, v] : fy) {
            if (u == x || u == z || v == x || v == z) return false;
            int a = find(u), b = find(v);
            if (a == b) return false;
            uf[a] = b;
            ++merges;
        }
        if (merges != n - 3) return false;
    }
    // F_z: two trees on V-{y}, x and z separated.
    {
        std::vector<int> uf(n);
        for (int i = 0; i < n; ++i) uf[i] = i;
        auto find = [&](int v) {
            while (uf[v] != v) v = uf[v];
            return v;
        };
        for (auto [u, v] : fz) {
            if (u == y || v == y) return false;
            int a = find(u), b = find(v);
            if (a == b) return false;
            uf[a] = b;
        }
        int comps = 0;
        for (int v = 0; v < n; ++v)
            if (v != y && find(v) == v) ++comps;
        if (comps != 2 || find(x) == find(z)) return false;
    }
    return fx.count(edge_key(x, uy)) && fz.count(edge_key(z, uy));
}

}  // namespace

TEST_CASE("opposing vertices of K4 coincide") {
    Triangulation t = named(corpus::complete(4));
    auto opp = opposing_vertices(t, {0, 1, 2});
    CHECK(opp.u_x == 3);
    CHECK(opp.u_y == 3);
    CHECK(opp.u_z == 3);
}

TEST_CASE("opposing vertices of the octahedron by direct adjacency") {
    // outer (0,1,2), inner (3,4,5), missing edges 0-3, 1-4, 2-5
    Triangulation t = named(corpus::octahedron());
    auto opp = opposing_vertices(t, {0, 1, 2});
    CHECK(opp.u_x == 3);  // adjacent to both 1 and 2
    CHECK(opp.u_y == 4);  // adjacent to both 0 and 2
    CHECK(opp.u_z == 5);  // adjacent to both 0 and 1
}

TEST_CASE("non-4-connected input is diagnosed") {
    Triangulation t = named(corpus::five_stack());
    CHECK_THROWS_AS(opposing_vertices(t, {0, 1, 2}), NotFourConnectedError);
    try {
        opposing_vertices(t, {0, 1, 2});
    } catch (const NotFourConnectedError& e) {
        CHECK(e.witness[0] == 0);
        CHECK(e.witness[1] == 1);
    }
    CHECK_THROWS_AS(decompose_inner(t, {0, 1, 2}), NotFourConnectedError);
    CHECK_THROWS_AS(opposing_vertices(named(corpus::octahedron()), {0, 1, 3}),
                    ValidationError);
}

TEST_CASE("K4 decomposition is the forced one") {
    Triangulation t = named(corpus::complete(4));
    InnerDecomposition d = decompose_inner(t, {0, 1, 2});
    CHECK(d.k4);
    CHECK(d.fx_path == std::vector<int>{0, 3});
    CHECK(as_set(d.edges_x()) == EdgeSet{{0, 3}});
    CHECK(as_set(d.edges_y()) == EdgeSet{{1, 3}});
    CHECK(as_set(d.edges_z()) == EdgeSet{{2, 3}});
    CHECK(verify_inner(t, {0, 1, 2}, d).all_ok());
}

TEST_CASE("octahedron decomposition is certified with cardinalities 3/3/3") {
    Triangulation t = named(corpus::octahedron());
    InnerDecomposition d = decompose_inner(t, {0, 1, 2});
    auto rep = verify_inner(t, {0, 1, 2}, d);
    CHECK(rep.all_ok());
    CHECK(d.edges_x().size() == 3);
    CHECK(d.edges_y().size() == 3);
    CHECK(d.edges_z().size() == 3);
    CHECK(d.fx_path.size() == 4);
    CHECK(d.fx_path.front() == 0);
    CHECK(d.fx_path[1] == d.opp.u_y);  // the forced first path edge x-u_y

    // The found solution also passes the test-local oracle.
    CHECK(oracle_conditions(t.graph(), 0, 1, 2, d.opp.u_x, d.opp.u_y, as_set(d.edges_x()),
                            as_set(d.edges_y()), as_set(d.edges_z())));
}

TEST_CASE("exhaustive 3^9 label scan of the octahedron finds a valid decomposition") {
    Triangulation t = named(corpus::octahedron());
    const Graph& g = t.graph();
    int x = 0, y = 1, z = 2, ux = 3, uy = 4;
    std::vector<std::pair<int, int>> inner;
    for (auto [u, v] : g.edges())
        if (!((u == 0 || u == 1 || u == 2) && (v == 0 || v == 1 || v == 2)))
            inner.push_back({u, v});
    REQUIRE(inner.size() == 9);
    long valid = 0;
    for (long mask = 0; mask < 19683; ++mask) {  // 3^9 labelings
        long m = mask;
        EdgeSet fx, fy, fz;
        for (const auto& e : inner) {
            switch (m % 3) {
                case 0: fx.insert(e); break;
                case 1: fy.insert(e); break;
                default: fz.insert(e); break;
            }
            m /= 3;
        }
        if (oracle_conditions(g, x, y, z, ux, uy, fx, fy, fz)) ++valid;
    }
    CHECK(valid > 0);
}

TEST_CASE("verify_inner rejects broken decompositions") {
    Triangulation t = named(corpus::complete(4));
    InnerDecomposition d = decompose_inner(t, {0, 1, 2});

    // Swap F_y and F_z: both leave their vertex domains.
    InnerDecomposition swapped = d;
    std::swap(swapped.fy_parent, swapped.fz_parent);
    auto rep = verify_inner(t, {0, 1, 2}, swapped);
    CHECK(!rep.all_ok());

    // Drop the tail of the path: no longer Hamiltonian.
    Triangulation octa = named(corpus::octahedron());
    InnerDecomposition od = decompose_inner(octa, {0, 1, 2});
    InnerDecomposition truncated = od;
    truncated.fx_path.pop_back();
    auto rep2 = verify_inner(octa, {0, 1, 2}, truncated);
    CHECK(!rep2.path_ok);
    CHECK(!rep2.all_ok());
}

TEST_CASE("icosahedron decomposes quickly") {
    Triangulation t = named(corpus::icosahedron());
    auto outer = canonical_outer(t);
    auto t0 = std::chrono::steady_clock::now();
    InnerDecomposition d = decompose_inner(t, outer);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(verify_inner(t, outer, d).all_ok());
    CHECK(d.edges_x().size() == 9);
    CHECK(secs < 5.0);
}

TEST_CASE("extend_full on K4 and the octahedron") {
    Triangulation t = named(corpus::complete(4));
    InnerDecomposition d = decompose_inner(t, {0, 1, 2});
    FullDecomposition full = extend_full(t, {0, 1, 2}, d);
    CHECK(full.path == std::vector<int>{1, 0, 3});
    EdgeSet fa, fb;
    for (int v = 0; v < 4; ++v) {
        if (full.forest_a[v] != -1) fa.insert(edge_key(v, full.forest_a[v]));
        if (full.forest_b[v] != -1) fb.insert(edge_key(v, full.forest_b[v]));
    }
    CHECK(fa == EdgeSet{{1, 3}, {1, 2}});
    CHECK(fb == EdgeSet{{2, 3}, {0, 2}});

    Triangulation octa = named(corpus::octahedron());
    InnerDecomposition od = decompose_inner(octa, {0, 1, 2});
    FullDecomposition ofull = extend_full(octa, {0, 1, 2}, od);
    CHECK(ofull.path.size() == 5);  // 4 path edges including xy
    int fa_edges = 0, fb_edges = 0;
    for (int v = 0; v < 6; ++v) {
        fa_edges += ofull.forest_a[v] != -1;
        fb_edges += ofull.forest_b[v] != -1;
    }
    CHECK(fa_edges == 4);
    CHECK(fb_edges == 4);
}

TEST_CASE("extend_full certifies over generated 4-connected pieces") {
    for (std::uint64_t seed : {41ull, 42ull, 43ull}) {
        Triangulation t = gen_triangulation({seed, 16, 48});
        PeelingSchedule schedule = peel(t);
        for (const auto& s : schedule.steps) {
            auto outer = canonical_outer(s.g_in);
            InnerDecomposition d = decompose_inner(s.g_in, outer);
            CHECK_NOTHROW(extend_full(s.g_in, outer, d));
        }
    }
}

TEST_CASE("decomposition JSON is deterministic") {
    Triangulation t = named(corpus::octahedron());
    auto a = decomposition_to_json(t, decompose_inner(t, {0, 1, 2}));
    auto b = decomposition_to_json(t, decompose_inner(t, {0, 1, 2}));
    CHECK(a == b);
    CHECK(a.find("\"F_x\"") != std::string::npos);
    CHECK(a.find("\"path_order\"") != std::string::npos);
}
