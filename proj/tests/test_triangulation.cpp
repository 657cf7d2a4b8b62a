#include <doctest.h>

#include <algorithm>

#include "planiv/corpus.hpp"
#include "planiv/errors.hpp"
#include "planiv/generator.hpp"
#include "planiv/planarity.hpp"
#include "planiv/triangulation.hpp"

using namespace planiv;

namespace {

// Nothing but new vertices may be added: the input must come back as the
// induced subgraph on its own ids.
void check_induced(const Graph& in, const Triangulation& t) {
    REQUIRE(static_cast<int>(t.original_vertices.size()) == in.vertex_count());
    for (int u = 0; u < in.vertex_count(); ++u)
        for (int v = u + 1; v < in.vertex_count(); ++v)
            CHECK(t.graph().has_edge(u, v) == in.has_edge(u, v));
}

Triangulation triangulate(const Graph& g) { return triangulate_induced(planar_embed(g)); }

// Independent oracle: 4-connected iff no 3-subset of vertices disconnects.
bool brute_four_connected(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                std::vector<char> removed(n, 0);
                removed[a] = removed[b] = removed[c] = 1;
                int start = -1;
                for (int v = 0; v < n && start == -1; ++v)
                    if (!removed[v]) start = v;
                if (start == -1) continue;
                std::vector<int> stack{start};
                std::vector<char> seen(n, 0);
                seen[start] = 1;
                int reached = 1;
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
                if (reached != n - 3) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("a triangle triangulates to itself") {
    Triangulation t = triangulate(corpus::complete(3));
    CHECK(t.vertex_count() == 3);
    check_induced(corpus::complete(3), t);
}

TEST_CASE("K4 triangulates to itself") {
    Triangulation t = triangulate(corpus::complete(4));
    CHECK(t.vertex_count() == 4);
}

TEST_CASE("C4 gets one new vertex per quadrilateral face") {
    Graph c4 = corpus::cycle(4);
    Triangulation t = triangulate(c4);
    CHECK(t.vertex_count() == 6);
    check_induced(c4, t);  // the two diagonals stay non-edges
    CHECK(t.graph().degree(4) == 4);
    CHECK(t.graph().degree(5) == 4);
}

TEST_CASE("tiny and degenerate inputs") {
    Graph k1(1);
    Triangulation t1 = triangulate(k1);
    CHECK(t1.vertex_count() >= 3);
    check_induced(k1, t1);

    Graph k2(2);
    k2.add_edge(0, 1);
    Triangulation t2 = triangulate(k2);
    check_induced(k2, t2);

    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    check_induced(path, triangulate(path));

    Graph star(5);
    for (int i = 1; i < 5; ++i) star.add_edge(0, i);
    check_induced(star, triangulate(star));

    CHECK_THROWS_AS(triangulate(Graph(0)), ValidationError);
}

TEST_CASE("cut vertices and disconnected inputs stay induced") {
    Graph bowtie(5);
    bowtie.add_edge(0, 1);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(2, 0);
    bowtie.add_edge(2, 3);
    bowtie.add_edge(3, 4);
    bowtie.add_edge(4, 2);
    check_induced(bowtie, triangulate(bowtie));

    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    check_induced(two_edges, triangulate(two_edges));

    Graph isolated(3);
    isolated.add_edge(0, 1);
    check_induced(isolated, triangulate(isolated));
}

TEST_CASE("stellation is deterministic") {
    Graph g = corpus::cycle(6);
    Triangulation a = triangulate(g);
    Triangulation b = triangulate(g);
    CHECK(a.embedding.rotation == b.embedding.rotation);
    CHECK(a.embedding.outer_face == b.embedding.outer_face);
}

TEST_CASE("is_four_connected on the named graphs") {
    CHECK(is_four_connected(corpus::complete(4)));
    CHECK(is_four_connected(corpus::octahedron()));
    CHECK(is_four_connected(corpus::icosahedron()));
    CHECK(!is_four_connected(corpus::five_stack()));
    CHECK_THROWS_AS(is_four_connected(corpus::complete(3)), ValidationError);
    CHECK_THROWS_AS(is_four_connected(corpus::cycle(4)), ValidationError);
}

TEST_CASE("separating-triangle scan agrees with brute-force cuts") {
    std::vector<Graph> graphs{corpus::complete(4), corpus::five_stack(), corpus::octahedron(),
                              corpus::icosahedron()};
    for (std::uint64_t seed : {8ull, 9ull}) {
        graphs.push_back(gen_triangulation({seed, 9, 0}).graph());
        graphs.push_back(gen_triangulation({seed, 9, 18}).graph());
    }
    for (const auto& g : graphs) CHECK(is_four_connected(g) == brute_four_connected(g));
}

TEST_CASE("stacked triangulations are never 4-connected beyond K4") {
    for (int n : {5, 8, 13})
        CHECK(!is_four_connected(gen_triangulation({3, n, 0}).graph()));
}

TEST_CASE("triangulation_from_graph validates") {
    CHECK_NOTHROW(triangulation_from_graph(corpus::octahedron()));
    CHECK_THROWS_AS(triangulation_from_graph(corpus::cycle(4)), ValidationError);
    CHECK_THROWS_AS(triangulation_from_graph(corpus::complete(2)), ValidationError);
}
