#include <doctest.h>

#include <algorithm>

#include "planiv/corpus.hpp"
#include "planiv/errors.hpp"
#include "planiv/generator.hpp"
#include "planiv/planarity.hpp"

using namespace planiv;

namespace {

std::vector<int> sorted_walk(const FaceWalk& w) {
    std::vector<int> out(w);
    std::sort(out.begin(), out.end());
    return out;
}

void check_face_lengths(const Graph& g, int expected_faces) {
    PlanarEmbedding e = planar_embed(g);
    validate_embedding(e);
    auto fs = faces(e);
    CHECK(static_cast<int>(fs.size()) == expected_faces);
    std::size_t total = 0;
    for (const auto& w : fs) total += w.size();
    CHECK(total == 2 * static_cast<std::size_t>(g.edge_count()));
}

}  // namespace

TEST_CASE("K4 embeds with 4 triangular faces") {
    PlanarEmbedding e = planar_embed(corpus::complete(4));
    validate_embedding(e);
    auto fs = faces(e);
    REQUIRE(fs.size() == 4);
    for (const auto& w : fs) CHECK(w.size() == 3);
    // V - E + F = 4 - 6 + 4 = 2
    CHECK(sorted_walk(fs[e.outer_face]) == std::vector<int>{0, 1, 2});
}

TEST_CASE("triangle has two faces, both on {0,1,2}") {
    PlanarEmbedding e = planar_embed(corpus::complete(3));
    auto fs = faces(e);
    REQUIRE(fs.size() == 2);
    CHECK(sorted_walk(fs[0]) == std::vector<int>{0, 1, 2});
    CHECK(sorted_walk(fs[1]) == std::vector<int>{0, 1, 2});
}

TEST_CASE("C4 has two quadrilateral faces") {
    PlanarEmbedding e = planar_embed(corpus::cycle(4));
    auto fs = faces(e);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].size() == 4);
    CHECK(fs[1].size() == 4);
}

TEST_CASE("a single edge has one face of length 2") {
    Graph g(2);
    g.add_edge(0, 1);
    check_face_lengths(g, 1);
}

TEST_CASE("a path has one face walking both sides") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    PlanarEmbedding e = planar_embed(g);
    validate_embedding(e);
    auto fs = faces(e);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].size() == 4);
}

TEST_CASE("classical non-planar graphs are rejected") {
    CHECK_THROWS_AS(planar_embed(corpus::complete(5)), NonPlanarError);
    Graph k33(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
    CHECK_THROWS_AS(planar_embed(k33), NonPlanarError);
    CHECK_THROWS_AS(planar_embed(corpus::petersen()), NonPlanarError);
    CHECK(!is_planar(corpus::complete(5)));
}

TEST_CASE("K5 minus an edge is planar") {
    Graph g = corpus::complete(5);
    Graph h(5);
    for (auto [u, v] : g.edges())
        if (!(u == 0 && v == 1)) h.add_edge(u, v);
    validate_embedding(planar_embed(h));
}

TEST_CASE("octahedron and icosahedron embed as triangulations") {
    check_face_lengths(corpus::octahedron(), 8);
    check_face_lengths(corpus::icosahedron(), 20);
    for (const auto& w : faces(planar_embed(corpus::icosahedron()))) CHECK(w.size() == 3);
}

TEST_CASE("embedding is deterministic") {
    Graph g = gen_triangulation({99, 24, 30}).graph();
    PlanarEmbedding a = planar_embed(g);
    PlanarEmbedding b = planar_embed(g);
    CHECK(a.rotation == b.rotation);
    CHECK(a.outer_face == b.outer_face);
}

TEST_CASE("disconnected graphs embed with per-component Euler") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    PlanarEmbedding e = planar_embed(g);
    validate_embedding(e);
    CHECK(faces(e).size() == 4);
}

TEST_CASE("cut vertices are handled") {
    Graph bowtie(5);
    bowtie.add_edge(0, 1);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(2, 0);
    bowtie.add_edge(2, 3);
    bowtie.add_edge(3, 4);
    bowtie.add_edge(4, 2);
    PlanarEmbedding e = planar_embed(bowtie);
    validate_embedding(e);
    CHECK(faces(e).size() == 3);
}

TEST_CASE("generator output always embeds") {
    for (std::uint64_t seed : {4ull, 5ull, 6ull, 7ull}) {
        Graph g = gen_triangulation({seed, 21, 21}).graph();
        PlanarEmbedding e = planar_embed(g);
        validate_embedding(e);
        for (const auto& w : faces(e)) CHECK(w.size() == 3);
    }
}

TEST_CASE("random subgraphs of planar graphs always embed") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 12; ++trial) {
        Graph full = gen_triangulation({rng.next(), 24, 24}).graph();
        Graph g(full.vertex_count());
        for (auto [u, v] : full.edges())
            if (rng.below(4) != 0) g.add_edge(u, v);  // drop ~1/4 of the edges
        validate_embedding(planar_embed(g));
    }
}

TEST_CASE("subdivisions of K5 and K3,3 are rejected") {
    auto subdivide_all = [](const Graph& g) {
        Graph out(g.vertex_count() + g.edge_count());
        int next = g.vertex_count();
        for (auto [u, v] : g.edges()) {
            out.add_edge(u, next);
            out.add_edge(next, v);
            ++next;
        }
        return out;
    };
    CHECK_THROWS_AS(planar_embed(subdivide_all(corpus::complete(5))), NonPlanarError);
    Graph k33(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
    CHECK_THROWS_AS(planar_embed(subdivide_all(k33)), NonPlanarError);
}
