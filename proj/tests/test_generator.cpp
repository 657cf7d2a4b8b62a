#include <doctest.h>

#include "planiv/corpus.hpp"
#include "planiv/errors.hpp"
#include "planiv/generator.hpp"
#include "planiv/graph_io.hpp"
#include "planiv/triangle_split.hpp"

using namespace planiv;

TEST_CASE("splitmix64 reference stream") {
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ull);
    CHECK(rng.next() == 3203168211198807973ull);
    CHECK(rng.next() == 9817491932198370423ull);
    CHECK(rng.next() == 4593380528125082431ull);
    CHECK(rng.next() == 16408922859458223821ull);
    SplitMix64 zero(0);
    CHECK(zero.next() == 16294208416658607535ull);
}

TEST_CASE("n=4 with no flips is K4") {
    Triangulation t = gen_triangulation({1, 4, 0});
    CHECK(t.graph() == corpus::complete(4));
}

TEST_CASE("stacked output peels into K4 pieces") {
    Triangulation t = gen_triangulation({123, 50, 0});
    CHECK(t.vertex_count() == 50);
    for (const auto& s : peel(t).steps) CHECK(s.g_in.vertex_count() == 4);
}

TEST_CASE("every config yields a valid triangulation") {
    for (std::uint64_t seed : {1ull, 9ull, 77ull}) {
        for (int flips : {0, 12, 36}) {
            Triangulation t = gen_triangulation({seed, 12, flips});
            validate_triangulation(t);
            CHECK(t.graph().edge_count() == 3 * 12 - 6);
        }
    }
}

TEST_CASE("generation is deterministic per seed") {
    Graph a = gen_triangulation({42, 30, 30}).graph();
    Graph b = gen_triangulation({42, 30, 30}).graph();
    CHECK(a == b);
    Graph c = gen_triangulation({43, 30, 30}).graph();
    CHECK(!(a == c));
}

TEST_CASE("flips change the graph but keep it simple") {
    Graph flat = gen_triangulation({5, 20, 0}).graph();
    Graph flipped = gen_triangulation({5, 20, 40}).graph();
    CHECK(!(flat == flipped));
    CHECK(flipped.edge_count() == flat.edge_count());
    CHECK(write_graph6(flipped) == write_graph6(parse_graph6(write_graph6(flipped))));
}

TEST_CASE("invalid configs are rejected") {
    CHECK_THROWS_AS(gen_triangulation({1, 3, 0}), ValidationError);
}
