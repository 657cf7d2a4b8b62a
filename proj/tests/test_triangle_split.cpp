#include <doctest.h>

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "planiv/corpus.hpp"
#include "planiv/errors.hpp"
#include "planiv/generator.hpp"
#include "planiv/triangle_split.hpp"

using namespace planiv;

namespace {

Triangulation named(const Graph& g) { return triangulation_from_graph(g); }

}  // namespace

TEST_CASE("a bare triangle has no non-empty triangle") {
    CHECK(find_nonempty_triangles(named(corpus::complete(3))).empty());
    CHECK_THROWS_AS(select_minimal({}), NoSeparatorError);
}

TEST_CASE("K4: only the outer triangle is non-empty") {
    auto refs = find_nonempty_triangles(named(corpus::complete(4)));
    REQUIRE(refs.size() == 1);
    CHECK(refs[0].vertices == std::array<int, 3>{0, 1, 2});
    CHECK(refs[0].interior == std::vector<int>{3});
}

TEST_CASE("five-vertex stack: triangles, selection, split") {
    Triangulation t = named(corpus::five_stack());
    auto refs = find_nonempty_triangles(t);
    REQUIRE(refs.size() == 2);
    CHECK(refs[0].vertices == std::array<int, 3>{0, 1, 2});
    CHECK(refs[0].interior == std::vector<int>{3, 4});
    CHECK(refs[1].vertices == std::array<int, 3>{0, 1, 3});
    CHECK(refs[1].interior == std::vector<int>{4});

    TriangleRef delta = select_minimal(refs);
    CHECK(delta.vertices == std::array<int, 3>{0, 1, 3});

    SplitResult res = split(t, delta);
    CHECK(res.g_out.labels == std::vector<int>{0, 1, 2, 3});
    CHECK(res.g_in.labels == std::vector<int>{0, 1, 3, 4});
    CHECK(res.g_out.graph().edge_count() == 6);  // K4 either side
    CHECK(res.g_in.graph().edge_count() == 6);

    // Splitting on the non-minimal outer triangle must be rejected.
    CHECK_THROWS_AS(split(t, refs[0]), MinimalityViolationError);
}

TEST_CASE("K4 splits into its outer triangle and itself") {
    Triangulation t = named(corpus::complete(4));
    auto refs = find_nonempty_triangles(t);
    SplitResult res = split(t, refs[0]);
    CHECK(res.g_out.vertex_count() == 3);
    CHECK(res.g_out.labels == std::vector<int>{0, 1, 2});
    CHECK(res.g_in.vertex_count() == 4);
    CHECK(res.g_in.graph().edge_count() == 6);
}

TEST_CASE("select_minimal tie-break is the smallest triple") {
    TriangleRef a{{2, 5, 7}, {9}};
    TriangleRef b{{1, 5, 7}, {8}};
    CHECK(select_minimal({a, b}).vertices == std::array<int, 3>{1, 5, 7});
    CHECK(select_minimal({a}).vertices == std::array<int, 3>{2, 5, 7});
}

TEST_CASE("octahedron and icosahedron have only the outer non-empty triangle") {
    auto octa = find_nonempty_triangles(named(corpus::octahedron()));
    REQUIRE(octa.size() == 1);
    CHECK(octa[0].interior.size() == 3);
    auto icosa = find_nonempty_triangles(named(corpus::icosahedron()));
    REQUIRE(icosa.size() == 1);
    CHECK(icosa[0].interior.size() == 9);
}

TEST_CASE("peeling a stacked triangulation yields K4 pieces only") {
    Triangulation t = gen_triangulation({21, 30, 0});
    PeelingSchedule schedule = peel(t);
    CHECK(schedule.steps.size() == 27);
    for (const auto& s : schedule.steps) CHECK(s.g_in.vertex_count() == 4);
    CHECK(schedule.base.vertex_count() == 3);
}

TEST_CASE("peeling invariants over generated inputs") {
    for (std::uint64_t seed : {31ull, 32ull}) {
        Triangulation t = gen_triangulation({seed, 18, 24});
        PeelingSchedule schedule = peel(t);

        std::set<int> interiors_seen;
        int expected_n = t.vertex_count();
        for (const auto& s : schedule.steps) {
            CHECK(s.g_out.vertex_count() + s.g_in.vertex_count() == expected_n + 3);
            expected_n = s.g_out.vertex_count();
            CHECK(is_four_connected(s.g_in.graph()));
            for (int v : s.delta.interior) {
                CHECK(!interiors_seen.count(v));
                interiors_seen.insert(v);
            }
            // delta's edges live in both pieces
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    auto has = [&](const Triangulation& piece) {
                        int a = -1, b = -1;
                        for (int v = 0; v < piece.vertex_count(); ++v) {
                            if (piece.label_of(v) == s.delta.vertices[i]) a = v;
                            if (piece.label_of(v) == s.delta.vertices[j]) b = v;
                        }
                        return a != -1 && b != -1 && piece.graph().has_edge(a, b);
                    };
                    CHECK(has(s.g_out));
                    CHECK(has(s.g_in));
                }
        }
        // every vertex is either in the final triangle or exactly one interior
        CHECK(interiors_seen.size() + 3 == static_cast<std::size_t>(t.vertex_count()));
    }
}

TEST_CASE("schedule serializes to JSON") {
    Triangulation t = named(corpus::five_stack());
    auto j = nlohmann::json::parse(schedule_to_json(peel(t)));
    REQUIRE(j.contains("steps"));
    CHECK(j["steps"].size() == 2);
    CHECK(j["base"].size() == 3);
    CHECK(j["steps"][0].contains("delta"));
    CHECK(j["steps"][0].contains("interior"));
    CHECK(j["steps"][0].contains("piece_edges"));
}
