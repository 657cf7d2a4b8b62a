// Exhaustive small-instance cross check: every labeled 4-connected
// triangulation on up to 7 vertices (enumerated from scratch) must admit a
// certified inner decomposition.

#include <cstdio>
#include <vector>

#include "planiv/errors.hpp"
#include "planiv/graph.hpp"
#include "planiv/inner_decomposition.hpp"
#include "planiv/planarity.hpp"
#include "planiv/triangulation.hpp"

using namespace planiv;

namespace {

int failures = 0;

void expect(bool ok, const char* what) {
    if (!ok) {
        ++failures;
        std::printf("FAIL %s\n", what);
    }
}

// All graphs on n labeled vertices with exactly 3n-6 edges that embed with
// triangle faces only.
void scan(int n, long& triangulations, long& four_connected) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    int m = 3 * n - 6;
    int total = static_cast<int>(slots.size());

    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    while (true) {
        Graph g(n);
        for (int i : pick) g.add_edge(slots[i].first, slots[i].second);
        bool min_deg_ok = true;
        for (int v = 0; v < n; ++v) min_deg_ok = min_deg_ok && g.degree(v) >= 3;
        if (min_deg_ok) {
            try {
                Triangulation t = triangulation_from_graph(g);
                ++triangulations;
                if (is_four_connected(g)) {
                    ++four_connected;
                    auto walk = faces(t.embedding)[t.embedding.outer_face];
                    std::array<int, 3> outer{walk[0], walk[1], walk[2]};
                    std::sort(outer.begin(), outer.end());
                    InnerDecomposition d = decompose_inner(t, outer);
                    expect(verify_inner(t, outer, d).all_ok(),
                           "decomposition certification");
                }
            } catch (const ValidationError&) {
            } catch (const NonPlanarError&) {
            }
        }
        // next combination
        int i = m - 1;
        while (i >= 0 && pick[i] == total - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

int main() {
    long tri = 0, fc = 0;
    scan(4, tri, fc);
    expect(tri == 1 && fc == 1, "n=4: K4 alone");

    tri = fc = 0;
    scan(5, tri, fc);
    expect(fc == 0, "n=5: no 4-connected triangulation exists");
    std::printf("n=5: %ld labeled triangulations, %ld four-connected\n", tri, fc);

    tri = fc = 0;
    scan(6, tri, fc);
    expect(fc == 15, "n=6: the 15 labeled octahedra");
    std::printf("n=6: %ld labeled triangulations, %ld four-connected\n", tri, fc);

    tri = fc = 0;
    scan(7, tri, fc);
    expect(fc == 252, "n=7: the 252 labeled pentagonal bipyramids");
    std::printf("n=7: %ld labeled triangulations, %ld four-connected\n", tri, fc);

    if (failures == 0) std::printf("exhaustive scan: all decompositions certified\n");
    return failures == 0 ? 0 : 1;
}
