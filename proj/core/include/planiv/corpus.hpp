#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planiv/graph.hpp"

namespace planiv::corpus {

Graph complete(int n);
Graph cycle(int n);

/// K4 plus one vertex stacked into the face 0,1,3: outer 0,1,2, vertex 3
/// inside it, vertex 4 inside 0,1,3.
Graph five_stack();

/// K6 minus the perfect matching 0-3, 1-4, 2-5.
Graph octahedron();

/// The icosahedron: poles 0 and 11, upper ring 1..5, lower ring 6..10.
Graph icosahedron();

Graph petersen();

struct GenInstance {
    std::uint64_t seed;
    int n;
    int flips;
};

/// The 200 seeded generator configurations used by the acceptance suite:
/// n cycles through 4..60 and flips through {0, n, 3n}.
std::vector<GenInstance> generated_corpus();

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the whole acceptance corpus and returns one result per criterion.
std::vector<CriterionResult> run_acceptance();

}  // namespace planiv::corpus
