#pragma once

#include <cstdint>

#include "planiv/triangulation.hpp"

namespace planiv {

/// splitmix64: the reference state-expansion generator. Used everywhere a
/// reproducible stream is needed; `below` reduces by plain modulo.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

struct GeneratorConfig {
    std::uint64_t seed = 0;
    int n = 4;
    int flips = 0;
};

/// Seeded triangulation: grow a stacked triangulation from K4 by inserting
/// vertices into uniformly chosen inner faces, then apply random legal
/// diagonal flips (a flip is legal when the new diagonal is not already an
/// edge and the flipped edge does not bound the outer face).
Triangulation gen_triangulation(const GeneratorConfig& cfg);

}  // namespace planiv
