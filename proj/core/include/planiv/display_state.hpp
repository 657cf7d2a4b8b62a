#pragma once

#include <map>
#include <utility>

#include "planiv/rational.hpp"

namespace planiv {

/// Non-empty open interval (lo, hi).
struct OpenPortion {
    Rational lo, hi;
};

/// Book-keeping the builder maintains alongside a growing representation:
/// for every vertex one currently-displayed open portion (covered by that
/// vertex alone), for displayed edges one portion covered by exactly their
/// two endpoints, and the frontier past every endpoint used so far.
///
/// Hosts keep a non-empty residue whenever a child interval is carved out of
/// a portion, so entries are never deleted, only shrunk.
struct DisplayState {
    std::map<int, OpenPortion> vertex_portion;
    std::map<std::pair<int, int>, OpenPortion> edge_portion;
    Rational cursor = 0;
};

}  // namespace planiv
