#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "planiv/triangulation.hpp"

namespace planiv {

/// The inner vertices opposite the outer triangle's corners: u_x is the
/// unique inner vertex adjacent to both y and z, and so on. All three
/// coincide exactly when n = 4.
struct OpposingVertices {
    int u_x, u_y, u_z;
};

/// A partition of the inner edges of a 4-connected triangulation into
///   F_x: a Hamiltonian path of G-{y,z} from x to u_x,
///   F_y: a spanning tree of G-{x,z} rooted at y,
///   F_z: a spanning forest of G-{y} with one tree containing x and one
///        containing z (for K4 the x-side is the one-vertex component).
/// F_z is stored with the edge z-u_y removed, as the three rooted trees
/// T1 (root u_y), T2 (root z), T3 (root x); edges_z() restores that edge.
/// All ids are local to the triangulation this was computed for.
struct InnerDecomposition {
    std::array<int, 3> outer{};  // (x, y, z)
    OpposingVertices opp{};
    std::vector<int> fx_path;    // x, u_y, ..., u_x
    std::vector<int> fy_parent;  // -1 outside V-{x,z} and at root y
    std::vector<int> fz_parent;  // -1 outside V-{y} and at roots u_y, z, x
    bool k4 = false;

    std::vector<std::pair<int, int>> edges_x() const;
    std::vector<std::pair<int, int>> edges_y() const;
    std::vector<std::pair<int, int>> edges_z() const;
};

/// Per-condition verdict of verify_inner.
struct InnerLemmaReport {
    bool partition_ok = false;
    bool path_ok = false;
    bool tree_ok = false;
    bool forest_ok = false;
    bool membership_ok = false;
    std::string detail;

    bool all_ok() const {
        return partition_ok && path_ok && tree_ok && forest_ok && membership_ok;
    }
};

/// Extension of the inner decomposition to all edges (outer ones included):
/// path = y,x,...,u_x; forest_a = F_y + yz rooted at y; forest_b = F_z + xz
/// rooted at z. Parent maps use -1 at roots and outside the domain.
struct FullDecomposition {
    std::vector<int> path;
    std::vector<int> forest_a;
    std::vector<int> forest_b;
};

/// Computes the opposing vertices; `outer` must name t's outer face.
/// Throws NotFourConnectedError (with a separating-triple witness) if some
/// opposing vertex is not unique.
OpposingVertices opposing_vertices(const Triangulation& t, std::array<int, 3> outer);

/// Finds a decomposition by constrained backtracking over inner-edge labels
/// and certifies it with verify_inner before returning. SearchExhaustedError
/// signals an internal inconsistency: valid inputs always admit one.
InnerDecomposition decompose_inner(const Triangulation& t, std::array<int, 3> outer);

/// Independent condition check on a proposed decomposition; reads only the
/// graph, the outer triple and d's edge sets.
InnerLemmaReport verify_inner(const Triangulation& t, std::array<int, 3> outer,
                              const InnerDecomposition& d);

/// Extends d to a certified decomposition of all edges.
FullDecomposition extend_full(const Triangulation& t, std::array<int, 3> outer,
                              const InnerDecomposition& d);

/// Decomposition as JSON with the triangulation's labels applied.
std::string decomposition_to_json(const Triangulation& t, const InnerDecomposition& d);

}  // namespace planiv
