#pragma once

#include <cstddef>
#include <vector>

#include "planiv/graph.hpp"

namespace planiv {

/// A face boundary walk. `walk[i] -> walk[i+1]` (cyclically) are the directed
/// edges of the face; vertices may repeat when the graph is not 2-connected.
using FaceWalk = std::vector<int>;

/// Combinatorial plane embedding: a rotation system plus a designated outer
/// face. rotation[v] lists v's neighbors in cyclic order; the face to the
/// "left" of directed edge (u,v) continues with rotation[v]'s successor of u.
struct PlanarEmbedding {
    Graph graph;
    std::vector<std::vector<int>> rotation;
    std::size_t outer_face = 0;

    static constexpr std::size_t no_face = static_cast<std::size_t>(-1);
};

/// Face walks in canonical order: traversal starts from the smallest unused
/// directed edge (u, v), smallest u first, then smallest v. Each directed
/// edge lies on exactly one face. Isolated vertices contribute no face.
std::vector<FaceWalk> faces(const PlanarEmbedding& e);

/// The canonical face containing directed edge (u, v); PlanarEmbedding::no_face
/// if uv is not an edge.
std::size_t face_of_directed_edge(const PlanarEmbedding& e, int u, int v);

/// Checks rotation/graph consistency, face closure, and Euler's relation per
/// connected component. Throws ValidationError on failure.
void validate_embedding(const PlanarEmbedding& e);

/// Deterministic outer-face choice: maximum walk length, ties broken by the
/// lexicographically smallest sorted vertex list.
std::size_t choose_outer_face(const std::vector<FaceWalk>& fs);

}  // namespace planiv
