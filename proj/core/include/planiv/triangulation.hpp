#pragma once

#include <vector>

#include "planiv/embedding.hpp"
#include "planiv/graph.hpp"

namespace planiv {

/// A plane-embedded graph in which every face, the outer one included, is a
/// triangle. `original_vertices` marks which (local) vertex ids belonged to
/// the graph this triangulation was grown from; `labels` optionally names the
/// local ids in some enclosing vertex universe (identity when empty).
struct Triangulation {
    PlanarEmbedding embedding;
    std::vector<int> original_vertices;
    std::vector<int> labels;

    const Graph& graph() const { return embedding.graph; }
    int vertex_count() const { return embedding.graph.vertex_count(); }
    int label_of(int local) const { return labels.empty() ? local : labels[local]; }
};

/// Grows `e` into a triangulation that contains the input graph as an
/// induced subgraph. Only new vertices are added: a connector vertex when the
/// input is disconnected, padding up to 3 vertices, and one stellation vertex
/// per non-triangular face (joined to each distinct vertex of the face's
/// boundary walk) until every face is a triangle.
Triangulation triangulate_induced(const PlanarEmbedding& e);

/// Wraps a graph that is already maximal planar: embeds it and checks that
/// every face is a triangle. Throws ValidationError otherwise.
Triangulation triangulation_from_graph(const Graph& g);

/// True iff the triangulation's graph has no vertex cut of size <= 3.
/// For a triangulation on n >= 5 vertices this is equivalent to having no
/// separating triangle; K4 yields true. Requires n >= 4 and m = 3n-6.
bool is_four_connected(const Graph& g);

/// Inserts a new vertex inside the face bounded by `walk`, joined to the
/// first occurrence of each distinct boundary vertex. Returns the new id.
int stellate(PlanarEmbedding& e, const FaceWalk& walk);

/// Every face has exactly 3 distinct vertices, n >= 3, embedding is valid.
void validate_triangulation(const Triangulation& t);

/// Connected component id per vertex, in discovery order from vertex 0.
std::vector<int> component_ids(const Graph& g);

}  // namespace planiv
