#pragma once

#include "planiv/embedding.hpp"
#include "planiv/graph.hpp"

namespace planiv {

/// Computes a plane embedding of a simple graph, or throws NonPlanarError.
///
/// The rotation system is deterministic for a fixed input: blocks are
/// embedded by incremental face splitting with all ties broken by vertex id,
/// and the outer face follows choose_outer_face.
PlanarEmbedding planar_embed(const Graph& g);

/// True iff g has a plane embedding.
bool is_planar(const Graph& g);

}  // namespace planiv
