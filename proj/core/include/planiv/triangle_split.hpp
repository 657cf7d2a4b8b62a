#pragma once

#include <array>
#include <string>
#include <vector>

#include "planiv/triangulation.hpp"

namespace planiv {

/// A 3-clique of a triangulation together with the set of vertices strictly
/// inside it (with respect to the embedding and its outer face). Both fields
/// use the owning triangulation's label space and are sorted ascending.
struct TriangleRef {
    std::array<int, 3> vertices{};
    std::vector<int> interior;
};

/// The two sides of a split along a non-empty triangle delta: g_out lives on
/// V - interior, g_in on delta + interior with delta as its outer face.
/// Piece labels carry the original vertex names.
struct SplitResult {
    Triangulation g_out;
    Triangulation g_in;
    TriangleRef delta;
};

/// Every 3-clique with a non-empty interior, sorted by vertex triple.
/// The outer triangle counts (its interior is everything else) when n > 3.
std::vector<TriangleRef> find_nonempty_triangles(const Triangulation& t);

/// A candidate whose interior is inclusion-minimal; ties broken by the
/// lexicographically smallest vertex triple. Throws NoSeparatorError when
/// the list is empty.
TriangleRef select_minimal(const std::vector<TriangleRef>& candidates);

/// Splits t along delta. Throws MinimalityViolationError when the inner
/// piece fails the 4-connectivity that a minimal interior guarantees.
SplitResult split(const Triangulation& t, const TriangleRef& delta);

/// The full peeling: repeatedly split off a minimal non-empty triangle of
/// the current outer part until only the outer triangle remains.
struct PeelingSchedule {
    std::vector<SplitResult> steps;
    Triangulation base;  // the final 3-vertex outer triangle
};

PeelingSchedule peel(const Triangulation& t);

/// Schedule as JSON, for `decompose --schedule`.
std::string schedule_to_json(const PeelingSchedule& schedule);

}  // namespace planiv
