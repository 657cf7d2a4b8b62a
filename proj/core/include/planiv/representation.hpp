#pragma once

#include <map>
#include <string>
#include <vector>

#include "planiv/rational.hpp"

namespace planiv {

/// Closed interval with exact rational endpoints, lo < hi.
struct Interval {
    Rational lo, hi;

    bool operator==(const Interval&) const = default;
    bool contains(const Rational& p) const { return lo <= p && p <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

/// Assignment of at most a few closed intervals to each vertex. Intervals
/// built by this library are pairwise disjoint per vertex and sorted; loaded
/// files may be looser and are reduced on demand.
struct Representation {
    std::map<int, std::vector<Interval>> intervals;

    void add(int vertex, Interval iv);
    bool has_vertex(int v) const { return intervals.count(v) != 0; }
    std::vector<int> vertices() const;
};

/// Union of a vertex's intervals in reduced form: sorted, with touching or
/// overlapping intervals merged.
std::vector<Interval> merged_intervals(const std::vector<Interval>& ivs);

/// Keeps only the listed vertices.
Representation restrict_representation(const Representation& rep,
                                       const std::vector<int>& keep);

/// {"vertices": {"<id>": [["p/q","r/s"], ...], ...}} with rationals in lowest
/// terms ("p" when integral), intervals sorted ascending per vertex.
std::string representation_to_json(const Representation& rep);
Representation representation_from_json(const std::string& text);

}  // namespace planiv
