#pragma once

#include "cag/circle.hpp"
#include "cag/graph.hpp"

#include <utility>
#include <vector>

namespace cag {

/// An arc family together with its intersection graph: one vertex per
/// arc, an edge wherever two distinct arcs share a point.
struct ArcModel {
    ArcFamily family;
    UnitGraph graph;
};

/// Throws input_error on an empty family.
ArcModel build(const ArcFamily& fam);

/// A family is NI exactly when its arcs cover the whole circle; only
/// non-NI families admit an interval representation.
bool is_ni(const ArcFamily& fam);

/// Closed rational intervals on the line plus their intersection graph.
/// Vertex order matches the originating arc family.
struct IntervalModel {
    std::vector<std::pair<Rational, Rational>> intervals;
    UnitGraph graph;
};

UnitGraph interval_intersection_graph(const std::vector<std::pair<Rational, Rational>>& intervals);

/// Cuts the circle at an uncovered angle and unrolls each arc into an
/// interval; adjacency is preserved vertex for vertex. Throws
/// input_error when the family covers the circle.
IntervalModel to_interval(const ArcModel& model);

/// True iff no arc's point set contains another's (equal arcs contain
/// each other, so duplicates also fail).
bool is_proper(const ArcFamily& fam);

}  // namespace cag
