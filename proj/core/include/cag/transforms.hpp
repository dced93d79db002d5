#pragma once

#include "cag/graph.hpp"
#include "cag/hyperbolicity.hpp"
#include "cag/intersection.hpp"
#include "cag/quarter_value.hpp"

#include <cstdint>
#include <optional>

namespace cag {

/// Same vertex set, complementary edge set.
UnitGraph complement(const UnitGraph& g);

/// Line graph plus the mapping data: line vertex i corresponds to base
/// edge i (in base.edges() order) and maps to that edge's midpoint.
/// Isolated base vertices have no incident edge and simply vanish.
struct LineModel {
    UnitGraph base;
    UnitGraph line;

    GraphPoint base_midpoint(int line_vertex) const {
        auto [u, v] = base.edges()[line_vertex];
        return GraphPoint::on_edge(u, v, Rational(1, 2));
    }
};

/// Throws input_error when the base graph has no edges.
LineModel line_graph(const UnitGraph& g);

/// Distances between line vertices equal base distances between the
/// corresponding edge midpoints. Checks all pairs when samples == 0,
/// otherwise `samples` seeded random pairs.
bool check_h_isometry(const LineModel& lm, int samples = 0, uint64_t seed = 1);

struct ComplementBounds {
    QuarterValue lower, upper;
    QuarterValue delta_complement;
    bool generic_fallback = false;  // rho in {1,2,3}: only the diameter bound applies
};

/// Bounds for the complement of the represented graph, selected by rho,
/// with the computed delta of the complement checked against them.
ComplementBounds complement_bounds(const ArcModel& model, const DeltaOptions& opts = {});

/// Nordhaus-Gaddum style sum and product inequalities for delta of the
/// graph and its complement. Precondition: rho is 0, 4, or > 4.
bool nordhaus_gaddum_check(const ArcModel& model, const DeltaOptions& opts = {});

struct LineBounds {
    QuarterValue lower, upper;
    QuarterValue delta_line;
};

/// Bounds for the line graph of the represented graph, selected by rho
/// and intersected with the relative bounds in terms of delta of the
/// base (plus the chordal improvement), with delta of the line graph
/// checked against them. Throws input_error when the base has no edge.
LineBounds line_bounds(const ArcModel& model, const DeltaOptions& opts = {});

/// For an (n-3)-regular graph on n >= 5 vertices, delta is 1 when the
/// complement is a disjoint union of triangles and 5/4 otherwise;
/// nullopt when the shape precondition fails.
std::optional<Rational> regular_delta(const UnitGraph& g);

/// Vertex pattern behind the complement bounds: two vertices sharing
/// two non-adjacent common neighbors. For rho > 4 none such pair may be
/// non-adjacent.
bool adjacency_forced_by_common_neighbors(const UnitGraph& g);

/// Arc pattern: whenever non-adjacent u, v share non-adjacent common
/// neighbors v1, v2, the four arcs cover the circle.
bool covering_forced_by_common_neighbors(const ArcModel& model);

}  // namespace cag
