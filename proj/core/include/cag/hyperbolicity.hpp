#pragma once

#include "cag/graph.hpp"
#include "cag/quarter_value.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace cag {

/// Vertices plus all edge midpoints: the corner set over which geodesic
/// triangles must range for the exact computation of delta.
struct AnchorSet {
    std::vector<GraphPoint> points;  // n vertices first, then m midpoints
};

AnchorSet anchor_set(const UnitGraph& g);

struct GeodesicTriangle {
    std::array<GraphPoint, 3> corners;
    /// Each side as its breakpoint sequence: corner, traversed vertices,
    /// corner. Consecutive breakpoints lie on one edge and the length
    /// telescopes to the corner distance.
    std::array<std::vector<GraphPoint>, 3> sides;
};

struct DeltaReport {
    QuarterValue delta;
    std::optional<GeodesicTriangle> witness;  // a cycle triangle realizing delta
    std::optional<GraphPoint> witness_point;  // point on a side at distance delta
    bool saturated = false;  // geodesic cap hit: delta is a certified lower bound
};

struct DeltaOptions {
    long long geodesic_cap = 10000;  // per anchor pair
};

/// Exact hyperbolicity constant of a connected graph.
///
/// Corners range over the anchor set (bigons included by repeating a
/// corner), sides over all geodesics read off the shortest-path
/// structure, and thinness is evaluated on the quarter grid of each
/// side. With half-grid anchors every per-edge distance function is
/// piecewise linear with quarter-grid breakpoints, so the grid maxima
/// and minima are the true continuum values. The reported witness is a
/// triangle whose three sides form a simple closed curve.
DeltaReport delta_exact(const UnitGraph& g, const DeltaOptions& opts = {});

/// Independent check: corners range over the full quarter grid of every
/// edge, triangles are not required to be cycles, and evaluation runs
/// on the finer 1/8 grid. Refuses graphs with n + m > 30.
QuarterValue delta_oracle(const UnitGraph& g, const DeltaOptions& opts = {});

/// Delta of an arbitrary graph as the maximum over the parts of its
/// biconnected decomposition, each solved independently. Witness points
/// are mapped back to the input graph's vertex numbering.
DeltaReport delta_sup(const UnitGraph& g, const DeltaOptions& opts = {});

/// Cheap two-sided bounds: the upper bound is half the graph diameter;
/// the lower bound is the best of 3/4 (some cycle), 1 (some cycle of
/// length >= 4), 5/4 (some cycle of length >= 5 carrying a vertex of
/// induced degree 2).
std::pair<QuarterValue, QuarterValue> delta_bounds(const UnitGraph& g,
                                                   long long cycle_cap = 100000);

enum class LowDeltaClass {
    tree,             // delta = 0
    all_cycles_len3,  // not a tree, every cycle a triangle: delta = 3/4
    other,
};

LowDeltaClass classify_low_delta(const UnitGraph& g);

}  // namespace cag
