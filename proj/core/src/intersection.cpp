#include "cag/intersection.hpp"

#include "cag/errors.hpp"

namespace cag {

ArcModel build(const ArcFamily& fam) {
    if (fam.size() == 0) throw input_error("cannot build model from empty family");
    fam.validate();
    int n = static_cast<int>(fam.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (intersects(fam.arcs[i], fam.arcs[j])) edges.emplace_back(i, j);
        }
    }
    return ArcModel{fam, UnitGraph(n, edges)};
}

bool is_ni(const ArcFamily& fam) {
    return covers_circle(fam);
}

UnitGraph interval_intersection_graph(const std::vector<std::pair<Rational, Rational>>& intervals) {
    int n = static_cast<int>(intervals.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (max(intervals[i].first, intervals[j].first) <=
                min(intervals[i].second, intervals[j].second)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return UnitGraph(n, edges);
}

IntervalModel to_interval(const ArcModel& model) {
    std::optional<Angle> cut = uncovered_point(model.family);
    if (!cut) throw input_error("family covers the circle: no interval representation");
    IntervalModel out;
    for (const Arc& a : model.family.arcs) {
        // Unrolled from the cut point; no arc crosses it, so the image
        // is an honest interval inside (0, 1).
        Rational lo = ccw_delta(*cut, a.start());
        out.intervals.emplace_back(lo, lo + a.length());
    }
    out.graph = interval_intersection_graph(out.intervals);
    return out;
}

bool is_proper(const ArcFamily& fam) {
    int n = static_cast<int>(fam.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && fam.arcs[i].contains_arc(fam.arcs[j])) return false;
        }
    }
    return true;
}

}  // namespace cag
