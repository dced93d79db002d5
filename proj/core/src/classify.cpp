#include "cag/classify.hpp"

#include "cag/errors.hpp"

#include <algorithm>

namespace cag {

const char* interval_property_name(IntervalProperty p) {
    switch (p) {
        case IntervalProperty::P0: return "P0";
        case IntervalProperty::P3_4: return "P3_4";
        case IntervalProperty::P1: return "P1";
        case IntervalProperty::P5_4: return "P5_4";
        case IntervalProperty::P3_2: return "P3_2";
    }
    return "?";
}

Rational interval_property_delta(IntervalProperty p) {
    switch (p) {
        case IntervalProperty::P0: return Rational(0);
        case IntervalProperty::P3_4: return Rational(3, 4);
        case IntervalProperty::P1: return Rational(1);
        case IntervalProperty::P5_4: return Rational(5, 4);
        case IntervalProperty::P3_2: return Rational(3, 2);
    }
    return Rational(0);
}

const char* tri_state_name(TriState t) {
    switch (t) {
        case TriState::holds: return "holds";
        case TriState::fails: return "fails";
        case TriState::not_applicable: return "not_applicable";
    }
    return "?";
}

namespace {

using Interval = std::pair<Rational, Rational>;

bool ivals_meet(const Interval& a, const Interval& b) {
    return max(a.first, b.first) <= min(a.second, b.second);
}

bool triple_meets(const Interval& a, const Interval& b, const Interval& c) {
    return max(max(a.first, b.first), c.first) <= min(min(a.second, b.second), c.second);
}

bool zero_intersection(const std::vector<Interval>& iv) {
    int n = static_cast<int>(iv.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                if (triple_meets(iv[i], iv[j], iv[k])) return false;
            }
        }
    }
    return true;
}

// Quantified over distinct 4-tuples, the condition collapses to: no
// pairwise intersection meets two further intervals.
bool three_quarter_intersection(const std::vector<Interval>& iv) {
    if (zero_intersection(iv)) return false;
    int n = static_cast<int>(iv.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!ivals_meet(iv[i], iv[j])) continue;
            Interval common{max(iv[i].first, iv[j].first), min(iv[i].second, iv[j].second)};
            int hits = 0;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (ivals_meet(common, iv[k])) ++hits;
            }
            if (hits >= 2) return false;
        }
    }
    return true;
}

bool three_half_intersection(const IntervalModel& m, long long cycle_cap) {
    CycleList cycles = enumerate_cycles(m.graph, cycle_cap);
    if (cycles.saturated) throw saturation_error("cycle cap hit while testing the 3/2 property");
    for (const auto& cycle : cycles.cycles) {
        for (size_t i = 0; i < cycle.size(); ++i) {
            for (size_t j = i + 1; j < cycle.size(); ++j) {
                const Interval& a = m.intervals[cycle[i]];
                const Interval& b = m.intervals[cycle[j]];
                if (ivals_meet(a, b)) continue;
                bool bridged = false;
                for (const Interval& w : m.intervals) {
                    if (ivals_meet(w, a) && ivals_meet(w, b)) {
                        bridged = true;
                        break;
                    }
                }
                if (!bridged) return true;
            }
        }
    }
    return false;
}

bool one_intersection(const IntervalModel& m, const ClassifyOptions& opts) {
    CycleList cycles = enumerate_cycles(m.graph, opts.cycle_cap);
    if (cycles.saturated) throw saturation_error("cycle cap hit while testing the 1 property");
    for (const auto& cycle : cycles.cycles) {
        std::vector<Interval> couples;
        for (size_t i = 0; i < cycle.size(); ++i) {
            for (size_t j = i + 1; j < cycle.size(); ++j) {
                const Interval& a = m.intervals[cycle[i]];
                const Interval& b = m.intervals[cycle[j]];
                if (!ivals_meet(a, b)) continue;
                couples.push_back({min(a.first, b.first), max(a.second, b.second)});
            }
        }
        for (int v : cycle) {
            for (const Interval& c : couples) {
                if (!ivals_meet(m.intervals[v], c)) return false;
            }
        }
        if (opts.couples_versus_couples) {
            for (size_t i = 0; i < couples.size(); ++i) {
                for (size_t j = i + 1; j < couples.size(); ++j) {
                    if (!ivals_meet(couples[i], couples[j])) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

IntervalClass interval_property(const IntervalModel& m, const ClassifyOptions& opts) {
    IntervalProperty p;
    if (zero_intersection(m.intervals)) {
        p = IntervalProperty::P0;
    } else if (three_quarter_intersection(m.intervals)) {
        p = IntervalProperty::P3_4;
    } else if (three_half_intersection(m, opts.cycle_cap)) {
        p = IntervalProperty::P3_2;
    } else if (one_intersection(m, opts)) {
        p = IntervalProperty::P1;
    } else {
        p = IntervalProperty::P5_4;
    }
    return IntervalClass{p, QuarterValue(interval_property_delta(p))};
}

namespace {

// Side family along witness arc `pivot`: the pivot plus every
// non-witness arc that meets it, minus explicit exclusions. Arcs that
// meet exactly one witness member lie inside it, so the side family
// never covers the circle and unrolls to an interval model.
ArcFamily side_family(const ArcFamily& fam, const std::vector<int>& witness, int pivot,
                      const std::vector<int>& exclude) {
    ArcFamily side;
    side.push_back(fam.arcs[pivot], fam.labels[pivot]);
    for (int k = 0; k < static_cast<int>(fam.size()); ++k) {
        if (std::find(witness.begin(), witness.end(), k) != witness.end()) continue;
        if (std::find(exclude.begin(), exclude.end(), k) != exclude.end()) continue;
        if (intersects(fam.arcs[k], fam.arcs[pivot])) side.push_back(fam.arcs[k], fam.labels[k]);
    }
    return side;
}

IntervalClass side_class(const ArcFamily& side, const ClassifyOptions& opts) {
    return interval_property(to_interval(build(side)), opts);
}

// Count of witness members an arc intersects.
int witness_hits(const ArcFamily& fam, const std::vector<int>& witness, int k) {
    int hits = 0;
    for (int w : witness) {
        if (intersects(fam.arcs[k], fam.arcs[w])) ++hits;
    }
    return hits;
}

bool all_others_hit_exactly_one(const ArcFamily& fam, const std::vector<int>& witness,
                                const std::vector<int>& exclude = {}) {
    for (int k = 0; k < static_cast<int>(fam.size()); ++k) {
        if (std::find(witness.begin(), witness.end(), k) != witness.end()) continue;
        if (std::find(exclude.begin(), exclude.end(), k) != exclude.end()) continue;
        if (witness_hits(fam, witness, k) != 1) return false;
    }
    return true;
}

std::vector<int> full_arc_indices(const ArcFamily& fam) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(fam.size()); ++i) {
        if (fam.arcs[i].is_full()) out.push_back(i);
    }
    return out;
}

}  // namespace

bool circular_zero_property(const ArcModel& model, const ClassifyOptions& opts) {
    const ArcFamily& fam = model.family;
    if (!covers_circle(fam)) {
        return interval_property(to_interval(model), opts).property == IntervalProperty::P0;
    }
    CoverResult r = rho(fam);
    if (r.rho == 1) {
        std::vector<int> fulls = full_arc_indices(fam);
        // Several whole-circle arcs are mutually adjacent and adjacent
        // to everything, so beyond two vertices the graph has a cycle.
        if (fulls.size() >= 2) return fam.size() <= 2;
        for (int i = 0; i < static_cast<int>(fam.size()); ++i) {
            for (int j = i + 1; j < static_cast<int>(fam.size()); ++j) {
                if (fam.arcs[i].is_full() || fam.arcs[j].is_full()) continue;
                if (intersects(fam.arcs[i], fam.arcs[j])) return false;
            }
        }
        return true;
    }
    if (r.rho == 2) {
        for (const auto& witness : minimal_total_sets(fam)) {
            if (!all_others_hit_exactly_one(fam, witness)) continue;
            bool ok = true;
            for (int pivot : witness) {
                if (side_class(side_family(fam, witness, pivot, {}), opts).property !=
                    IntervalProperty::P0) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    }
    return false;  // rho >= 3 forces delta >= 3/4
}

bool circular_three_quarter_property(const ArcModel& model, const ClassifyOptions& opts) {
    const ArcFamily& fam = model.family;
    if (!covers_circle(fam)) {
        return interval_property(to_interval(model), opts).property == IntervalProperty::P3_4;
    }
    CoverResult r = rho(fam);
    int n = static_cast<int>(fam.size());
    if (r.rho == 1) {
        std::vector<int> fulls = full_arc_indices(fam);
        // With two or more whole-circle arcs the graph on three
        // vertices is a triangle; any fourth vertex closes a 4-cycle.
        if (fulls.size() >= 2) return n == 3;
        bool some_pair = false;
        for (int i = 0; i < n; ++i) {
            if (fam.arcs[i].is_full()) continue;
            int partners = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i || fam.arcs[j].is_full()) continue;
                if (intersects(fam.arcs[i], fam.arcs[j])) {
                    ++partners;
                    some_pair = true;
                }
            }
            if (partners >= 2) return false;
        }
        return some_pair;
    }
    if (r.rho == 2) {
        auto witnesses = minimal_total_sets(fam);
        for (const auto& witness : witnesses) {
            if (!all_others_hit_exactly_one(fam, witness)) continue;
            IntervalProperty c1 = side_class(side_family(fam, witness, witness[0], {}), opts).property;
            IntervalProperty c2 = side_class(side_family(fam, witness, witness[1], {}), opts).property;
            bool both_small = (c1 == IntervalProperty::P0 || c1 == IntervalProperty::P3_4) &&
                              (c2 == IntervalProperty::P0 || c2 == IntervalProperty::P3_4);
            if (both_small && (c1 == IntervalProperty::P3_4 || c2 == IntervalProperty::P3_4)) {
                return true;
            }
        }
        // Bridging-arc variant: one arc meets both witness members,
        // every further arc meets exactly one and avoids the bridge.
        for (const auto& witness : witnesses) {
            for (int bridge = 0; bridge < n; ++bridge) {
                if (std::find(witness.begin(), witness.end(), bridge) != witness.end()) continue;
                if (witness_hits(fam, witness, bridge) != 2) continue;
                bool shape_ok = all_others_hit_exactly_one(fam, witness, {bridge});
                if (!shape_ok) continue;
                bool bridge_isolated = true;
                for (int k = 0; k < n && bridge_isolated; ++k) {
                    if (k == bridge) continue;
                    if (std::find(witness.begin(), witness.end(), k) != witness.end()) continue;
                    if (intersects(fam.arcs[k], fam.arcs[bridge])) bridge_isolated = false;
                }
                if (!bridge_isolated) continue;
                bool ok = true;
                for (int pivot : witness) {
                    IntervalProperty c =
                        side_class(side_family(fam, witness, pivot, {bridge}), opts).property;
                    if (c != IntervalProperty::P0 && c != IntervalProperty::P3_4) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return true;
            }
        }
        return false;
    }
    if (r.rho == 3) {
        for (const auto& witness : minimal_total_sets(fam)) {
            if (!all_others_hit_exactly_one(fam, witness)) continue;
            bool ok = true;
            for (int pivot : witness) {
                IntervalProperty c = side_class(side_family(fam, witness, pivot, {}), opts).property;
                if (c != IntervalProperty::P0 && c != IntervalProperty::P3_4) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        return false;
    }
    return false;  // rho >= 4 forces delta >= 1
}

TriState rho_property(const ArcModel& model, const ClassifyOptions& opts) {
    const ArcFamily& fam = model.family;
    CoverResult r = rho(fam);
    if (r.rho < 3) return TriState::not_applicable;
    Rational budget(r.rho, 4);
    for (const auto& witness : minimal_total_sets(fam)) {
        if (!all_others_hit_exactly_one(fam, witness)) continue;
        if (r.rho <= 5) {
            bool sides_ok = true;
            for (int pivot : witness) {
                IntervalClass c = side_class(side_family(fam, witness, pivot, {}), opts);
                if (c.predicted_delta.value() > budget) {
                    sides_ok = false;
                    break;
                }
            }
            if (!sides_ok) continue;
        }
        return TriState::holds;
    }
    return TriState::fails;
}

CircularReport verify_main_bounds(const ArcModel& model, const DeltaOptions& dopts,
                                  const ClassifyOptions& copts) {
    CircularReport report;
    CoverResult r = rho(model.family);
    report.rho = r.rho;
    report.proper = is_proper(model.family);
    report.delta = delta_sup(model.graph, dopts).delta;

    Rational lower(0), upper;
    if (report.rho == 1) {
        upper = Rational(3, 2);
    } else if (report.rho == 2) {
        upper = Rational(2);
    } else {
        lower = Rational(report.rho, 4);
        upper = Rational(report.rho / 2, 2) + Rational(3, 2);
    }
    if (report.proper) {
        if (report.rho == 1) {
            upper = Rational(0);
        } else if (report.rho == 2) {
            upper = Rational(5, 4);
        } else if (report.rho >= 3) {
            upper = min(upper, Rational(report.rho / 2, 2) + Rational(1));
        }
    }
    report.lower = QuarterValue(lower);
    report.upper = QuarterValue(upper);

    report.zero_property = circular_zero_property(model, copts) ? TriState::holds : TriState::fails;
    report.three_quarter_property =
        circular_three_quarter_property(model, copts) ? TriState::holds : TriState::fails;
    report.rho_prop = rho_property(model, copts);

    if (report.delta < report.lower || report.upper < report.delta) {
        throw bound_violation_error("delta " + report.delta.str() + " escapes [" +
                                    report.lower.str() + ", " + report.upper.str() +
                                    "] at rho=" + std::to_string(report.rho) +
                                    (report.proper ? " (proper)" : ""));
    }
    return report;
}

}  // namespace cag
