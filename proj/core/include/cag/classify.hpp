#pragma once

#include "cag/cover.hpp"
#include "cag/hyperbolicity.hpp"
#include "cag/intersection.hpp"
#include "cag/quarter_value.hpp"

namespace cag {

enum class IntervalProperty { P0, P3_4, P1, P5_4, P3_2 };

struct IntervalClass {
    IntervalProperty property;
    QuarterValue predicted_delta;
};

const char* interval_property_name(IntervalProperty p);
Rational interval_property_delta(IntervalProperty p);

struct ClassifyOptions {
    /// The membership test behind the 1-property quantifies pairs of
    /// "interval vs couple"; with this flag it additionally demands
    /// couples pairwise non-disjoint. Interval-vs-couple already forces
    /// couple-vs-couple (a couple contains a member interval), so both
    /// modes decide identically; the flag exists to make that checkable.
    bool couples_versus_couples = false;
    long long cycle_cap = 100000;
};

/// Classifies an interval model by its intersection properties; the
/// predicted delta is exact for interval graphs. Cycle-quantified
/// clauses inherit the cycle cap and throw saturation_error rather than
/// misclassify.
IntervalClass interval_property(const IntervalModel& m, const ClassifyOptions& opts = {});

/// Characterization of delta == 0 for a circular-arc representation.
/// Every minimum total set is tried as the witness.
bool circular_zero_property(const ArcModel& model, const ClassifyOptions& opts = {});

/// Characterization of delta == 3/4.
bool circular_three_quarter_property(const ArcModel& model, const ClassifyOptions& opts = {});

enum class TriState { holds, fails, not_applicable };

const char* tri_state_name(TriState t);

/// Whether some minimum total set I_1..I_rho has every other arc
/// meeting exactly one member, with the side interval graphs small
/// enough for the covering cycle to dominate. When it holds, delta is
/// exactly rho/4. not_applicable below rho = 3.
TriState rho_property(const ArcModel& model, const ClassifyOptions& opts = {});

struct CircularReport {
    int rho = 0;
    bool proper = false;
    QuarterValue delta;
    QuarterValue lower, upper;
    TriState zero_property = TriState::not_applicable;
    TriState three_quarter_property = TriState::not_applicable;
    TriState rho_prop = TriState::not_applicable;
};

/// Computes rho and delta, picks the bound pair for the representation
/// (tightened when the family is proper) and verifies delta falls
/// inside. A violation throws bound_violation_error: the bounds are
/// theorems, so a failure means a library bug, not bad input.
CircularReport verify_main_bounds(const ArcModel& model, const DeltaOptions& dopts = {},
                                  const ClassifyOptions& copts = {});

}  // namespace cag
