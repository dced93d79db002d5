#include "cag/classify.hpp"

#include "cag/errors.hpp"
#include "cag/generators.hpp"

#include <doctest.h>

using namespace cag;

namespace {

Angle tn(long long n, long long d) { return Angle(Rational(n, d)); }

IntervalModel intervals_of(std::vector<std::pair<Rational, Rational>> iv) {
    UnitGraph g = interval_intersection_graph(iv);
    return IntervalModel{std::move(iv), std::move(g)};
}

QuarterValue qv(long long n, long long d = 1) { return QuarterValue(Rational(n, d)); }

// Two interior-disjoint interval chains joining far ends, with nothing
// spanning both ends: the smallest style of family whose graph reaches
// delta 3/2.
ArcFamily theta_family() {
    ArcFamily fam;
    fam.push_back(Arc::span(tn(0, 1), tn(1, 16)), "L");
    fam.push_back(Arc::span(tn(5, 8), tn(11, 16)), "R");
    fam.push_back(Arc::span(tn(1, 20), tn(1, 4)), "p1");
    fam.push_back(Arc::span(tn(19, 80), tn(9, 20)), "p2");
    fam.push_back(Arc::span(tn(7, 16), tn(51, 80)), "p3");
    fam.push_back(Arc::span(tn(9, 160), tn(9, 40)), "q1");
    fam.push_back(Arc::span(tn(17, 80), tn(17, 40)), "q2");
    fam.push_back(Arc::span(tn(33, 80), tn(101, 160)), "q3");
    return fam;
}

}  // namespace

TEST_CASE("interval_property: a path of intervals is P0") {
    IntervalClass c = interval_property(intervals_of({{Rational(0), Rational(1)},
                                                      {Rational(1), Rational(2)},
                                                      {Rational(2), Rational(3)}}));
    CHECK(c.property == IntervalProperty::P0);
    CHECK(c.predicted_delta == qv(0));
}

TEST_CASE("interval_property: one triple overlap is P3_4") {
    IntervalClass c = interval_property(intervals_of({{Rational(0), Rational(2)},
                                                      {Rational(1), Rational(3)},
                                                      {Rational(3, 2), Rational(5, 2)}}));
    CHECK(c.property == IntervalProperty::P3_4);
    CHECK(c.predicted_delta == qv(3, 4));
}

TEST_CASE("interval_property: the theta family is P3_2 with delta 3/2") {
    ArcModel m = build(theta_family());
    REQUIRE_FALSE(covers_circle(m.family));
    IntervalClass c = interval_property(to_interval(m));
    CHECK(c.property == IntervalProperty::P3_2);
    CHECK(delta_sup(m.graph).delta == qv(3, 2));
}

TEST_CASE("interval_property matches exact delta on random non-NI families") {
    int checked = 0;
    for (uint64_t seed = 1; checked < 150; ++seed) {
        ArcFamily fam = random_arcs(2 + static_cast<int>(seed % 7), seed * 33331, 16, false);
        if (covers_circle(fam)) continue;
        ++checked;
        ArcModel model = build(fam);
        IntervalClass c = interval_property(to_interval(model));
        CHECK(c.predicted_delta == delta_sup(model.graph).delta);
    }
}

TEST_CASE("both couple modes decide identically") {
    // Interval-versus-couple already forces couples pairwise
    // non-disjoint, so the stricter mode never changes the class.
    ClassifyOptions strict;
    strict.couples_versus_couples = true;
    int checked = 0;
    for (uint64_t seed = 1; checked < 150; ++seed) {
        ArcFamily fam = random_arcs(2 + static_cast<int>(seed % 7), seed * 52379, 16, false);
        if (covers_circle(fam)) continue;
        ++checked;
        IntervalModel im = to_interval(build(fam));
        CHECK(interval_property(im).property == interval_property(im, strict).property);
    }
}

TEST_CASE("circular_zero_property on the star and triangle families") {
    ArcFamily star;
    star.push_back(Arc::full_circle(), "F");
    star.push_back(Arc::span(tn(0, 1), tn(1, 8)), "A");
    star.push_back(Arc::span(tn(1, 4), tn(3, 8)), "B");
    CHECK(circular_zero_property(build(star)));

    ArcFamily triangle;
    triangle.push_back(Arc::full_circle(), "F");
    triangle.push_back(Arc::span(tn(0, 1), tn(1, 8)), "A");
    triangle.push_back(Arc::span(tn(1, 16), tn(3, 16)), "B");
    CHECK_FALSE(circular_zero_property(build(triangle)));
    CHECK(circular_three_quarter_property(build(triangle)));

    ArcFamily disjoint;
    disjoint.push_back(Arc::span(tn(0, 1), tn(1, 8)), "A");
    disjoint.push_back(Arc::span(tn(1, 2), tn(5, 8)), "B");
    CHECK(circular_zero_property(build(disjoint)));
}

TEST_CASE("circular_three_quarter_property on tilings") {
    CHECK(circular_three_quarter_property(build(cycle_tiling(3))));
    CHECK_FALSE(circular_three_quarter_property(build(cycle_tiling(4))));
}

TEST_CASE("characterizations match exact delta on random families") {
    for (uint64_t seed = 1; seed <= 150; ++seed) {
        ArcFamily fam = random_arcs(2 + static_cast<int>(seed % 7), seed * 99991, 16, true);
        ArcModel model = build(fam);
        QuarterValue d = delta_sup(model.graph).delta;
        CHECK(circular_zero_property(model) == (d == qv(0)));
        CHECK(circular_three_quarter_property(model) == (d == qv(3, 4)));
    }
}

TEST_CASE("rho_property examples") {
    CHECK(rho_property(build(cycle_tiling(3))) == TriState::holds);
    CHECK(rho_property(build(cycle_tiling(6))) == TriState::holds);

    // One arc overlapping two tiles breaks the property.
    ArcFamily overlap = cycle_tiling(5);
    overlap.push_back(Arc::span(tn(1, 10), tn(3, 10)), "X");
    CHECK(rho_property(build(overlap)) == TriState::fails);

    // The rho-property is sufficient, not necessary, once rho >= 5.
    ArcModel cx = build(example_cx_arcs(6));
    CHECK(rho_property(cx) == TriState::fails);
    CHECK(delta_sup(cx.graph).delta == qv(3, 2));

    CHECK(rho_property(build(rho2_delta2())) == TriState::not_applicable);
}

TEST_CASE("rho_property forward and small-rho converse on random families") {
    for (uint64_t seed = 1; seed <= 200; ++seed) {
        ArcFamily fam = random_arcs(2 + static_cast<int>(seed % 7), seed * 77783, 16, true);
        ArcModel model = build(fam);
        TriState rp = rho_property(model);
        if (rp == TriState::not_applicable) continue;
        int r = rho(fam).rho;
        QuarterValue d = delta_sup(model.graph).delta;
        if (rp == TriState::holds) CHECK(d == QuarterValue(Rational(r, 4)));
        if ((r == 3 || r == 4) && d == QuarterValue(Rational(r, 4))) CHECK(rp == TriState::holds);
    }
}

TEST_CASE("verify_main_bounds on named families") {
    CircularReport w7 = verify_main_bounds(build(wheel7()));
    CHECK(w7.rho == 1);
    CHECK(w7.delta == qv(3, 2));
    CHECK(w7.upper == qv(3, 2));  // bound tight

    CircularReport g6 = verify_main_bounds(build(extremal_main(6)));
    CHECK(g6.rho == 6);
    CHECK(g6.delta == qv(3));
    CHECK(g6.upper == qv(3));  // bound tight

    CircularReport rp = verify_main_bounds(build(rho2_proper()));
    CHECK(rp.rho == 2);
    CHECK(rp.proper);
    CHECK(rp.delta == qv(5, 4));
    CHECK(rp.upper == qv(5, 4));  // proper bound tight

    CircularReport r2 = verify_main_bounds(build(rho2_delta2()));
    CHECK(r2.rho == 2);
    CHECK(r2.delta == qv(2));
    CHECK(r2.upper == qv(2));
}

TEST_CASE("verify_main_bounds never fails on random families") {
    for (uint64_t seed = 1; seed <= 120; ++seed) {
        ArcFamily fam = random_arcs(2 + static_cast<int>(seed % 8), seed * 35617, 16, true);
        CHECK_NOTHROW(verify_main_bounds(build(fam)));
    }
}

TEST_CASE("cycle saturation refuses classification") {
    ClassifyOptions tiny;
    tiny.cycle_cap = 1;
    ArcModel m = build(theta_family());
    CHECK_THROWS_AS(interval_property(to_interval(m), tiny), saturation_error);
}
