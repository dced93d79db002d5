#include "cag/intersection.hpp"

#include "cag/errors.hpp"
#include "cag/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace cag;

namespace {

Angle tn(long long n, long long d) { return Angle(Rational(n, d)); }

}  // namespace

TEST_CASE("build: six consecutive sixth arcs give the hexagon") {
    ArcModel m = build(cycle_tiling(6));
    CHECK(m.graph.n() == 6);
    CHECK(m.graph.m() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(m.graph.adjacent(i, (i + 1) % 6));
        CHECK_FALSE(m.graph.adjacent(i, (i + 2) % 6));
    }
}

TEST_CASE("build: full plus two separated arcs is a star") {
    ArcFamily fam;
    fam.push_back(Arc::full_circle(), "hub");
    fam.push_back(Arc::span(tn(0, 1), tn(1, 4)), "a");
    fam.push_back(Arc::span(tn(1, 2), tn(3, 4)), "b");
    ArcModel m = build(fam);
    CHECK(m.graph.m() == 2);
    CHECK(m.graph.adjacent(0, 1));
    CHECK(m.graph.adjacent(0, 2));
    CHECK_FALSE(m.graph.adjacent(1, 2));
}

TEST_CASE("build: disjoint arcs give the empty graph") {
    ArcFamily fam;
    fam.push_back(Arc::span(tn(0, 1), tn(1, 8)), "a");
    fam.push_back(Arc::span(tn(1, 2), tn(5, 8)), "b");
    ArcModel m = build(fam);
    CHECK(m.graph.n() == 2);
    CHECK(m.graph.m() == 0);
    CHECK_THROWS_AS(build(ArcFamily{}), input_error);
}

TEST_CASE("is_ni mirrors circle coverage") {
    CHECK(is_ni(cycle_tiling(6)));
    CHECK(is_ni(wheel7()));
    ArcFamily gap;
    gap.push_back(Arc::span(tn(0, 1), tn(1, 4)), "a");
    gap.push_back(Arc::span(tn(1, 2), tn(3, 4)), "b");
    CHECK_FALSE(is_ni(gap));
}

TEST_CASE("build is order-equivariant") {
    std::mt19937_64 rng(99);
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        ArcFamily fam = random_arcs(6, seed * 97, 16, true);
        ArcModel m = build(fam);
        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        ArcFamily shuffled;
        for (int i : perm) shuffled.push_back(fam.arcs[i], fam.labels[i]);
        ArcModel ms = build(shuffled);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                if (i == j) continue;
                int pi = static_cast<int>(std::find(perm.begin(), perm.end(), i) - perm.begin());
                int pj = static_cast<int>(std::find(perm.begin(), perm.end(), j) - perm.begin());
                CHECK(m.graph.adjacent(i, j) == ms.graph.adjacent(pi, pj));
            }
        }
    }
}

TEST_CASE("to_interval preserves adjacency vertex for vertex") {
    ArcFamily fam;
    fam.push_back(Arc::span(tn(0, 1), tn(1, 4)), "a");
    fam.push_back(Arc::span(tn(1, 8), tn(3, 8)), "b");
    ArcModel m = build(fam);
    IntervalModel im = to_interval(m);
    CHECK(im.graph.m() == 1);
    CHECK(im.graph.adjacent(0, 1));

    for (uint64_t seed = 1; seed <= 200; ++seed) {
        ArcFamily rf = random_arcs(3 + seed % 6, seed * 131, 16, false);
        if (covers_circle(rf)) continue;
        ArcModel rm = build(rf);
        IntervalModel rim = to_interval(rm);
        REQUIRE(rim.intervals.size() == rf.size());
        for (int i = 0; i < rm.graph.n(); ++i) {
            for (int j = 0; j < rm.graph.n(); ++j) {
                if (i != j) CHECK(rm.graph.adjacent(i, j) == rim.graph.adjacent(i, j));
            }
        }
        for (auto& [lo, hi] : rim.intervals) {
            CHECK(Rational(0) < lo);
            CHECK(lo <= hi);
            CHECK(hi < Rational(1));
        }
    }
}

TEST_CASE("to_interval of disjoint arcs gives disjoint intervals") {
    ArcFamily fam;
    fam.push_back(Arc::span(tn(0, 1), tn(1, 8)), "a");
    fam.push_back(Arc::span(tn(1, 2), tn(5, 8)), "b");
    IntervalModel im = to_interval(build(fam));
    CHECK(im.graph.m() == 0);
}

TEST_CASE("to_interval refuses covering families") {
    CHECK_THROWS_AS(to_interval(build(cycle_tiling(6))), input_error);
    CHECK_THROWS_AS(to_interval(build(wheel7())), input_error);
}

TEST_CASE("is_proper") {
    CHECK(is_proper(cycle_tiling(6)));
    ArcFamily with_full;
    with_full.push_back(Arc::full_circle(), "f");
    with_full.push_back(Arc::span(tn(0, 1), tn(1, 4)), "a");
    CHECK_FALSE(is_proper(with_full));
    ArcFamily nested;
    nested.push_back(Arc::span(tn(0, 1), tn(1, 2)), "big");
    nested.push_back(Arc::span(tn(1, 8), tn(1, 4)), "small");
    CHECK_FALSE(is_proper(nested));
    ArcFamily dup;
    dup.push_back(Arc::span(tn(0, 1), tn(1, 4)), "a");
    dup.push_back(Arc::span(tn(0, 1), tn(1, 4)), "b");
    CHECK_FALSE(is_proper(dup));
}

TEST_CASE("proper families have no nested pair under dense sampling") {
    // Endpoints have denominators dividing the grid, so containment
    // sampled on integer grid ticks is exact.
    const long long kGrid = 27720;  // lcm of 1..12
    auto ticks = [&](const Rational& turns) {
        return (turns * Rational(kGrid)).num();
    };
    auto sampled_nested = [&](const ArcFamily& fam) {
        std::vector<std::pair<long long, long long>> spans;  // (start, length) in ticks
        for (const Arc& a : fam.arcs) {
            spans.emplace_back(ticks(a.start().turns()), ticks(a.length()));
        }
        auto contains = [&](size_t i, long long t) {
            long long rel = ((t - spans[i].first) % kGrid + kGrid) % kGrid;
            return rel <= spans[i].second;
        };
        for (size_t i = 0; i < fam.size(); ++i) {
            for (size_t j = 0; j < fam.size(); ++j) {
                if (i == j) continue;
                bool all_inside = true;
                for (long long t = 0; t < kGrid && all_inside; ++t) {
                    if (contains(j, t) && !contains(i, t)) all_inside = false;
                }
                if (all_inside) return true;  // arc i contains arc j
            }
        }
        return false;
    };

    // Agreement on arbitrary random families.
    for (uint64_t seed = 1; seed <= 300; ++seed) {
        ArcFamily fam = random_arcs(4, seed * 307, 12, false);
        CHECK(is_proper(fam) == !sampled_nested(fam));
    }
    // Constructed proper instances: equal-length arcs with distinct
    // starts never nest; the sampling oracle must agree on all of them.
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        long long den = 2 + rng() % 11;
        Rational len(1, den);
        ArcFamily fam;
        std::vector<Rational> starts;
        while (starts.size() < 5) {
            long long d = 1 + rng() % 12;
            Rational s(static_cast<long long>(rng() % d), d);
            if (std::find(starts.begin(), starts.end(), s) == starts.end()) starts.push_back(s);
        }
        for (size_t i = 0; i < starts.size(); ++i) {
            fam.push_back(Arc::span(Angle(starts[i]), Angle(starts[i] + len)),
                          "e" + std::to_string(i));
        }
        REQUIRE(is_proper(fam));
        CHECK_FALSE(sampled_nested(fam));
    }
}
