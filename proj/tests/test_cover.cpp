#include "cag/cover.hpp"

#include "cag/errors.hpp"
#include "cag/generators.hpp"
#include "cag/intersection.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cag;

namespace {

Angle tn(long long n, long long d) { return Angle(Rational(n, d)); }

}  // namespace

TEST_CASE("rho: a full arc alone covers") {
    ArcFamily fam;
    fam.push_back(Arc::full_circle(), "f");
    fam.push_back(Arc::span(tn(0, 1), tn(1, 4)), "a");
    CoverResult r = rho(fam);
    CHECK(r.rho == 1);
    CHECK(r.witness_labels == std::vector<std::string>{"f"});
    CHECK(rho_oracle(fam) == 1);
}

TEST_CASE("rho: six sixth arcs need all six") {
    ArcFamily fam = cycle_tiling(6);
    CoverResult r = rho(fam);
    CHECK(r.rho == 6);
    CHECK(r.witness.size() == 6);
    CHECK(rho_oracle(fam) == 6);
}

TEST_CASE("rho: the ten-arc two-halves family has rho 2") {
    ArcFamily fam = rho2_delta2();
    CHECK(rho(fam).rho == 2);
    CHECK(rho_oracle(fam) == 2);
}

TEST_CASE("rho: non-covering family reports zero with empty witness") {
    ArcFamily fam;
    fam.push_back(Arc::span(tn(0, 1), tn(1, 4)), "a");
    fam.push_back(Arc::span(tn(1, 2), tn(3, 4)), "b");
    CoverResult r = rho(fam);
    CHECK(r.rho == 0);
    CHECK(r.witness.empty());
    CHECK(rho_oracle(fam) == 0);
}

TEST_CASE("rho witness covers and no smaller subfamily does") {
    for (uint64_t seed = 1; seed <= 150; ++seed) {
        ArcFamily fam = random_arcs(3 + seed % 9, seed * 7919, 24, true);
        CoverResult r = rho(fam);
        if (r.rho == 0) {
            CHECK_FALSE(covers_circle(fam));
            continue;
        }
        ArcFamily witness;
        for (size_t k = 0; k < r.witness.size(); ++k) {
            witness.push_back(fam.arcs[r.witness[k]], "w" + std::to_string(k));
        }
        CHECK(covers_circle(witness));
        CHECK(static_cast<int>(r.witness.size()) == r.rho);
        CHECK(r.rho == rho_oracle(fam));
    }
}

TEST_CASE("rho is monotone nonincreasing under adding arcs") {
    for (uint64_t seed = 1; seed <= 120; ++seed) {
        ArcFamily fam = random_arcs(4 + seed % 6, seed * 4001, 24, true);
        int before = rho(fam).rho;
        if (before == 0) continue;  // adding arcs can only create coverage
        ArcFamily bigger = fam;
        ArcFamily extra = random_arcs(2, seed * 4001 + 1, 24, true);
        for (size_t i = 0; i < extra.size(); ++i) bigger.push_back(extra.arcs[i], "x" + std::to_string(i));
        int after = rho(bigger).rho;
        CHECK(after <= before);
        CHECK(after >= 1);
    }
}

TEST_CASE("rho >= 3 witnesses induce an isometric cycle") {
    int seen = 0;
    for (uint64_t seed = 1; seed <= 700 && seen < 40; ++seed) {
        ArcFamily fam = covering_arcs(3 + seed % 6, 1 + seed % 4, seed * 52361);
        CoverResult r = rho(fam);
        if (r.rho < 3) continue;
        ++seen;
        ArcModel m = build(fam);
        int k = r.rho;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                int hop = std::min(std::abs(i - j), k - std::abs(i - j));
                bool adjacent_in_cycle = hop == 1;
                CHECK(m.graph.adjacent(r.witness[i], r.witness[j]) == adjacent_in_cycle);
                CHECK(m.graph.dist(r.witness[i], r.witness[j]) == hop);
            }
        }
    }
    CHECK(seen >= 40);
}

TEST_CASE("oracle refuses oversized families") {
    ArcFamily fam = random_arcs(21, 5, 16, false);
    CHECK_THROWS_AS(rho_oracle(fam), size_limit_error);
}

TEST_CASE("minimal_total_sets lists exactly the covering rho-subsets") {
    ArcFamily fam = example_cx_arcs(6);  // tiles plus one duplicate-span arc
    CoverResult r = rho(fam);
    CHECK(r.rho == 6);
    auto sets = minimal_total_sets(fam);
    // The six tiles, or the tiles with the duplicate span standing in
    // for the tile it copies.
    CHECK(sets.size() == 2);
    for (const auto& s : sets) {
        ArcFamily sub;
        for (int i : s) sub.push_back(fam.arcs[i], fam.labels[i]);
        CHECK(covers_circle(sub));
    }
}

TEST_CASE("minimal_total_sets equals the brute subset scan") {
    // The chain enumeration must find every covering subset of minimum
    // size, so compare it against plain subset enumeration.
    auto brute = [](const ArcFamily& fam, int k) {
        std::vector<std::vector<int>> out;
        int n = static_cast<int>(fam.size());
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            ArcFamily sub;
            for (int i : idx) sub.push_back(fam.arcs[i], fam.labels[i]);
            if (covers_circle(sub)) out.push_back(idx);
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        return out;
    };
    int covers_seen = 0;
    for (uint64_t seed = 1; seed <= 250; ++seed) {
        ArcFamily fam = (seed % 2 == 0)
                            ? covering_arcs(3 + seed % 4, 2 + seed % 3, seed * 677)
                            : random_arcs(4 + static_cast<int>(seed % 6), seed * 677, 16, true);
        CoverResult r = rho(fam);
        auto fast = minimal_total_sets(fam);
        if (r.rho == 0) {
            CHECK(fast.empty());
            continue;
        }
        ++covers_seen;
        CHECK(fast == brute(fam, r.rho));
    }
    CHECK(covers_seen >= 100);
}
