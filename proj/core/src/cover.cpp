#include "cag/cover.hpp"

#include "cag/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace cag {

namespace {

// Greedy cover extension starting from seed arc s, or an empty result
// if the walk gets stuck before wrapping around.
std::vector<int> greedy_from_seed(const ArcFamily& fam, int s) {
    const Arc& seed = fam.arcs[s];
    std::vector<int> chosen{s};
    Angle pos = seed.end();
    Rational covered = seed.length();
    while (covered < Rational(1)) {
        int best = -1;
        Rational best_reach(-1);
        for (int i = 0; i < static_cast<int>(fam.size()); ++i) {
            const Arc& a = fam.arcs[i];
            if (!a.contains(pos)) continue;
            Rational reach = ccw_delta(pos, a.end());
            if (reach > best_reach) {
                best_reach = reach;
                best = i;
            }
        }
        if (best < 0 || best_reach == Rational(0)) return {};  // stuck: gap after pos
        chosen.push_back(best);
        pos = fam.arcs[best].end();
        covered += best_reach;
    }
    return chosen;
}

}  // namespace

CoverResult rho(const ArcFamily& fam) {
    CoverResult result;
    for (int i = 0; i < static_cast<int>(fam.size()); ++i) {
        if (fam.arcs[i].is_full()) {
            result.rho = 1;
            result.witness = {i};
            result.witness_labels = {fam.labels[i]};
            return result;
        }
    }
    std::vector<int> best;
    for (int s = 0; s < static_cast<int>(fam.size()); ++s) {
        std::vector<int> chosen = greedy_from_seed(fam, s);
        if (!chosen.empty() && (best.empty() || chosen.size() < best.size())) {
            best = std::move(chosen);
        }
    }
    result.rho = static_cast<int>(best.size());
    result.witness = best;
    for (int i : best) result.witness_labels.push_back(fam.labels[i]);
    return result;
}

namespace {

// Coverage of arbitrary subfamilies is decided against a fixed probe
// set: all arc endpoints plus the midpoint of every consecutive
// endpoint gap. A subfamily covers the circle iff it covers every
// probe, since any maximal uncovered interval is bounded by endpoints.
std::vector<Angle> subset_probes(const ArcFamily& fam) {
    std::vector<Rational> points;
    for (const Arc& a : fam.arcs) {
        if (a.is_full()) continue;
        points.push_back(a.start().turns());
        points.push_back(a.end().turns());
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Angle> probes;
    if (points.empty()) {
        probes.emplace_back(Rational(0));
        return probes;
    }
    for (size_t i = 0; i < points.size(); ++i) {
        probes.emplace_back(points[i]);
        const Rational& lo = points[i];
        Rational hi = (i + 1 < points.size()) ? points[i + 1] : points[0] + Rational(1);
        if (hi > lo) probes.emplace_back((lo + hi) / Rational(2));
    }
    return probes;
}

std::vector<std::vector<uint64_t>> probe_masks(const ArcFamily& fam,
                                               const std::vector<Angle>& probes) {
    size_t words = (probes.size() + 63) / 64;
    std::vector<std::vector<uint64_t>> masks(fam.size(), std::vector<uint64_t>(words, 0));
    for (size_t i = 0; i < fam.size(); ++i) {
        for (size_t p = 0; p < probes.size(); ++p) {
            if (fam.arcs[i].contains(probes[p])) masks[i][p / 64] |= uint64_t(1) << (p % 64);
        }
    }
    return masks;
}

bool subset_covers(const std::vector<std::vector<uint64_t>>& masks,
                   const std::vector<int>& subset, size_t probe_count) {
    size_t words = (probe_count + 63) / 64;
    for (size_t w = 0; w < words; ++w) {
        uint64_t acc = 0;
        for (int i : subset) acc |= masks[i][w];
        uint64_t want = (w + 1 < words || probe_count % 64 == 0)
                            ? ~uint64_t(0)
                            : ((uint64_t(1) << (probe_count % 64)) - 1);
        if ((acc & want) != want) return false;
    }
    return true;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

double binomial(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

int rho_oracle(const ArcFamily& fam) {
    if (fam.size() > 20) {
        throw size_limit_error("rho_oracle limited to 20 arcs, got " + std::to_string(fam.size()));
    }
    if (!covers_circle(fam)) return 0;
    int n = static_cast<int>(fam.size());
    std::vector<Angle> probes = subset_probes(fam);
    auto masks = probe_masks(fam, probes);
    for (int k = 1; k <= n; ++k) {
        bool found = false;
        for_each_subset(n, k, [&](const std::vector<int>& subset) {
            if (subset_covers(masks, subset, probes.size())) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return k;
    }
    return n;  // unreachable: the whole family covers
}

namespace {

// Chain enumeration of size-rho covers: a minimum cover, walked
// counterclockwise from any of its arcs, always has its next arc
// containing the frontier, so depth-first extension of the frontier
// reaches every one of them. Rotations of the same cover are merged by
// sorting the index sets.
struct CoverEnumerator {
    const ArcFamily& fam;
    int rho;
    Rational max_len;
    std::vector<std::vector<int>> found;
    long long budget = 20'000'000;

    void extend(std::vector<int>& chosen, const Angle& pos, const Rational& covered) {
        if (--budget < 0) {
            throw size_limit_error("minimal total set enumeration exceeded its work budget");
        }
        if (covered >= Rational(1)) {
            if (static_cast<int>(chosen.size()) == rho) {
                std::vector<int> key = chosen;
                std::sort(key.begin(), key.end());
                if (std::find(found.begin(), found.end(), key) == found.end()) {
                    found.push_back(std::move(key));
                }
            }
            return;
        }
        int slots = rho - static_cast<int>(chosen.size());
        if (slots <= 0) return;
        // Even perfect extensions cannot finish with too few slots.
        if (Rational(slots) * max_len < Rational(1) - covered) return;
        for (int j = 0; j < static_cast<int>(fam.size()); ++j) {
            if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
            const Arc& a = fam.arcs[j];
            if (!a.contains(pos)) continue;
            Rational reach = ccw_delta(pos, a.end());
            if (reach == Rational(0)) continue;
            chosen.push_back(j);
            extend(chosen, a.end(), covered + reach);
            chosen.pop_back();
        }
    }
};

}  // namespace

std::vector<std::vector<int>> minimal_total_sets(const ArcFamily& fam) {
    CoverResult r = rho(fam);
    if (r.rho == 0) return {};
    if (r.rho == 1) {
        // Only whole-circle arcs cover alone (a span is shorter than a
        // full turn), and every one of them is a witness.
        std::vector<std::vector<int>> singles;
        for (int i = 0; i < static_cast<int>(fam.size()); ++i) {
            if (fam.arcs[i].is_full()) singles.push_back({i});
        }
        return singles;
    }
    CoverEnumerator enumerator{fam, r.rho, Rational(0), {}};
    for (const Arc& a : fam.arcs) enumerator.max_len = max(enumerator.max_len, a.length());
    for (int s = 0; s < static_cast<int>(fam.size()); ++s) {
        std::vector<int> chosen{s};
        enumerator.extend(chosen, fam.arcs[s].end(), fam.arcs[s].length());
    }
    std::sort(enumerator.found.begin(), enumerator.found.end());
    return enumerator.found;
}

}  // namespace cag
