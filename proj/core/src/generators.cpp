#include "cag/generators.hpp"

#include "cag/errors.hpp"

#include <algorithm>
#include <random>

namespace cag {

namespace {

Angle turn(long long num, long long den) { return Angle(Rational(num, den)); }

Arc tile(int j, int rho) {  // j is 1-based
    return Arc::span(turn(j - 1, rho), turn(j, rho));
}

}  // namespace

ArcFamily cycle_tiling(int rho) {
    if (rho < 3) throw input_error("cycle_tiling needs rho >= 3");
    ArcFamily fam;
    for (int j = 1; j <= rho; ++j) fam.push_back(tile(j, rho), "I" + std::to_string(j));
    return fam;
}

ArcFamily wheel7() {
    ArcFamily fam;
    fam.push_back(Arc::full_circle(), "hub");
    for (int j = 1; j <= 6; ++j) fam.push_back(tile(j, 6), "r" + std::to_string(j));
    return fam;
}

ArcFamily extremal_main(int rho) {
    if (rho < 6 || rho % 2 != 0 || rho % 4 != 2) {
        throw input_error("extremal_main needs even rho >= 6 with rho == 2 (mod 4)");
    }
    ArcFamily fam;
    for (int j = 1; j <= rho; ++j) fam.push_back(tile(j, rho), "I" + std::to_string(j));

    // Marked points z_1..z_{rho+6}: three in the first tile, two in the
    // second, midpoints up to the half turn, then the same pattern
    // shifted by a half turn.
    std::vector<Rational> z(rho + 7);  // 1-based
    z[1] = Rational(1, 4 * rho);
    z[2] = Rational(2, 4 * rho);
    z[3] = Rational(3, 4 * rho);
    z[4] = Rational(4, 3 * rho);
    z[5] = Rational(5, 3 * rho);
    for (int j = 6; j <= rho / 2 + 3; ++j) z[j] = Rational(2 * (j - 3) - 1, 2 * rho);
    Rational half(1, 2);
    z[rho / 2 + 4] = half + z[1];
    z[rho / 2 + 5] = half + z[2];
    z[rho / 2 + 6] = half + z[3];
    z[rho / 2 + 7] = half + z[4];
    z[rho / 2 + 8] = half + z[5];
    for (int k = rho / 2 + 9; k <= rho + 6; ++k) z[k] = Rational(2 * (k - 6) - 1, 2 * rho);

    for (int j = 1; j <= rho + 5; ++j) {
        fam.push_back(Arc::span(Angle(z[j]), Angle(z[j + 1])), "Z" + std::to_string(j));
    }
    fam.push_back(Arc::span(Angle(z[rho + 6]), Angle(z[1])), "Z" + std::to_string(rho + 6));
    return fam;
}

ArcFamily extremal_proper(int rho, std::optional<Rational> eps_opt) {
    if (rho < 4 || rho % 2 != 0) throw input_error("extremal_proper needs even rho >= 4");
    Rational eps = eps_opt.value_or(Rational(1, 4 * rho));
    if (eps <= Rational(0) || eps >= Rational(1, 2 * rho)) {
        throw input_error("extremal_proper eps must lie in (0, 1/(2*rho)) turns");
    }
    Rational half(1, 2);
    Rational step(1, rho);
    ArcFamily fam;
    for (int j = 1; j <= rho; ++j) fam.push_back(tile(j, rho), "I" + std::to_string(j));
    for (int j = 1; j <= rho / 2 - 1; ++j) {
        fam.push_back(Arc::span(Angle(eps + Rational(j - 1, rho)), Angle(eps + Rational(j, rho))),
                      "A" + std::to_string(j));
    }
    for (int j = 1; j <= rho / 2 - 1; ++j) {
        fam.push_back(Arc::span(Angle(eps + half + Rational(j - 1, rho)),
                                Angle(eps + half + Rational(j, rho))),
                      "B" + std::to_string(j));
    }
    fam.push_back(Arc::span(Angle(half - eps - step), Angle(half - eps)), "D1");
    fam.push_back(Arc::span(Angle(Rational(1) - eps - step), Angle(Rational(1) - eps)), "D2");
    fam.push_back(Arc::span(Angle(-eps / Rational(2)), Angle(eps)), "E1");
    fam.push_back(Arc::span(Angle(half - eps / Rational(2)), Angle(half + eps)), "E2");
    fam.push_back(Arc::span(Angle(half - eps), Angle(half + eps / Rational(2))), "F1");
    fam.push_back(Arc::span(Angle(Rational(1) - eps), Angle(eps / Rational(2))), "F2");
    return fam;
}

ArcFamily rho2_delta2() {
    ArcFamily fam;
    fam.push_back(Arc::span(turn(0, 1), turn(1, 2)), "H1");
    fam.push_back(Arc::span(turn(1, 2), turn(0, 1)), "H2");
    for (int j = 1; j <= 8; ++j) {
        fam.push_back(Arc::span(turn(j - 1, 8), turn(j, 8)), "Q" + std::to_string(j));
    }
    return fam;
}

ArcFamily rho2_proper() {
    ArcFamily fam;
    fam.push_back(Arc::span(turn(0, 1), turn(1, 2)), "H1");
    fam.push_back(Arc::span(turn(1, 2), turn(0, 1)), "H2");
    fam.push_back(Arc::span(turn(15, 16), turn(1, 8)), "P1");
    fam.push_back(Arc::span(turn(7, 8), turn(1, 16)), "P2");
    fam.push_back(Arc::span(turn(7, 16), turn(5, 8)), "P3");
    fam.push_back(Arc::span(turn(3, 8), turn(9, 16)), "P4");
    return fam;
}

UnitGraph example_cx(int rho) {
    if (rho < 4) throw input_error("example_cx needs rho >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < rho; ++j) edges.emplace_back(j, (j + 1) % rho);
    for (int j = 0; j < 3; ++j) edges.emplace_back(rho, j);
    return UnitGraph(rho + 1, edges);
}

ArcFamily example_cx_arcs(int rho) {
    if (rho < 4) throw input_error("example_cx needs rho >= 4");
    ArcFamily fam = cycle_tiling(rho);
    // Spans tile 2 exactly: touches tiles 1 and 3 at its endpoints and
    // nothing else, so the new vertex sees three consecutive vertices.
    fam.push_back(Arc::span(turn(1, rho), turn(2, rho)), "vI");
    return fam;
}

ArcFamily random_arcs(int count, uint64_t seed, int max_den, bool allow_full) {
    if (count < 0 || max_den < 1) throw input_error("bad random_arcs parameters");
    std::mt19937_64 rng(seed);
    ArcFamily fam;
    for (int i = 0; i < count; ++i) {
        std::string label = "a" + std::to_string(i);
        if (allow_full && rng() % 20 == 0) {
            fam.push_back(Arc::full_circle(), label);
            continue;
        }
        auto draw_angle = [&rng, max_den] {
            long long den = 1 + static_cast<long long>(rng() % max_den);
            long long num = static_cast<long long>(rng() % den);
            return Angle(Rational(num, den));
        };
        fam.push_back(Arc::span(draw_angle(), draw_angle()), label);
    }
    return fam;
}

ArcFamily covering_arcs(int tiles, int extras, uint64_t seed, int max_den) {
    if (tiles < 3 || extras < 0 || max_den < tiles) throw input_error("bad covering_arcs parameters");
    std::mt19937_64 rng(seed);
    std::vector<Rational> points;
    while (static_cast<int>(points.size()) < tiles) {
        long long den = 1 + static_cast<long long>(rng() % max_den);
        Rational p(static_cast<long long>(rng() % den), den);
        if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    }
    std::sort(points.begin(), points.end());
    ArcFamily fam;
    for (int i = 0; i < tiles; ++i) {
        fam.push_back(Arc::span(Angle(points[i]), Angle(points[(i + 1) % tiles])),
                      "t" + std::to_string(i));
    }
    ArcFamily noise = random_arcs(extras, rng(), max_den, false);
    for (size_t i = 0; i < noise.size(); ++i) fam.push_back(noise.arcs[i], "x" + std::to_string(i));
    return fam;
}

UnitGraph random_graph(int n, uint64_t seed, const Rational& p) {
    if (n < 0 || p < Rational(0) || p > Rational(1)) throw input_error("bad random_graph parameters");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            long long draw = static_cast<long long>(rng() % static_cast<uint64_t>(p.den()));
            if (Rational(draw, p.den()) < p || p == Rational(1)) edges.emplace_back(u, v);
        }
    }
    return UnitGraph(n, edges);
}

UnitGraph random_connected_graph(int n, int extra_edges, uint64_t seed) {
    if (n < 1) throw input_error("random_connected_graph needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<char> present(static_cast<size_t>(n) * n, 0);
    auto add = [&](int u, int v) {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        if (present[static_cast<size_t>(u) * n + v]) return false;
        present[static_cast<size_t>(u) * n + v] = 1;
        edges.emplace_back(u, v);
        return true;
    };
    for (int v = 1; v < n; ++v) add(static_cast<int>(rng() % v), v);  // random attachment tree
    long long possible = static_cast<long long>(n) * (n - 1) / 2;
    int added = 0, tries = 0;
    while (added < extra_edges && static_cast<long long>(edges.size()) < possible &&
           tries < 50 * (extra_edges + 1)) {
        ++tries;
        if (add(static_cast<int>(rng() % n), static_cast<int>(rng() % n))) ++added;
    }
    return UnitGraph(n, edges);
}

namespace {

long long spec_int(const FamilySpec& spec, const std::string& key, long long fallback,
                   bool required = false) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        if (required) throw input_error("generator '" + spec.name + "' needs parameter " + key);
        return fallback;
    }
    return Rational::parse(it->second).num();  // integers parse as p/1
}

}  // namespace

Generated generate(const FamilySpec& spec) {
    Generated out;
    if (spec.name == "cycle_tiling") {
        out.family = cycle_tiling(static_cast<int>(spec_int(spec, "rho", 0, true)));
    } else if (spec.name == "wheel7") {
        out.family = wheel7();
    } else if (spec.name == "extremal_main") {
        out.family = extremal_main(static_cast<int>(spec_int(spec, "rho", 6)));
    } else if (spec.name == "extremal_proper") {
        std::optional<Rational> eps;
        auto it = spec.params.find("eps");
        if (it != spec.params.end()) eps = Rational::parse(it->second);
        out.family = extremal_proper(static_cast<int>(spec_int(spec, "rho", 4)), eps);
    } else if (spec.name == "rho2_delta2") {
        out.family = rho2_delta2();
    } else if (spec.name == "rho2_proper") {
        out.family = rho2_proper();
    } else if (spec.name == "example_cx") {
        out.graph = example_cx(static_cast<int>(spec_int(spec, "rho", 6)));
    } else if (spec.name == "example_cx_arcs") {
        out.family = example_cx_arcs(static_cast<int>(spec_int(spec, "rho", 6)));
    } else if (spec.name == "random_arcs") {
        out.family = random_arcs(static_cast<int>(spec_int(spec, "count", 8)), spec.seed,
                                 static_cast<int>(spec_int(spec, "max_den", 64)),
                                 spec_int(spec, "allow_full", 1) != 0);
    } else if (spec.name == "random_graph") {
        auto it = spec.params.find("p");
        Rational p = it != spec.params.end() ? Rational::parse(it->second) : Rational(1, 2);
        out.graph = random_graph(static_cast<int>(spec_int(spec, "n", 8)), spec.seed, p);
    } else if (spec.name == "random_connected_graph") {
        out.graph = random_connected_graph(static_cast<int>(spec_int(spec, "n", 8)),
                                           static_cast<int>(spec_int(spec, "extra", 3)), spec.seed);
    } else {
        throw input_error("unknown generator '" + spec.name + "'");
    }
    return out;
}

}  // namespace cag
