#include "cag/transforms.hpp"

#include "cag/cover.hpp"
#include "cag/errors.hpp"

#include <random>

namespace cag {

UnitGraph complement(const UnitGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return UnitGraph(g.n(), edges);
}

LineModel line_graph(const UnitGraph& g) {
    if (g.m() == 0) throw input_error("line graph of an edgeless graph");
    std::vector<std::pair<int, int>> line_edges;
    for (int i = 0; i < g.m(); ++i) {
        for (int j = i + 1; j < g.m(); ++j) {
            auto [a, b] = g.edges()[i];
            auto [c, d] = g.edges()[j];
            if (a == c || a == d || b == c || b == d) line_edges.emplace_back(i, j);
        }
    }
    return LineModel{g, UnitGraph(g.m(), line_edges)};
}

bool check_h_isometry(const LineModel& lm, int samples, uint64_t seed) {
    auto pair_ok = [&lm](int i, int j) {
        int dl = lm.line.dist(i, j);
        QuarterValue db = point_distance(lm.base, lm.base_midpoint(i), lm.base_midpoint(j));
        if (dl == UnitGraph::kInfinite) return db.is_infinite();
        return !db.is_infinite() && db.value() == Rational(dl);
    };
    int k = lm.line.n();
    if (samples <= 0) {
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                if (!pair_ok(i, j)) return false;
            }
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        int i = static_cast<int>(rng() % k);
        int j = static_cast<int>(rng() % k);
        if (i != j && !pair_ok(i, j)) return false;
    }
    return true;
}

namespace {

// Half the diameter, taken per part when the graph is disconnected so
// the bound stays finite and still dominates delta.
QuarterValue half_diameter_bound(const UnitGraph& g) {
    QuarterValue diam = diameter_graph(g);
    if (!diam.is_infinite()) return QuarterValue(diam.value() / Rational(2));
    QuarterValue best(Rational(0));
    for (const auto& part : t_decomposition(g).parts) {
        if (part.size() == 1) continue;
        QuarterValue d = diameter_graph(g.induced_subgraph(part));
        best = max(best, QuarterValue(d.value() / Rational(2)));
    }
    return best;
}

}  // namespace

ComplementBounds complement_bounds(const ArcModel& model, const DeltaOptions& opts) {
    ComplementBounds out;
    int r = rho(model.family).rho;
    UnitGraph comp = complement(model.graph);
    out.delta_complement = delta_sup(comp, opts).delta;
    if (r == 0) {
        out.lower = QuarterValue(Rational(0));
        out.upper = QuarterValue(Rational(2));
    } else if (r > 4) {
        out.lower = QuarterValue(Rational(5, 4));
        out.upper = QuarterValue(Rational(3, 2));
    } else if (r == 4) {
        out.lower = QuarterValue(Rational(0));
        out.upper = QuarterValue(Rational(7, 2));
    } else {
        out.lower = QuarterValue(Rational(0));
        out.upper = half_diameter_bound(comp);
        out.generic_fallback = true;
    }
    if (out.delta_complement < out.lower || out.upper < out.delta_complement) {
        throw bound_violation_error("complement delta " + out.delta_complement.str() +
                                    " escapes [" + out.lower.str() + ", " + out.upper.str() +
                                    "] at rho=" + std::to_string(r));
    }
    return out;
}

bool nordhaus_gaddum_check(const ArcModel& model, const DeltaOptions& opts) {
    int r = rho(model.family).rho;
    if (r != 0 && r != 4 && r <= 4) {
        throw input_error("nordhaus_gaddum_check applies only for rho 0, 4 or > 4");
    }
    Rational dg = delta_sup(model.graph, opts).delta.value();
    Rational dc = delta_sup(complement(model.graph), opts).delta.value();
    Rational sum = dg + dc;
    Rational prod = dg * dc;
    Rational rr(r);
    if (r > 4) {
        return Rational(5) * rr / Rational(16) <= prod &&
               prod <= Rational(3) * rr / Rational(8) + Rational(9, 4) &&
               (rr + Rational(5)) / Rational(4) <= sum && sum <= rr / Rational(4) + Rational(3);
    }
    if (r == 4) {
        return Rational(0) <= prod && prod <= Rational(7) * rr / Rational(8) + Rational(21, 4) &&
               rr / Rational(4) <= sum && sum <= rr / Rational(4) + Rational(5);
    }
    return Rational(0) <= prod && prod <= rr / Rational(2) + Rational(3) &&
           rr / Rational(4) <= sum && sum <= rr / Rational(4) + Rational(7, 2);
}

LineBounds line_bounds(const ArcModel& model, const DeltaOptions& opts) {
    LineBounds out;
    int r = rho(model.family).rho;
    LineModel lm = line_graph(model.graph);
    out.delta_line = delta_sup(lm.line, opts).delta;
    Rational lower(0), upper;
    if (r >= 3) {
        lower = Rational(r, 4);
        upper = Rational(r / 2, 2) + Rational(5, 2);
    } else if (r == 1) {
        upper = Rational(2);
    } else {  // rho 0 or 2
        upper = Rational(5, 2);
    }
    Rational dg = delta_sup(model.graph, opts).delta.value();
    lower = max(lower, dg);
    upper = min(upper, Rational(5) * dg + Rational(5, 2));
    if (is_chordal(model.graph)) upper = min(upper, Rational(5, 2));
    out.lower = QuarterValue(lower);
    out.upper = QuarterValue(upper);
    if (out.delta_line < out.lower || out.upper < out.delta_line) {
        throw bound_violation_error("line delta " + out.delta_line.str() + " escapes [" +
                                    out.lower.str() + ", " + out.upper.str() +
                                    "] at rho=" + std::to_string(r));
    }
    return out;
}

std::optional<Rational> regular_delta(const UnitGraph& g) {
    int n = g.n();
    if (n < 5 || !is_regular_of_degree(g, n - 3)) return std::nullopt;
    UnitGraph comp = complement(g);
    // The complement is 2-regular, hence a union of cycles; the value
    // hinges on whether every one of them is a triangle.
    std::vector<int> comp_id(n, -1);
    std::vector<int> comp_size;
    for (int s = 0; s < n; ++s) {
        if (comp_id[s] >= 0) continue;
        int id = static_cast<int>(comp_size.size());
        comp_size.push_back(0);
        std::vector<int> stack{s};
        comp_id[s] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++comp_size[id];
            for (int y : comp.neighbors(x)) {
                if (comp_id[y] < 0) {
                    comp_id[y] = id;
                    stack.push_back(y);
                }
            }
        }
    }
    for (int size : comp_size) {
        if (size != 3) return Rational(5, 4);
    }
    return Rational(1);
}

bool adjacency_forced_by_common_neighbors(const UnitGraph& g) {
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.adjacent(u, v)) continue;
            for (int a = 0; a < g.n(); ++a) {
                if (a == u || a == v || !g.adjacent(a, u) || !g.adjacent(a, v)) continue;
                for (int b = a + 1; b < g.n(); ++b) {
                    if (b == u || b == v || !g.adjacent(b, u) || !g.adjacent(b, v)) continue;
                    if (!g.adjacent(a, b)) return false;  // forbidden pattern found
                }
            }
        }
    }
    return true;
}

bool covering_forced_by_common_neighbors(const ArcModel& model) {
    const UnitGraph& g = model.graph;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.adjacent(u, v)) continue;
            for (int a = 0; a < g.n(); ++a) {
                if (a == u || a == v || !g.adjacent(a, u) || !g.adjacent(a, v)) continue;
                for (int b = a + 1; b < g.n(); ++b) {
                    if (b == u || b == v || !g.adjacent(b, u) || !g.adjacent(b, v)) continue;
                    if (g.adjacent(a, b)) continue;
                    ArcFamily quad;
                    quad.push_back(model.family.arcs[u], "u");
                    quad.push_back(model.family.arcs[v], "v");
                    quad.push_back(model.family.arcs[a], "a");
                    quad.push_back(model.family.arcs[b], "b");
                    if (!covers_circle(quad)) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace cag
