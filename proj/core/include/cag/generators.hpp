#pragma once

#include "cag/circle.hpp"
#include "cag/graph.hpp"
#include "cag/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace cag {

/// rho arcs [(j-1)/rho, j/rho] tiling the circle; consecutive tiles
/// touch at their shared endpoint, so the intersection graph is the
/// cycle on rho vertices. Requires rho >= 3.
ArcFamily cycle_tiling(int rho);

/// Full-circle hub plus six tiles: the wheel on seven vertices.
ArcFamily wheel7();

/// Tiling of even size rho (rho >= 6, rho == 2 mod 4) plus the chain of
/// short arcs through the marked points z_1..z_{rho+6}; the family
/// attains the general upper bound: delta = rho/4 + 3/2.
ArcFamily extremal_main(int rho);

/// Proper family of 2*rho + 4 arcs (rho even >= 4) attaining the proper
/// upper bound delta = rho/4 + 1. eps is a turn in (0, 1/(2*rho)),
/// defaulting to 1/(4*rho).
ArcFamily extremal_proper(int rho, std::optional<Rational> eps = std::nullopt);

/// Two half circles plus eight eighth-tiles: rho = 2 with delta = 2.
ArcFamily rho2_delta2();

/// Proper six-arc family with rho = 2 and delta = 5/4.
ArcFamily rho2_proper();

/// Cycle on rho vertices plus one extra vertex adjacent to exactly
/// three consecutive cycle vertices. Requires rho >= 4.
UnitGraph example_cx(int rho);

/// Arc realization of example_cx: the rho tiles plus one arc spanning
/// the middle tile, which touches exactly the three consecutive tiles.
ArcFamily example_cx_arcs(int rho);

/// Seeded uniform arcs: endpoints are rationals with denominator at
/// most max_den; when allow_full is set, roughly one arc in twenty is
/// the whole circle.
ArcFamily random_arcs(int count, uint64_t seed, int max_den = 64, bool allow_full = true);

/// Seeded covering family: `tiles` arcs tiling the circle between
/// random distinct points (so the family covers and the cover number
/// stays near `tiles`) plus `extras` unconstrained random arcs.
/// Requires tiles >= 3.
ArcFamily covering_arcs(int tiles, int extras, uint64_t seed, int max_den = 24);

/// Seeded Erdos-Renyi style graph: each pair becomes an edge with
/// probability p (compared exactly against the draw).
UnitGraph random_graph(int n, uint64_t seed, const Rational& p = Rational(1, 2));

/// Seeded connected graph: a random spanning tree plus extra_edges
/// additional distinct random edges (fewer when the graph saturates).
UnitGraph random_connected_graph(int n, int extra_edges, uint64_t seed);

/// Name-dispatched front end used by the command line. Generates either
/// an arc family or a graph; exactly one member is set.
struct FamilySpec {
    std::string name;
    std::map<std::string, std::string> params;
    uint64_t seed = 1;
};

struct Generated {
    std::optional<ArcFamily> family;
    std::optional<UnitGraph> graph;
};

Generated generate(const FamilySpec& spec);

}  // namespace cag
