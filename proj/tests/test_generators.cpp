#include "cag/generators.hpp"

#include "cag/cover.hpp"
#include "cag/errors.hpp"
#include "cag/hyperbolicity.hpp"
#include "cag/intersection.hpp"

#include <doctest.h>

#include <sstream>

using namespace cag;

namespace {

QuarterValue qv(long long n, long long d = 1) { return QuarterValue(Rational(n, d)); }

}  // namespace

TEST_CASE("cycle_tiling builds cycles") {
    ArcModel m = build(cycle_tiling(5));
    CHECK(m.graph.n() == 5);
    CHECK(m.graph.m() == 5);
    CHECK(is_regular_of_degree(m.graph, 2));
    CHECK(delta_sup(m.graph).delta == qv(5, 4));
    CHECK_THROWS_AS(cycle_tiling(2), input_error);
}

TEST_CASE("wheel7 is the seven-vertex wheel") {
    ArcModel m = build(wheel7());
    CHECK(m.graph.n() == 7);
    CHECK(m.graph.m() == 12);
    CHECK(m.graph.degree(0) == 6);  // hub listed first
    for (int v = 1; v < 7; ++v) CHECK(m.graph.degree(v) == 3);
    CHECK(rho(wheel7()).rho == 1);
}

TEST_CASE("extremal_main: domain and structure") {
    CHECK_THROWS_AS(extremal_main(4), input_error);   // rho == 0 (mod 4)
    CHECK_THROWS_AS(extremal_main(8), input_error);
    CHECK_THROWS_AS(extremal_main(5), input_error);   // odd
    ArcFamily g6 = extremal_main(6);
    CHECK(g6.size() == 18);  // 6 tiles + 12 chain arcs
    CHECK(covers_circle(g6));
    CHECK(rho(g6).rho == 6);
    ArcFamily g10 = extremal_main(10);
    CHECK(g10.size() == 26);
    CHECK(rho(g10).rho == 10);
}

TEST_CASE("extremal_proper: proper with the stated cover number") {
    ArcFamily f4 = extremal_proper(4);
    CHECK(f4.size() == 12);
    CHECK(is_proper(f4));
    CHECK(rho(f4).rho == 4);
    ArcFamily f6 = extremal_proper(6, Rational(1, 32));
    CHECK(is_proper(f6));
    CHECK(rho(f6).rho == 6);
    CHECK_THROWS_AS(extremal_proper(3), input_error);
    CHECK_THROWS_AS(extremal_proper(4, Rational(1, 8)), input_error);  // eps too large
    CHECK_THROWS_AS(extremal_proper(4, Rational(0)), input_error);
}

TEST_CASE("rho2 families") {
    CHECK(rho(rho2_delta2()).rho == 2);
    CHECK_FALSE(is_proper(rho2_delta2()));  // halves contain the eighth tiles
    CHECK(rho(rho2_proper()).rho == 2);
    CHECK(is_proper(rho2_proper()));
}

TEST_CASE("example_cx graph and arcs agree") {
    UnitGraph g = example_cx(6);
    CHECK(g.n() == 7);
    CHECK(g.m() == 9);
    CHECK(g.degree(6) == 3);
    ArcModel arcs = build(example_cx_arcs(6));
    CHECK(arcs.graph.n() == 7);
    CHECK(arcs.graph.m() == 9);
    // Same degree multiset and same delta.
    CHECK(delta_sup(g).delta == delta_sup(arcs.graph).delta);
    CHECK_THROWS_AS(example_cx(3), input_error);
}

TEST_CASE("random_arcs round-trips through the file format") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        ArcFamily fam = random_arcs(8, seed, 64, true);
        std::string text = arc_family_to_string(fam);
        std::istringstream in(text);
        ArcFamily again = read_arc_family(in);
        REQUIRE(again.size() == fam.size());
        for (size_t i = 0; i < fam.size(); ++i) {
            CHECK(again.arcs[i] == fam.arcs[i]);
            CHECK(again.labels[i] == fam.labels[i]);
        }
        CHECK(arc_family_to_string(again) == text);
    }
}

TEST_CASE("random generators are deterministic per seed") {
    CHECK(arc_family_to_string(random_arcs(6, 11)) == arc_family_to_string(random_arcs(6, 11)));
    CHECK(edge_list_to_string(random_graph(7, 13)) == edge_list_to_string(random_graph(7, 13)));
    CHECK(edge_list_to_string(random_connected_graph(7, 3, 17)) ==
          edge_list_to_string(random_connected_graph(7, 3, 17)));
    CHECK(arc_family_to_string(random_arcs(6, 11)) != arc_family_to_string(random_arcs(6, 12)));
}

TEST_CASE("random_connected_graph is connected") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        UnitGraph g = random_connected_graph(2 + static_cast<int>(seed % 9), static_cast<int>(seed % 7), seed);
        CHECK(g.is_connected());
    }
}

TEST_CASE("generate dispatch") {
    FamilySpec spec;
    spec.name = "cycle_tiling";
    spec.params["rho"] = "5";
    Generated g = generate(spec);
    REQUIRE(g.family.has_value());
    CHECK(g.family->size() == 5);

    spec.name = "example_cx";
    spec.params.clear();
    spec.params["rho"] = "6";
    Generated h = generate(spec);
    REQUIRE(h.graph.has_value());
    CHECK(h.graph->n() == 7);

    spec.name = "nonsense";
    CHECK_THROWS_AS(generate(spec), input_error);

    spec.name = "cycle_tiling";
    spec.params.clear();
    CHECK_THROWS_AS(generate(spec), input_error);  // rho required
}
