#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "wcov/errors.hpp"
#include "wcov/generate.hpp"
#include "wcov/oracle.hpp"

using namespace wcov;

namespace {

std::set<VertexSet> enumerate_all(const Graph& g) {
    std::set<VertexSet> family;
    enumerate_maximal_independent_sets(g, [&](const VertexSet& s) {
        CHECK(family.insert(s).second);  // no duplicates
    });
    return family;
}

}  // namespace

TEST_CASE("maximal independent set enumeration on fixed instances") {
    CHECK(enumerate_all(make_cycle(4)) == std::set<VertexSet>{{0, 2}, {1, 3}});
    CHECK(enumerate_all(make_path(3)) == std::set<VertexSet>{{1}, {0, 2}});
    CHECK(enumerate_all(Graph(1, {})) == std::set<VertexSet>{{0}});
    CHECK(enumerate_all(Graph(0, {})) == std::set<VertexSet>{{}});
}

TEST_CASE("enumeration matches the subset scan") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 4 + int(seed % 9);  // up to 12
        Graph g = gnp(n, 0.1 + 0.1 * double(seed % 8), seed);
        CHECK(enumerate_all(g) == test::maximal_independent_sets_brute(g));
    }
}

TEST_CASE("minimal cover enumeration is the complement family") {
    Graph c4 = make_cycle(4);
    std::set<VertexSet> covers;
    enumerate_minimal_vertex_covers_oracle(c4, [&](const VertexSet& s) { covers.insert(s); });
    CHECK(covers == std::set<VertexSet>{{1, 3}, {0, 2}});

    std::set<VertexSet> k3;
    enumerate_minimal_vertex_covers_oracle(make_complete(3), [&](const VertexSet& s) { k3.insert(s); });
    CHECK(k3 == std::set<VertexSet>{{0, 1}, {0, 2}, {1, 2}});

    std::set<VertexSet> edgeless;
    enumerate_minimal_vertex_covers_oracle(Graph(3, {}), [&](const VertexSet& s) { edgeless.insert(s); });
    CHECK(edgeless == std::set<VertexSet>{{}});
}

TEST_CASE("graph statistics") {
    GraphStats c7 = graph_stats_oracle(make_cycle(7));
    CHECK(c7.alpha == 3);
    CHECK(c7.vc == 4);
    CHECK(c7.vc_plus == 4);
    CHECK(c7.i_min == 3);
    CHECK(c7.degeneracy == 2);

    GraphStats p5 = graph_stats_oracle(make_path(5));
    CHECK(p5.alpha == 3);
    CHECK(p5.vc == 2);
    CHECK(p5.vc_plus == 3);
    CHECK(p5.i_min == 2);

    GraphStats k6 = graph_stats_oracle(make_complete(6));
    CHECK(k6.alpha == 1);
    CHECK(k6.vc == 5);
    CHECK(k6.vc_plus == 5);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gnp(9, 0.3, 100 + seed);
        GraphStats s = graph_stats_oracle(g);
        CHECK(s.vc + s.alpha == g.n());
        CHECK(s.vc_plus + s.i_min == g.n());
        CHECK(s.vc <= s.vc_plus);
    }
}

TEST_CASE("well covered verdicts on the standing corpus") {
    CHECK(is_well_covered_oracle(make_cycle(3)).well_covered);
    CHECK(is_well_covered_oracle(make_cycle(4)).well_covered);
    CHECK(is_well_covered_oracle(make_cycle(5)).well_covered);
    CHECK_FALSE(is_well_covered_oracle(make_cycle(6)).well_covered);
    CHECK(is_well_covered_oracle(make_cycle(7)).well_covered);
    CHECK(is_well_covered_oracle(make_path(2)).well_covered);
    CHECK_FALSE(is_well_covered_oracle(make_path(3)).well_covered);
    CHECK(is_well_covered_oracle(make_path(4)).well_covered);
    CHECK_FALSE(is_well_covered_oracle(make_path(5)).well_covered);
    for (int t = 2; t <= 6; ++t) CHECK_FALSE(is_well_covered_oracle(make_star(t + 1)).well_covered);
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(is_well_covered_oracle(corona(gnp(5, 0.5, seed))).well_covered);
}

TEST_CASE("witnesses on a no verdict") {
    WellCoveredReport c6 = is_well_covered_oracle(make_cycle(6));
    REQUIRE(c6.witness_small.has_value());
    REQUIRE(c6.witness_large.has_value());
    CHECK(*c6.witness_small == VertexSet{0, 3});
    CHECK(*c6.witness_large == VertexSet{0, 2, 4});
    CHECK(is_maximal_independent_set(make_cycle(6), *c6.witness_small));
    CHECK(is_maximal_independent_set(make_cycle(6), *c6.witness_large));

    WellCoveredReport c5 = is_well_covered_oracle(make_cycle(5));
    CHECK(!c5.witness_small.has_value());
    CHECK(c5.vc == 3);
    CHECK(c5.vc_plus == 3);
}

TEST_CASE("budget aborts runaway enumeration") {
    // a disjoint union of triangles has 3^k maximal independent sets
    Graph g(15, {});
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({3 * i, 3 * i + 1});
        edges.push_back({3 * i, 3 * i + 2});
        edges.push_back({3 * i + 1, 3 * i + 2});
    }
    g = Graph(15, std::move(edges));
    CHECK_THROWS_AS(is_well_covered_oracle(g, 10), BudgetExceeded);
    CHECK(is_well_covered_oracle(g, 243).well_covered);
}
