#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "wcov/degen.hpp"
#include "wcov/generate.hpp"
#include "wcov/oracle.hpp"

using namespace wcov;

TEST_CASE("fixed instances") {
    WellCoveredReport p3 = well_covered_degenerate(make_path(3));
    CHECK_FALSE(p3.well_covered);
    REQUIRE(p3.witness_small.has_value());
    CHECK(*p3.witness_small == VertexSet{1});
    CHECK(*p3.witness_large == VertexSet{0, 2});

    WellCoveredReport c4 = well_covered_degenerate(make_cycle(4));
    CHECK(c4.well_covered);
    CHECK(c4.alpha == 2);
    CHECK(c4.vc == 2);
    CHECK(c4.vc_plus == 2);

    WellCoveredReport k1 = well_covered_degenerate(Graph(1, {}));
    CHECK(k1.well_covered);
    CHECK(k1.alpha == 1);
    CHECK(k1.tree.leaves == 1);

    CHECK(well_covered_degenerate(Graph(0, {})).well_covered);
}

TEST_CASE("tree shape on fixed instances") {
    // one branch per closed-neighborhood member of the minimum-degree vertex
    TreeStats c4 = degen_tree_stats(make_cycle(4));
    CHECK(c4.leaves == 3);
    CHECK(c4.nodes == 7);

    CHECK(degen_tree_stats(Graph(1, {})).leaves == 1);

    TreeStats k4 = degen_tree_stats(make_complete(4));
    CHECK(k4.leaves == 4);  // four closed-neighborhood choices, one level
}

TEST_CASE("verdicts and sizes match the reference") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = gnp(4 + int(seed % 8), 0.1 + 0.1 * double(seed % 8), 8800 + seed);
        DegenOptions full;
        full.early_exit = false;
        WellCoveredReport mine = well_covered_degenerate(g, full);
        WellCoveredReport truth = is_well_covered_oracle(g);
        CHECK(mine.well_covered == truth.well_covered);
        CHECK(mine.vc == truth.vc);
        CHECK(mine.vc_plus == truth.vc_plus);
        CHECK(mine.alpha == truth.alpha);
        if (!mine.well_covered) {
            CHECK(is_maximal_independent_set(g, *mine.witness_small));
            CHECK(is_maximal_independent_set(g, *mine.witness_large));
            CHECK(mine.witness_small->size() < mine.witness_large->size());
        }

        // early termination must still get the verdict right
        CHECK(well_covered_degenerate(g).well_covered == truth.well_covered);
    }
}

TEST_CASE("leaf count stays under the degeneracy bound") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = gnp(4 + int(seed % 8), 0.1 + 0.1 * double(seed % 8), 8900 + seed);
        TreeStats stats = degen_tree_stats(g);
        int d = degeneracy_ordering(g).degeneracy;
        int alpha = graph_stats_oracle(g).alpha;
        CHECK(double(stats.leaves) <= std::pow(double(d + 1), double(alpha)));
    }
}

TEST_CASE("every leaf depth is a maximal independent set size") {
    // the multiset of depths covers exactly the sizes the reference sees
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = gnp(8, 0.25, 9100 + seed);
        std::set<int> truth_sizes;
        enumerate_maximal_independent_sets(g, [&](const VertexSet& s) { truth_sizes.insert(int(s.size())); });
        DegenOptions full;
        full.early_exit = false;
        WellCoveredReport r = well_covered_degenerate(g, full);
        CHECK((r.well_covered ? 1u : 2u) <= truth_sizes.size());
        if (r.well_covered) {
            CHECK(truth_sizes.size() == 1);
            CHECK(*truth_sizes.begin() == r.alpha);
        } else {
            CHECK(g.n() - r.vc == *truth_sizes.rbegin());
            CHECK(g.n() - r.vc_plus == *truth_sizes.begin());
        }
    }
}
