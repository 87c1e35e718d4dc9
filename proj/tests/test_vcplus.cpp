#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "wcov/errors.hpp"
#include "wcov/generate.hpp"
#include "wcov/leaf_dp.hpp"
#include "wcov/oracle.hpp"
#include "wcov/rng.hpp"
#include "wcov/vcplus.hpp"

using namespace wcov;

namespace {

LeafProblem empty_context(const Graph& g, int budget) {
    LeafProblem p;
    p.graph = &g;
    p.in_cover.assign(size_t(g.n()), 0);
    p.excluded.assign(size_t(g.n()), 0);
    p.alive.assign(size_t(g.n()), 1);
    p.budget = budget;
    return p;
}

// reference: all X within the residual with partial_cover + X a minimal cover
struct BruteLeaf {
    bool feasible = false;
    int min_size = 0, max_size = 0, max_any = -1;
};

BruteLeaf brute_leaf(const LeafProblem& p) {
    const Graph& g = *p.graph;
    VertexSet residual, cover_base;
    for (int v = 0; v < g.n(); ++v) {
        if (p.alive[size_t(v)]) residual.push_back(v);
        if (p.in_cover[size_t(v)]) cover_base.push_back(v);
    }
    BruteLeaf result;
    int lo = g.n() + 1, hi = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << residual.size()); ++mask) {
        VertexSet x;
        for (size_t i = 0; i < residual.size(); ++i)
            if (mask >> i & 1) x.push_back(residual[i]);
        if (!is_minimal_vertex_cover(g, set_union(cover_base, x))) continue;
        result.max_any = std::max(result.max_any, int(x.size()));
        if (int(x.size()) > p.budget) continue;
        result.feasible = true;
        lo = std::min(lo, int(x.size()));
        hi = std::max(hi, int(x.size()));
    }
    result.min_size = lo;
    result.max_size = hi;
    return result;
}

}  // namespace

TEST_CASE("degree-two leaves on fixed residuals") {
    Graph c4 = make_cycle(4);
    LeafOutcome out = solve_leaf(empty_context(c4, 4));
    CHECK(out.within_budget);
    CHECK(out.min_size == 2);
    CHECK(out.max_size == 2);

    Graph p5 = make_path(5);
    out = solve_leaf(empty_context(p5, 5));
    CHECK(out.min_size == 2);
    CHECK(out.max_size == 3);
    CHECK(out.min_extension == VertexSet{1, 3});  // the unique minimum
    CHECK(out.max_extension.size() == 3);         // one of {0,2,4}, {0,2,3}, {1,2,4}
    CHECK(is_minimal_vertex_cover(p5, out.max_extension));

    // budget cuts the larger extension off
    out = solve_leaf(empty_context(p5, 2));
    CHECK(out.within_budget);
    CHECK(out.max_size == 2);
    CHECK(out.max_size_any == 3);
}

TEST_CASE("a cover vertex with no outside neighbor is unsatisfiable") {
    // vertex 0 covered, all of its neighbors covered too: no witness remains
    Graph g(3, {{0, 1}, {1, 2}});
    LeafProblem p = empty_context(g, 3);
    p.in_cover[0] = p.in_cover[1] = 1;
    p.alive[0] = p.alive[1] = 0;
    // 0's only neighbor is 1, inside the cover
    LeafOutcome out = solve_leaf(p);
    CHECK_FALSE(out.feasible);
}

TEST_CASE("an excluded neighbor settles a cover vertex's witness") {
    // star center 0 excluded, leaves 1..3 covered, plus a residual pendant 4
    // off leaf 3: the leaves' witness is the excluded center
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    LeafProblem p = empty_context(g, 5);
    p.excluded[0] = 1;
    p.in_cover[1] = p.in_cover[2] = p.in_cover[3] = 1;
    p.alive[0] = p.alive[1] = p.alive[2] = p.alive[3] = 0;
    LeafOutcome out = solve_leaf(p);
    REQUIRE(out.within_budget);
    CHECK(out.min_size == 0);
    CHECK(out.max_size == 0);
    CHECK(out.active_constraints == 0);
    CHECK(is_minimal_vertex_cover(g, {1, 2, 3}));

    // with the center in the cover instead, leaves 1 and 2 have no possible
    // witness and the leaf dies
    LeafProblem q = empty_context(g, 5);
    q.in_cover[0] = q.in_cover[1] = q.in_cover[2] = q.in_cover[3] = 1;
    q.alive[0] = q.alive[1] = q.alive[2] = q.alive[3] = 0;
    CHECK_FALSE(solve_leaf(q).feasible);
}

TEST_CASE("leaf solver agrees with the subset scan") {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 400; ++seed) {
        Rng rng(seed);
        int n = 5 + int(rng.below(6));
        Graph g = gnp(n, 0.15 + 0.08 * double(rng.below(5)), 60000 + seed);
        // pick a residual with maximum degree at most 2, rest goes in the cover
        std::vector<char> alive(size_t(n), 0);
        VertexSet order(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) order[size_t(v)] = v;
        for (int v = n - 1; v > 0; --v) std::swap(order[size_t(v)], order[rng.below(std::uint64_t(v + 1))]);
        for (int v : order) {
            alive[size_t(v)] = 1;
            for (int u = 0; u < n; ++u) {
                if (!alive[size_t(u)]) continue;
                int deg = 0;
                for (int w : g.neighbors(u))
                    if (alive[size_t(w)]) ++deg;
                if (deg > 2) {
                    alive[size_t(v)] = 0;
                    break;
                }
            }
        }
        LeafProblem p;
        p.graph = &g;
        p.alive = alive;
        p.in_cover.assign(size_t(n), 0);
        p.excluded.assign(size_t(n), 0);
        for (int v = 0; v < n; ++v)
            if (!alive[size_t(v)]) p.in_cover[size_t(v)] = 1;
        p.budget = int(rng.below(std::uint64_t(n + 1)));

        LeafOutcome mine = solve_leaf(p);
        BruteLeaf truth = brute_leaf(p);
        CHECK(mine.within_budget == truth.feasible);
        CHECK(mine.max_size_any == truth.max_any);
        if (truth.feasible) {
            CHECK(mine.min_size == truth.min_size);
            CHECK(mine.max_size == truth.max_size);
            VertexSet cover_base;
            for (int v = 0; v < n; ++v)
                if (p.in_cover[size_t(v)]) cover_base.push_back(v);
            CHECK(is_minimal_vertex_cover(g, set_union(cover_base, mine.min_extension)));
            CHECK(is_minimal_vertex_cover(g, set_union(cover_base, mine.max_extension)));
            CHECK(int(mine.min_extension.size()) == truth.min_size);
            CHECK(int(mine.max_extension.size()) == truth.max_size);
        }
        ++checked;
    }
}

TEST_CASE("bounded branching on fixed instances") {
    BranchOutcome c7 = vc_and_vcplus_branching(make_cycle(7), 7);
    CHECK(c7.found);
    CHECK(c7.min_cover == 4);
    CHECK(c7.max_cover == 4);

    BranchOutcome p5 = vc_and_vcplus_branching(make_path(5), 5);
    CHECK(p5.min_cover == 2);
    CHECK(p5.max_cover == 3);

    BranchOutcome star = vc_and_vcplus_branching(make_star(5), 4);
    CHECK(star.min_cover == 1);
    CHECK(star.max_cover == 4);
    CHECK(star.witness_min == VertexSet{0});
    CHECK(star.witness_max == VertexSet{1, 2, 3, 4});
}

TEST_CASE("budgets restrict the reported range") {
    // the star has minimal covers of sizes 1 and 6 only
    Graph star = make_star(7);
    BranchOutcome tight = vc_and_vcplus_branching(star, 3);
    CHECK(tight.found);
    CHECK(tight.min_cover == 1);
    CHECK(tight.max_cover == 1);
    CHECK(tight.budget_limited);

    BranchOutcome full = vc_and_vcplus_branching(star, 6);
    CHECK(full.max_cover == 6);
    CHECK_FALSE(full.budget_limited);
}

TEST_CASE("branching agrees with the reference on random graphs") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = gnp(4 + int(seed % 7), 0.1 + 0.1 * double(seed % 8), 61000 + seed);
        WellCoveredReport mine = well_covered_via_branching(g);
        WellCoveredReport truth = is_well_covered_oracle(g);
        CHECK(mine.well_covered == truth.well_covered);
        CHECK(mine.vc == truth.vc);
        CHECK(mine.vc_plus == truth.vc_plus);
        if (!mine.well_covered) {
            CHECK(is_maximal_independent_set(g, *mine.witness_small));
            CHECK(is_maximal_independent_set(g, *mine.witness_large));
        }
        // the reported run used the exact maximum as its budget
        CHECK(mine.tree.k == truth.vc_plus);
        CHECK(double(mine.tree.leaves) <= std::ceil(std::pow(1.4656, double(truth.vc_plus))));
        // node counts: budget-pruned nodes have one child, so compare against
        // twice the leaf bound rather than twice the leaf count
        CHECK(double(mine.tree.nodes) <= 2.0 * std::ceil(std::pow(1.4656, double(truth.vc_plus))) + 1);
    }
}

TEST_CASE("whole-graph decisions on fixed instances") {
    CHECK(well_covered_via_branching(make_cycle(5)).well_covered);
    CHECK(well_covered_via_branching(Graph(4, {})).well_covered);
    CHECK(well_covered_via_branching(Graph(0, {})).well_covered);

    WellCoveredReport fig = well_covered_via_branching(test::figure_one_graph());
    CHECK(fig.vc == 5);
    CHECK(fig.well_covered == is_well_covered_oracle(test::figure_one_graph()).well_covered);

    Graph k4 = make_complete(4);
    WellCoveredReport r = well_covered_via_branching(k4);
    CHECK(r.well_covered);
    CHECK(r.vc == 3);
    CHECK(r.vc_plus == 3);
}
