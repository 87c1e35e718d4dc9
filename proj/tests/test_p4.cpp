#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_util.hpp"
#include "wcov/errors.hpp"
#include "wcov/generate.hpp"
#include "wcov/oracle.hpp"
#include "wcov/p4.hpp"

using namespace wcov;

namespace {

// the smallest separable head with one vertex attached to its midpoints
Graph p4_plus_apex() {
    // 0-1-2-3 path, 4 adjacent to the midpoints 1 and 2
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
}

// head with both stable positions substituted by adjacent twins; evades both
// the pseudo-split and the quasi-spider recognizers
Graph double_substituted_head(const Graph& attachment) {
    // clique {0,1}; stable side {2,3} (twins, adjacent) on 0 and {4,5} on 1
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}};
    int base = 6;
    for (auto [u, v] : attachment.edges()) edges.push_back({base + u, base + v});
    for (int r = 0; r < attachment.n(); ++r) {
        edges.push_back({0, base + r});
        edges.push_back({1, base + r});
    }
    return Graph(base + attachment.n(), std::move(edges));
}

void check_against_oracle(const Graph& g, P4Mode mode, int q) {
    FewP4Result mine = well_covered_few_p4(g, mode, q);
    WellCoveredReport truth = is_well_covered_oracle(g);
    GraphStats stats = graph_stats_oracle(g);
    CHECK(mine.report.well_covered == truth.well_covered);
    CHECK(mine.alpha == stats.alpha);
    CHECK(is_maximal_independent_set(g, mine.max_independent_set));
    CHECK(int(mine.max_independent_set.size()) == stats.alpha);
    if (!mine.report.well_covered) {
        REQUIRE(mine.report.witness_small.has_value());
        REQUIRE(mine.report.witness_large.has_value());
        CHECK(is_maximal_independent_set(g, *mine.report.witness_small));
        CHECK(is_maximal_independent_set(g, *mine.report.witness_large));
        CHECK(mine.report.witness_small->size() < mine.report.witness_large->size());
    }
}

}  // namespace

TEST_CASE("induced path listing") {
    CHECK(list_induced_p4s(make_path(4)).size() == 1);
    CHECK(list_induced_p4s(make_cycle(5)).size() == 5);
    CHECK(list_induced_p4s(make_cycle(4)).empty());
    CHECK(list_induced_p4s(make_complete(5)).empty());
}

TEST_CASE("p-components") {
    auto p4 = p_components(make_path(4));
    REQUIRE(p4.size() == 1);
    CHECK(p4[0] == VertexSet{0, 1, 2, 3});

    CHECK(p_components(make_cycle(4)).size() == 4);  // no induced path of four

    auto p5 = p_components(make_path(5));
    REQUIRE(p5.size() == 1);
    CHECK(p5[0] == VertexSet{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(p_components(Graph(501, {})), GuardExceeded);
}

TEST_CASE("pseudo-split detection") {
    auto p4 = pseudo_split_partition(make_path(4));
    REQUIRE(p4.has_value());
    CHECK(p4->r.empty());
    CHECK(p4->c == VertexSet{1, 2});
    CHECK(p4->s == VertexSet{0, 3});

    SpiderSpec thick;
    thick.k = 3;
    thick.kind = SpiderKind::kThick;
    CHECK(pseudo_split_partition(make_spider(thick)).has_value());

    CHECK_FALSE(pseudo_split_partition(make_cycle(5)).has_value());
    CHECK_FALSE(pseudo_split_partition(make_cycle(4)).has_value());

    // whatever is found satisfies the partition conditions
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = gnp(9, 0.2 + 0.08 * double(seed % 8), 5200 + seed);
        auto split = pseudo_split_partition(g);
        if (!split) continue;
        CHECK(!split->c.empty());
        CHECK(!split->s.empty());
        CHECK(int(split->c.size() + split->r.size() + split->s.size()) == g.n());
        for (size_t i = 0; i < split->c.size(); ++i)
            for (size_t j = i + 1; j < split->c.size(); ++j)
                CHECK(g.has_edge(split->c[i], split->c[j]));
        CHECK(is_independent_set(g, split->s));
        for (int r : split->r) {
            for (int c : split->c) CHECK(g.has_edge(r, c));
            for (int s : split->s) CHECK_FALSE(g.has_edge(r, s));
        }
        for (int c : split->c) {
            bool has = false;
            for (int s : split->s) has = has || g.has_edge(c, s);
            CHECK(has);
        }
        for (int s : split->s) {
            bool misses = false;
            for (int c : split->c) misses = misses || !g.has_edge(s, c);
            CHECK(misses);
        }
    }
}

TEST_CASE("quasi-spider detection") {
    auto plain = quasi_spider_partition(make_path(4));
    REQUIRE(plain.has_value());
    CHECK(plain->kind == SpiderKind::kThin);
    CHECK_FALSE(plain->substitution.has_value());
    CHECK(plain->r.empty());

    SpiderSpec spec;
    spec.k = 2;
    spec.substituted_position = 0;
    spec.substitution_kind = SubstKind::kClique2;
    Graph with_pair = make_spider(spec);  // five vertices
    CHECK(with_pair.n() == 5);
    auto quasi = quasi_spider_partition(with_pair);
    REQUIRE(quasi.has_value());
    CHECK(quasi->kind == SpiderKind::kThin);
    REQUIRE(quasi->substitution.has_value());
    CHECK(quasi->substitution->kind == SubstKind::kClique2);
    CHECK_FALSE(quasi->substitution->on_clique_side);

    CHECK_FALSE(quasi_spider_partition(make_cycle(4)).has_value());
    CHECK_FALSE(quasi_spider_partition(make_cycle(6)).has_value());
}

TEST_CASE("detection round-trips every constructed spider") {
    for (int k = 2; k <= 5; ++k)
        for (SpiderKind kind : {SpiderKind::kThin, SpiderKind::kThick})
            for (int pos = -1; pos < (pos < 0 ? 0 : k); ++pos)
                for (bool on_clique : {false, true})
                    for (SubstKind sub : {SubstKind::kClique2, SubstKind::kCoClique2}) {
                        if (pos < 0 && (on_clique || sub != SubstKind::kClique2)) continue;
                        SpiderSpec spec;
                        spec.k = k;
                        spec.kind = kind;
                        spec.substituted_position = pos;
                        spec.substitution_on_clique_side = on_clique;
                        spec.substitution_kind = sub;
                        Graph g = make_spider(spec);
                        auto detected = quasi_spider_partition(g);
                        REQUIRE(detected.has_value());
                        // two paired positions make thin and thick coincide
                        if (k > 2) CHECK(detected->kind == kind);
                        CHECK(detected->substitution.has_value() == (pos >= 0));
                        if (pos >= 0) CHECK(detected->substitution->kind == sub);
                        CHECK(int(detected->clique_groups.size()) == k);
                    }
}

TEST_CASE("separable p-component") {
    auto sep = separable_p_component(p4_plus_apex());
    REQUIRE(sep.has_value());
    CHECK(sep->h == VertexSet{0, 1, 2, 3});
    CHECK(sep->h1 == VertexSet{1, 2});
    CHECK(sep->h2 == VertexSet{0, 3});

    CHECK_FALSE(separable_p_component(Graph(4, {{0, 1}, {2, 3}})).has_value());  // no P4 at all
    CHECK_THROWS_AS(separable_p_component(make_path(4)), ContractError);          // p-connected
    CHECK_THROWS_AS(separable_p_component(make_cycle(5)), ContractError);
}

TEST_CASE("decomposition steps") {
    CHECK(decompose_step(Graph(1, {}), P4Mode::kExtendedP4Laden, 7).tag ==
          DecompositionCase::Tag::kSingleVertex);
    CHECK(decompose_step(Graph(4, {{0, 1}, {2, 3}}), P4Mode::kExtendedP4Laden, 7).tag ==
          DecompositionCase::Tag::kUnion);
    CHECK(decompose_step(make_cycle(4), P4Mode::kExtendedP4Laden, 7).tag ==
          DecompositionCase::Tag::kJoin);
    CHECK(decompose_step(make_cycle(5), P4Mode::kExtendedP4Laden, 7).tag ==
          DecompositionCase::Tag::kC5);
    CHECK(decompose_step(make_path(5), P4Mode::kExtendedP4Laden, 7).tag ==
          DecompositionCase::Tag::kP5);
    CHECK(decompose_step(complement(make_path(5)), P4Mode::kExtendedP4Laden, 7).tag ==
          DecompositionCase::Tag::kP5Bar);
    CHECK(decompose_step(make_path(4), P4Mode::kExtendedP4Laden, 7).tag ==
          DecompositionCase::Tag::kPseudoSplit);

    SpiderSpec spec;
    spec.k = 2;
    spec.substituted_position = 0;
    spec.substitution_kind = SubstKind::kClique2;
    spec.attachment = Graph(1, {});
    CHECK(decompose_step(make_spider(spec), P4Mode::kQQ4, 9).tag ==
          DecompositionCase::Tag::kQuasiSpider);

    CHECK(decompose_step(double_substituted_head(Graph(1, {})), P4Mode::kQQ4, 9).tag ==
          DecompositionCase::Tag::kPComponent);
    CHECK(decompose_step(make_cycle(5), P4Mode::kQQ4, 9).tag == DecompositionCase::Tag::kSmall);

    CHECK_THROWS_AS(decompose_step(make_cycle(6), P4Mode::kExtendedP4Laden, 7), DecompositionFailed);
}

TEST_CASE("decision on the named five-vertex graphs") {
    FewP4Result c5 = well_covered_few_p4(make_cycle(5), P4Mode::kExtendedP4Laden, 7);
    CHECK(c5.report.well_covered);
    CHECK(c5.alpha == 2);

    FewP4Result p5 = well_covered_few_p4(make_path(5), P4Mode::kExtendedP4Laden, 7);
    CHECK_FALSE(p5.report.well_covered);

    FewP4Result house = well_covered_few_p4(complement(make_path(5)), P4Mode::kExtendedP4Laden, 7);
    CHECK(house.report.well_covered);
    CHECK(house.alpha == 2);
}

TEST_CASE("decision matches the reference on spiders") {
    for (int k = 2; k <= 5; ++k)
        for (SpiderKind kind : {SpiderKind::kThin, SpiderKind::kThick})
            for (int pos : {-1, 0, k - 1})
                for (bool on_clique : {false, true})
                    for (SubstKind sub : {SubstKind::kClique2, SubstKind::kCoClique2})
                        for (int attach : {0, 1, 3}) {
                            if (pos < 0 && (on_clique || sub != SubstKind::kClique2)) continue;
                            SpiderSpec spec;
                            spec.k = k;
                            spec.kind = kind;
                            spec.substituted_position = pos;
                            spec.substitution_on_clique_side = on_clique;
                            spec.substitution_kind = sub;
                            spec.attachment = make_path(attach);
                            Graph g = make_spider(spec);
                            check_against_oracle(g, P4Mode::kQQ4, std::max(9, g.n() + 1));
                        }
}

TEST_CASE("decision matches the reference on random pseudo-splits") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenSpec spec;
        spec.family = Family::kPseudoSplit;
        spec.n = 10 + int(seed % 12);
        spec.k = 2 + int(seed % 4);
        spec.q = int(seed % 3);
        spec.p = 0.3;
        spec.seed = 300 + seed;
        Graph g = generate(spec);
        check_against_oracle(g, P4Mode::kQQ4, g.n() + 1);
    }
}

TEST_CASE("decision matches the reference on random cographs and recipes") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = random_cograph(3 + int(seed % 14), 400 + seed);
        check_against_oracle(g, P4Mode::kExtendedP4Laden, 7);
        check_against_oracle(g, P4Mode::kQQ4, 7);
    }
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenSpec spec;
        spec.family = Family::kUnionJoinRecipe;
        spec.n = 4 + int(seed % 14);
        spec.seed = 500 + seed;
        Graph g = generate(spec);
        check_against_oracle(g, P4Mode::kExtendedP4Laden, 7);
    }
}

TEST_CASE("union rule") {
    Graph two_c4 = disjoint_union(make_cycle(4), make_cycle(4));
    FewP4Result r = well_covered_few_p4(two_c4, P4Mode::kQQ4, two_c4.n() + 1);
    CHECK(r.report.well_covered);
    CHECK(r.alpha == 4);
    check_against_oracle(two_c4, P4Mode::kQQ4, two_c4.n() + 1);

    Graph c4_p3 = disjoint_union(make_cycle(4), make_path(3));
    FewP4Result bad = well_covered_few_p4(c4_p3, P4Mode::kExtendedP4Laden, 7);
    CHECK_FALSE(bad.report.well_covered);
    check_against_oracle(c4_p3, P4Mode::kExtendedP4Laden, 7);
}

TEST_CASE("join rule") {
    Graph c4_c5 = join(make_cycle(4), make_cycle(5));
    FewP4Result r = well_covered_few_p4(c4_c5, P4Mode::kQQ4, c4_c5.n() + 1);
    CHECK(r.report.well_covered);  // both parts agree on size two
    CHECK(r.alpha == 2);
    check_against_oracle(c4_c5, P4Mode::kQQ4, c4_c5.n() + 1);

    Graph c4_c6 = join(make_cycle(4), make_cycle(6));
    FewP4Result bad = well_covered_few_p4(c4_c6, P4Mode::kQQ4, c4_c6.n() + 1);
    CHECK_FALSE(bad.report.well_covered);  // one part is not well covered
    check_against_oracle(c4_c6, P4Mode::kQQ4, c4_c6.n() + 1);

    Graph c4_c7 = join(make_cycle(4), make_cycle(7));
    FewP4Result mism = well_covered_few_p4(c4_c7, P4Mode::kQQ4, c4_c7.n() + 1);
    CHECK_FALSE(mism.report.well_covered);  // sizes two versus three
    check_against_oracle(c4_c7, P4Mode::kQQ4, c4_c7.n() + 1);
}

TEST_CASE("decision matches the reference on separable heads") {
    check_against_oracle(p4_plus_apex(), P4Mode::kQQ4, 7);
    for (int attach : {1, 2, 3}) {
        Graph g = double_substituted_head(make_path(attach));
        check_against_oracle(g, P4Mode::kQQ4, 9);
    }
    Graph with_clique = double_substituted_head(make_complete(3));
    check_against_oracle(with_clique, P4Mode::kQQ4, 9);
}

TEST_CASE("every small class member decomposes and decides correctly") {
    long members = 0;
    for (int n = 1; n <= 6; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph g = test::graph_from_edge_mask(n, mask);
            for (P4Mode mode : {P4Mode::kExtendedP4Laden, P4Mode::kQQ4}) {
                if (!is_class_member(g, mode, 7)) continue;
                ++members;
                FewP4Result mine = well_covered_few_p4(g, mode, 7);  // throws on a case gap
                WellCoveredReport truth = is_well_covered_oracle(g);
                CHECK(mine.report.well_covered == truth.well_covered);
                CHECK(mine.alpha == truth.alpha);
            }
        }
    }
    CHECK(members > 30000);
}

TEST_CASE("class membership") {
    CHECK(is_class_member(random_cograph(12, 7), P4Mode::kExtendedP4Laden, 7));
    CHECK(is_class_member(random_cograph(12, 7), P4Mode::kQQ4, 7));
    CHECK(is_class_member(make_path(5), P4Mode::kExtendedP4Laden, 7));
    CHECK(is_class_member(make_complete(6), P4Mode::kExtendedP4Laden, 7));
    CHECK_FALSE(is_class_member(make_cycle(6), P4Mode::kExtendedP4Laden, 7));

    // five induced paths on five vertices: far over the (5,1) allowance,
    // within the (9,5) one
    CHECK_FALSE(is_class_member(make_cycle(5), P4Mode::kQQ4, 5));
    CHECK(is_class_member(make_cycle(5), P4Mode::kQQ4, 9));

    CHECK_THROWS_AS(is_class_member(Graph(31, {}), P4Mode::kExtendedP4Laden, 7), GuardExceeded);
    CHECK_THROWS_AS(is_class_member(Graph(21, {}), P4Mode::kQQ4, 7), GuardExceeded);
}
