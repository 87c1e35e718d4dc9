#ifndef WCOV_P4_HPP
#define WCOV_P4_HPP

#include <array>
#include <optional>

#include "graph.hpp"
#include "report.hpp"

namespace wcov {

// Decomposition-based decision procedure for graphs with few induced P4s
// (extended P4-laden graphs and (q,q-4)-graphs): peel the graph by union,
// join, pseudo-split, quasi-spider and separable-p-component steps, and fold
// well-coveredness and the independence number bottom-up.

enum class P4Mode { kExtendedP4Laden, kQQ4 };

inline constexpr int kP4EnumerationGuard = 500;  // max n for P4 listing
inline constexpr int kClassCheckGuardExtLaden = 30;
inline constexpr int kClassCheckGuardQQ4 = 20;

// Induced P4s as (w,x,y,z) paths with w < z to fix orientation.
std::vector<std::array<int, 4>> list_induced_p4s(const Graph& g);

// Components of the "co-occur in an induced P4" relation; vertices in no P4
// are singletons. Guarded by kP4EnumerationGuard.
std::vector<VertexSet> p_components(const Graph& g);

struct PseudoSplitPartition {
    VertexSet r;  // complete to c, anticomplete to s
    VertexSet c;  // clique; every member has a neighbor in s
    VertexSet s;  // independent; every member misses someone in c
};

// Finds a partition with nonempty c and s if one exists. Degrees strictly
// separate the three parts, so candidate (|c|,|r|) splits of the sorted degree
// sequence are scanned and verified exhaustively.
std::optional<PseudoSplitPartition> pseudo_split_partition(const Graph& g);

enum class SpiderKind { kThin, kThick };
enum class SubstKind { kClique2, kCoClique2 };  // the pair is adjacent / nonadjacent

struct SpiderSubstitution {
    bool on_clique_side = false;
    int group_index = 0;               // which paired position holds the twin pair
    SubstKind kind = SubstKind::kClique2;
    std::array<int, 2> twins{};        // vertex ids of the pair
};

// Spider with paired positions. Group i of the stable side matches group i of
// the clique side: adjacent exactly when i == j (thin) or i != j (thick). At
// most one group has two vertices (the substituted position).
struct SpiderPartition {
    VertexSet r;
    std::vector<VertexSet> clique_groups;
    std::vector<VertexSet> stable_groups;
    SpiderKind kind = SpiderKind::kThin;
    std::optional<SpiderSubstitution> substitution;
};

// Plain spiders come back without a substitution; otherwise each twin pair is
// tentatively contracted and spider detection retried. A two-paired thick
// spider is reported as thin (the two shapes coincide up to relabeling).
std::optional<SpiderPartition> quasi_spider_partition(const Graph& g);

struct PComponentSeparation {
    VertexSet h;
    VertexSet h1;  // adjacent to everything outside h; midpoints of crossing P4s
    VertexSet h2;  // nonadjacent to everything outside h; endpoints
};

// Requires a graph that is not p-connected (and within the P4 guard). Picks
// the first nontrivial p-component whose outside-adjacency splits it into a
// nonempty fully-adjacent part and a fully-nonadjacent part.
std::optional<PComponentSeparation> separable_p_component(const Graph& g);

struct DecompositionCase {
    enum class Tag {
        kSingleVertex,
        kUnion,
        kJoin,
        kC5,
        kP5,
        kP5Bar,
        kPseudoSplit,
        kQuasiSpider,
        kPComponent,
        kSmall,
    };
    Tag tag;
    std::vector<VertexSet> parts;                       // union / join
    std::optional<PseudoSplitPartition> pseudo_split;
    std::optional<SpiderPartition> spider;
    std::optional<PComponentSeparation> separation;
};

// Tries, in order: single vertex; union; join; C5/P5/P5-bar (extended-laden
// mode); pseudo-split; quasi-spider; separable p-component with |H| < q and
// |V| < q (qq4 mode). Throws DecompositionFailed when nothing applies.
DecompositionCase decompose_step(const Graph& g, P4Mode mode, int q);

struct FewP4Result {
    WellCoveredReport report;
    int alpha = 0;
    VertexSet max_independent_set;
};

FewP4Result well_covered_few_p4(const Graph& g, P4Mode mode, int q,
                                std::uint64_t oracle_budget = 10'000'000);

// Literal check of the defining property, brute force over vertex subsets.
// Guarded: n <= 30 for extended P4-laden, n <= 20 for (q,q-4).
bool is_class_member(const Graph& g, P4Mode mode, int q);

}  // namespace wcov

#endif
