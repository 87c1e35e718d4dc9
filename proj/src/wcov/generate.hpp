#ifndef WCOV_GENERATE_HPP
#define WCOV_GENERATE_HPP

#include <cstdint>
#include <string>

#include "graph.hpp"
#include "p4.hpp"

namespace wcov {

// Reproducible instance generation: the same spec always yields the same edge
// list, byte for byte, independent of platform.

enum class Family {
    kGnp,
    kPath,
    kCycle,
    kStar,
    kComplete,
    kCorona,       // pendant appended to every vertex of a gnp base on n vertices
    kThinSpider,   // k paired positions, 2k vertices
    kThickSpider,
    kPseudoSplit,  // clique k, middle part q (random cograph), stable n-k-q
    kCograph,      // random union/join recipe over single vertices
    kUnionJoinRecipe,  // recipe with small fixed leaves mixed in
};

struct GenSpec {
    Family family = Family::kGnp;
    int n = 0;
    double p = 0.0;
    int k = 0;
    int q = 0;
    std::uint64_t seed = 0;
};

Graph generate(const GenSpec& spec);

// Family name from/to text, for the CLI ("gnp", "path", "cycle", "star",
// "complete", "corona", "thin-spider", "thick-spider", "pseudo-split",
// "cograph", "union-join-recipe").
Family family_from_name(const std::string& name);
std::string family_name(Family family);

// Construction helpers shared with the tests.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int n);        // vertex 0 is the center
Graph make_complete(int n);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
// One pendant vertex attached to every vertex of the base; always well covered.
Graph corona(const Graph& base);
Graph gnp(int n, double p, std::uint64_t seed);
Graph random_cograph(int n, std::uint64_t seed);

// Spider with an optional substituted position and an optional attachment
// graph complete to the clique side and anticomplete to the stable side.
struct SpiderSpec {
    int k = 2;
    SpiderKind kind = SpiderKind::kThin;
    // -1 = no substitution; else the paired position 0..k-1 that becomes two
    // vertices of the given kind, on the chosen side.
    int substituted_position = -1;
    bool substitution_on_clique_side = false;
    SubstKind substitution_kind = SubstKind::kClique2;
    Graph attachment;  // becomes the r part; may be empty
};
Graph make_spider(const SpiderSpec& spec);

}  // namespace wcov

#endif
