#ifndef WCOV_CROWN_HPP
#define WCOV_CROWN_HPP

#include <optional>
#include <variant>

#include "graph.hpp"
#include "report.hpp"

namespace wcov {

// Crown decomposition machinery and the 5k size rule: a well-covered graph
// without isolated vertices has at most 5 * vc(G) vertices, so anything larger
// is immediately not well covered.

struct CrownDecomposition {
    VertexSet crown;      // C: nonempty independent set
    VertexSet head;       // H: separates C from the remainder
    VertexSet remainder;  // R
    Matching matching;    // matches every head vertex to a distinct crown vertex
};

// Either a matching of size k+1 or a crown decomposition.
using CrownOrMatching = std::variant<Matching, CrownDecomposition>;

// Requires no isolated vertices and n >= 3k+1. Greedy matching, then a maximum
// matching against the leftover independent set; if both stay at size <= k the
// alternating-reachability sets yield a crown.
CrownOrMatching find_crown_or_matching(const Graph& g, int k);

// Checks the full definition: partition, nonempty independent crown, no
// crown-remainder edges, and a matching of the head into the crown.
bool validate_crown(const Graph& g, const CrownDecomposition& crown);

struct KernelOutcome {
    bool not_well_covered = false;
    Graph kernel;  // the input, unchanged, when the size test passes
    int k = 0;     // vertex cover number used by the test
};

// Requires no isolated vertices. Computes k = vc(g); n > 5k decides NO,
// otherwise the graph itself is the kernel.
KernelOutcome kernelize(const Graph& g);

struct CrownAudit {
    CrownDecomposition crown;
    bool graph_well_covered = false;
    bool remainder_well_covered = false;
    bool crown_head_well_covered = false;
    bool crown_head_sizes_equal = false;  // |C| == |H|
    bool remainder_empty = false;
    bool remainder_isolated_free = false;  // no degree-0 vertex inside G[R]
};

// Requires no isolated vertices and n >= 3*vc+1. Finds a crown (with k = vc a
// k+1 matching cannot exist) and evaluates, via the oracle, the structural
// facts that hold for well-covered inputs.
CrownAudit crown_lemma_audit(const Graph& g, std::uint64_t oracle_budget = 10'000'000);

// Audit of an externally supplied crown; used by property tests on
// constructed decompositions.
CrownAudit audit_crown(const Graph& g, CrownDecomposition crown, std::uint64_t oracle_budget = 10'000'000);

}  // namespace wcov

#endif
