#ifndef WCOV_VCPLUS_HPP
#define WCOV_VCPLUS_HPP

#include "graph.hpp"
#include "report.hpp"

namespace wcov {

// Bounded search tree over vertices of residual degree >= 3: either the vertex
// joins the cover, or its whole neighborhood does. Nodes whose residual has
// maximum degree <= 2 are solved exactly by the path/cycle leaf solver, so one
// run reports the minimum and maximum minimal-cover sizes within the budget.

struct BranchOutcome {
    bool found = false;   // some minimal cover of size <= k exists
    int min_cover = -1;   // sizes over minimal covers of size <= k
    int max_cover = -1;
    VertexSet witness_min;
    VertexSet witness_max;
    TreeStats stats;
    // True when the budget cut something off: a skipped exclude-branch, a
    // zero-budget node with residual edges, or a leaf extension beyond the
    // budget. When false the outcome covers all minimal covers of the graph.
    bool budget_limited = false;
    int max_leaf_constraints = 0;
};

BranchOutcome vc_and_vcplus_branching(const Graph& g, int k);

// Iterative deepening: starts from the size of a greedy minimal cover, doubles
// the budget until a run is not budget-limited, then reruns at the exact
// maximum found so the reported tree obeys the budget = vc+ leaf bound.
WellCoveredReport well_covered_via_branching(const Graph& g);

}  // namespace wcov

#endif
