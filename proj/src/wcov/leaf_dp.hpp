#ifndef WCOV_LEAF_DP_HPP
#define WCOV_LEAF_DP_HPP

#include <optional>

#include "graph.hpp"

namespace wcov {

// Leaf subproblem of the budgeted cover branching. The residual graph (the
// alive vertices) has maximum degree <= 2. Sought: subsets X of the residual
// such that partial_cover + X is a minimal vertex cover of the whole graph.
//
// Minimality constraints can tie a partial-cover vertex to residual vertices
// in several components, so the solver runs a per-component path/cycle DP over
// (in-cover, witness-pending, satisfied-constraint-mask) states and combines
// components by mask-union. Exponential in the number of active constraints in
// the worst case; the count is reported and capped.
struct LeafProblem {
    const Graph* graph = nullptr;
    std::vector<char> in_cover;  // the partial cover, committed
    std::vector<char> excluded;  // committed out of the cover
    std::vector<char> alive;     // the residual; max degree <= 2 within alive
    int budget = 0;              // max |X|
};

struct LeafOutcome {
    bool feasible = false;       // some extension exists, any size
    bool within_budget = false;  // some extension of size <= budget exists
    int min_size = -1;           // over extensions of size <= budget
    int max_size = -1;
    int max_size_any = -1;       // over all extensions
    VertexSet min_extension;
    VertexSet max_extension;
    int active_constraints = 0;
};

// Counts above the flag threshold are worth reporting; beyond the hard cap
// the mask tables would outgrow memory and the solver refuses.
inline constexpr int kLeafConstraintFlag = 20;
inline constexpr int kMaxLeafConstraints = 24;

LeafOutcome solve_leaf(const LeafProblem& problem);

}  // namespace wcov

#endif
