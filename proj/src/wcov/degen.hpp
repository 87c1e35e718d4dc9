#ifndef WCOV_DEGEN_HPP
#define WCOV_DEGEN_HPP

#include "graph.hpp"
#include "report.hpp"

namespace wcov {

// Search tree that grows an independent set: each node branches over the
// closed neighborhood of a minimum-degree residual vertex, so every leaf with
// an empty residual is a maximal independent set reached at depth equal to its
// size. The graph is well covered exactly when all leaf depths agree; for a
// d-degenerate graph the tree has at most (d+1)^alpha leaves.

struct DegenOptions {
    // Stop at the second distinct leaf depth (enough for the verdict). Turn
    // off to measure the full tree and recover vc / vc+ on NO instances.
    bool early_exit = true;
};

WellCoveredReport well_covered_degenerate(const Graph& g, const DegenOptions& options = {});

// Full-tree measurements (early exit disabled).
TreeStats degen_tree_stats(const Graph& g);

}  // namespace wcov

#endif
