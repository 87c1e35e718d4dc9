#ifndef WCOV_REPORT_HPP
#define WCOV_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "graph.hpp"

namespace wcov {

// Search-tree measurements for the branching deciders. k is the budget of the
// run the counts belong to.
struct TreeStats {
    std::int64_t leaves = -1;
    std::int64_t nodes = -1;
    int k = -1;
};

// Outcome of one well-coveredness decision. Fields an algorithm does not
// compute stay at -1 / empty. On a NO verdict the witnesses, when present,
// are two maximal independent sets of the input with different sizes.
struct WellCoveredReport {
    bool well_covered = false;
    int alpha = -1;
    int vc = -1;
    int vc_plus = -1;
    std::optional<VertexSet> witness_small;
    std::optional<VertexSet> witness_large;
    TreeStats tree;
    std::string algorithm;

    // Auxiliary counters.
    std::uint64_t sets_enumerated = 0;    // oracle: maximal independent sets seen
    std::uint64_t partitions = 0;         // cover enumeration: partitions processed
    int max_leaf_constraints = 0;         // branching: largest active-constraint count
    bool budget_limited = false;          // branching: some result was cut off by the budget
};

struct GraphStats {
    int alpha = 0;
    int vc = 0;
    int vc_plus = 0;
    int i_min = 0;
    int degeneracy = 0;
};

}  // namespace wcov

#endif
