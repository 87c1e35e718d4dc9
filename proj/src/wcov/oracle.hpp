#ifndef WCOV_ORACLE_HPP
#define WCOV_ORACLE_HPP

#include <cstdint>
#include <functional>

#include "graph.hpp"
#include "report.hpp"

namespace wcov {

// Ground truth by exhaustive enumeration. Every other decider is validated
// against this module, so it stays as direct as possible.

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// Emits every maximal independent set exactly once, in a deterministic order,
// via pivoted clique enumeration on the complement adjacency. Throws
// BudgetExceeded after `budget` sets.
void enumerate_maximal_independent_sets(const Graph& g,
                                        const std::function<void(const VertexSet&)>& emit,
                                        std::uint64_t budget = kDefaultOracleBudget);

// Complements of the maximal independent sets.
void enumerate_minimal_vertex_covers_oracle(const Graph& g,
                                            const std::function<void(const VertexSet&)>& emit,
                                            std::uint64_t budget = kDefaultOracleBudget);

GraphStats graph_stats_oracle(const Graph& g, std::uint64_t budget = kDefaultOracleBudget);

WellCoveredReport is_well_covered_oracle(const Graph& g, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace wcov

#endif
