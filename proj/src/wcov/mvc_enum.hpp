#ifndef WCOV_MVC_ENUM_HPP
#define WCOV_MVC_ENUM_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "graph.hpp"
#include "report.hpp"

namespace wcov {

// Decides well-coveredness by enumerating every minimal vertex cover: fix a
// minimum cover, split it into (A, B) all 2^|cover| ways, and test the
// candidate A together with the outside neighborhood of B.

// Bounded search for a minimum vertex cover. With a budget, returns a cover of
// size <= budget or nullopt. Branches on the lowest-id maximum-degree vertex,
// include-branch first, after exhausting degree-1 simplification.
std::optional<VertexSet> minimum_vertex_cover(const Graph& g,
                                              std::optional<int> budget = std::nullopt);

enum class PartitionVerdict { kMinimalCover, kCoverNotMinimal, kNotACover };

struct PartitionCandidate {
    VertexSet a;
    VertexSet b;
    VertexSet candidate;  // a plus the neighbors of b outside b
    PartitionVerdict verdict;
};

// One partition, classified. `b` must be a subset of the reference cover.
PartitionCandidate classify_partition(const Graph& g, const VertexSet& cmin, const VertexSet& b);

struct EnumerateOptions {
    // Stop as soon as a minimal cover with size different from |cmin| shows up.
    bool decide_only = false;
};

struct EnumerateResult {
    std::uint64_t partitions = 0;      // partitions processed (2^|cmin| on a full run)
    std::uint64_t emitted = 0;         // deduplicated minimal covers emitted
    int min_size = -1;
    int max_size = -1;
    VertexSet smallest;
    VertexSet largest;
    bool stopped_early = false;
};

// Emits each minimal vertex cover exactly once (deduplicated across
// partitions). `cmin` must be a minimum vertex cover; this is verified.
EnumerateResult enumerate_minimal_vertex_covers(
    const Graph& g, const VertexSet& cmin,
    const std::function<void(const VertexSet&)>& emit = nullptr,
    const EnumerateOptions& options = {});

WellCoveredReport well_covered_via_mvc_enum(const Graph& g, bool decide_only = false);

}  // namespace wcov

#endif
