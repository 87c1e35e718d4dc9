#ifndef WCOV_GRAPH_HPP
#define WCOV_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bits.hpp"

namespace wcov {

// Vertex subsets are kept as sorted, duplicate-free id vectors.
using VertexSet = std::vector<int>;
using Matching = std::vector<std::pair<int, int>>;

// Immutable simple undirected graph over dense vertex ids 0..n-1.
// Construction deduplicates edges and rejects self-loops; adjacency lists and
// the edge list are sorted ascending, so every traversal is deterministic.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int n() const { return n_; }
    int m() const { return int(edges_.size()); }

    std::span<const int> neighbors(int v) const {
        return {adj_flat_.data() + adj_ptr_[v], adj_flat_.data() + adj_ptr_[v + 1]};
    }
    int degree(int v) const { return adj_ptr_[v + 1] - adj_ptr_[v]; }
    bool has_edge(int u, int v) const;

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // One adjacency row as a bitset; rows() builds all of them.
    Bits adjacency_row(int v) const;
    std::vector<Bits> adjacency_rows() const;

private:
    int n_ = 0;
    std::vector<int> adj_ptr_{0};
    std::vector<int> adj_flat_;
    std::vector<std::pair<int, int>> edges_;
};

enum class GraphFormat { kEdgeList, kDimacs };

// "u v" per line, 0-indexed, '#' comments. n is the largest id seen plus one.
// DIMACS: "p edge <n> <m>" header, "e <u> <v>" lines, 1-indexed, 'c' comments.
Graph parse_graph(std::string_view text, GraphFormat format);
// Picks DIMACS when the first significant line is a "p" header.
Graph parse_graph_auto(std::string_view text);

std::string to_edge_list(const Graph& g);
std::string to_dimacs(const Graph& g);

Graph complement(const Graph& g);

// Partition into connected components, ordered by smallest member id.
std::vector<VertexSet> connected_components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // local id -> id in the host graph
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Removes degree-0 vertices. Every maximal independent set contains all of
// them, so the well-covered verdict is unchanged by this reduction.
InducedSubgraph strip_isolated(const Graph& g);

struct DegeneracyOrdering {
    std::vector<int> order;  // removal sequence (min-degree first, lowest id on ties)
    int degeneracy = 0;
};
DegeneracyOrdering degeneracy_ordering(const Graph& g);

// Scans edges in sorted order, keeping each edge whose endpoints are free.
Matching greedy_maximal_matching(const Graph& g);

struct BipartiteMatching {
    Matching pairs;
    std::vector<int> match_of;         // partner id or -1, size n
    std::vector<char> left_reachable;  // alternating reachability from unmatched
    std::vector<char> right_reachable; // left vertices, size n
};
// Maximum matching between `left` and `right` using augmenting paths; edges
// inside a side are ignored. The reachability sets certify maximality.
BipartiteMatching max_bipartite_matching(const Graph& g, const VertexSet& left, const VertexSet& right);

bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_independent_set(const Graph& g, const VertexSet& s);
// Cover such that every member has a neighbor outside the cover.
bool is_minimal_vertex_cover(const Graph& g, const VertexSet& s);
// Independent set dominating every outside vertex.
bool is_maximal_independent_set(const Graph& g, const VertexSet& s);

// Ascending-id greedy maximal independent set.
VertexSet greedy_maximal_independent_set(const Graph& g);

VertexSet set_complement(int n, const VertexSet& s);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);

}  // namespace wcov

#endif
