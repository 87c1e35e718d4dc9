#include "crown.hpp"

#include <algorithm>

#include "errors.hpp"
#include "mvc_enum.hpp"
#include "oracle.hpp"

namespace wcov {

CrownOrMatching find_crown_or_matching(const Graph& g, int k) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) throw ContractError("find_crown_or_matching: isolated vertex");
    if (g.n() < 3 * k + 1) throw ContractError("find_crown_or_matching: fewer than 3k+1 vertices");
    if (k < 1) throw ContractError("find_crown_or_matching: k must be positive");

    Matching m1 = greedy_maximal_matching(g);
    if (int(m1.size()) > k) {
        m1.resize(size_t(k + 1));
        return m1;
    }

    VertexSet matched;
    for (auto [u, v] : m1) {
        matched.push_back(u);
        matched.push_back(v);
    }
    std::sort(matched.begin(), matched.end());
    // m1 is maximal, so everything it misses is independent.
    VertexSet outside = set_complement(g.n(), matched);

    BipartiteMatching m2 = max_bipartite_matching(g, outside, matched);
    if (int(m2.pairs.size()) > k) {
        Matching m(m2.pairs.begin(), m2.pairs.begin() + k + 1);
        return m;
    }

    // Some outside vertex is unmatched (|outside| >= n - 2k >= k+1 > |m2|).
    // The alternating-reachability sets from those vertices form the crown:
    // reachable outside vertices are the crown, reachable matched vertices the
    // head. Maximality of m2 saturates the head and pins its partners in C.
    CrownDecomposition crown;
    for (int v : outside)
        if (m2.left_reachable[size_t(v)]) crown.crown.push_back(v);
    for (int v : matched)
        if (m2.right_reachable[size_t(v)]) crown.head.push_back(v);
    std::vector<char> used(size_t(g.n()), 0);
    for (int v : crown.crown) used[size_t(v)] = 1;
    for (int v : crown.head) {
        used[size_t(v)] = 1;
        crown.matching.push_back({v, m2.match_of[size_t(v)]});
    }
    for (int v = 0; v < g.n(); ++v)
        if (!used[size_t(v)]) crown.remainder.push_back(v);
    return crown;
}

bool validate_crown(const Graph& g, const CrownDecomposition& crown) {
    const int n = g.n();
    std::vector<int> part(size_t(n), -1);  // 0 crown, 1 head, 2 remainder
    auto assign = [&](const VertexSet& s, int tag) {
        for (int v : s) {
            if (v < 0 || v >= n || part[size_t(v)] != -1) return false;
            part[size_t(v)] = tag;
        }
        return true;
    };
    if (!assign(crown.crown, 0) || !assign(crown.head, 1) || !assign(crown.remainder, 2)) return false;
    for (int v = 0; v < n; ++v)
        if (part[size_t(v)] == -1) return false;

    if (crown.crown.empty()) return false;
    if (!is_independent_set(g, crown.crown)) return false;
    for (int v : crown.crown)
        for (int u : g.neighbors(v))
            if (part[size_t(u)] == 2) return false;

    // Matching of the head into the crown, saturating the head.
    if (crown.matching.size() != crown.head.size()) return false;
    std::vector<char> seen(size_t(n), 0);
    for (auto [a, b] : crown.matching) {
        int h = a, c = b;
        if (part[size_t(h)] != 1) std::swap(h, c);
        if (part[size_t(h)] != 1 || part[size_t(c)] != 0) return false;
        if (!g.has_edge(h, c)) return false;
        if (seen[size_t(h)] || seen[size_t(c)]) return false;
        seen[size_t(h)] = seen[size_t(c)] = 1;
    }
    return true;
}

KernelOutcome kernelize(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) throw ContractError("kernelize: isolated vertex");
    KernelOutcome outcome;
    outcome.k = int(minimum_vertex_cover(g)->size());
    if (g.n() > 5 * outcome.k) {
        outcome.not_well_covered = true;
        return outcome;
    }
    outcome.kernel = g;
    return outcome;
}

CrownAudit audit_crown(const Graph& g, CrownDecomposition crown, std::uint64_t oracle_budget) {
    CrownAudit audit;
    audit.graph_well_covered = is_well_covered_oracle(g, oracle_budget).well_covered;
    auto remainder = induced_subgraph(g, crown.remainder);
    audit.remainder_well_covered = is_well_covered_oracle(remainder.graph, oracle_budget).well_covered;
    audit.remainder_isolated_free = true;
    for (int v = 0; v < remainder.graph.n(); ++v)
        if (remainder.graph.degree(v) == 0) audit.remainder_isolated_free = false;
    auto crown_head = induced_subgraph(g, set_union(crown.crown, crown.head));
    audit.crown_head_well_covered = is_well_covered_oracle(crown_head.graph, oracle_budget).well_covered;
    audit.crown_head_sizes_equal = crown.crown.size() == crown.head.size();
    audit.remainder_empty = crown.remainder.empty();
    audit.crown = std::move(crown);
    return audit;
}

CrownAudit crown_lemma_audit(const Graph& g, std::uint64_t oracle_budget) {
    int k = int(minimum_vertex_cover(g)->size());
    auto result = find_crown_or_matching(g, k);
    // With k = vc, no matching of size k+1 exists.
    return audit_crown(g, std::get<CrownDecomposition>(result), oracle_budget);
}

}  // namespace wcov
