#include "vcplus.hpp"

#include <algorithm>

#include "errors.hpp"
#include "leaf_dp.hpp"

namespace wcov {

namespace {

class BranchSearch {
public:
    BranchSearch(const Graph& g, int k)
        : g_(g), k_(k), alive_(size_t(g.n()), 1), in_cover_(size_t(g.n()), 0),
          excluded_(size_t(g.n()), 0), deg_(size_t(g.n())), alive_edges_(g.m()) {
        for (int v = 0; v < g.n(); ++v) deg_[size_t(v)] = g.degree(v);
    }

    BranchOutcome run() {
        out_.stats.nodes = 0;
        out_.stats.leaves = 0;
        expand(k_);
        out_.stats.k = k_;
        return out_;
    }

private:
    void remove_vertex(int v, std::vector<int>& trail) {
        alive_[size_t(v)] = 0;
        trail.push_back(v);
        for (int u : g_.neighbors(v))
            if (alive_[size_t(u)]) {
                --deg_[size_t(u)];
                --alive_edges_;
            }
    }

    void undo(std::vector<int>& trail) {
        while (!trail.empty()) {
            int v = trail.back();
            trail.pop_back();
            alive_[size_t(v)] = 1;
            for (int u : g_.neighbors(v))
                if (alive_[size_t(u)]) {
                    ++deg_[size_t(u)];
                    ++alive_edges_;
                }
        }
    }

    VertexSet cover_with(const VertexSet& extension) const {
        VertexSet s;
        for (int v = 0; v < g_.n(); ++v)
            if (in_cover_[size_t(v)]) s.push_back(v);
        return set_union(s, extension);
    }

    void record(const VertexSet& cover) {
        int size = int(cover.size());
        if (!out_.found || size < out_.min_cover) {
            out_.min_cover = size;
            out_.witness_min = cover;
        }
        if (!out_.found || size > out_.max_cover) {
            out_.max_cover = size;
            out_.witness_max = cover;
        }
        out_.found = true;
    }

    void expand(int budget) {
        ++out_.stats.nodes;

        int best = -1, best_deg = 2;
        for (int v = 0; v < g_.n(); ++v)
            if (alive_[size_t(v)] && deg_[size_t(v)] > best_deg) {
                best_deg = deg_[size_t(v)];
                best = v;
            }

        if (best == -1) {
            // Residual is paths, cycles and isolated vertices.
            ++out_.stats.leaves;
            LeafProblem problem{&g_, in_cover_, excluded_, alive_, budget};
            LeafOutcome leaf = solve_leaf(problem);
            out_.max_leaf_constraints = std::max(out_.max_leaf_constraints, leaf.active_constraints);
            if (!leaf.feasible) return;
            if (leaf.max_size_any > budget) out_.budget_limited = true;
            if (!leaf.within_budget) return;
            record(cover_with(leaf.min_extension));
            if (leaf.max_size != leaf.min_size) record(cover_with(leaf.max_extension));
            return;
        }
        if (budget == 0) {
            // Residual still has a degree-3 vertex, so no cover fits the budget.
            ++out_.stats.leaves;
            out_.budget_limited = true;
            return;
        }

        // Include best.
        {
            std::vector<int> trail;
            in_cover_[size_t(best)] = 1;
            remove_vertex(best, trail);
            expand(budget - 1);
            undo(trail);
            in_cover_[size_t(best)] = 0;
        }
        // Exclude best: its residual neighborhood joins the cover.
        if (best_deg <= budget) {
            std::vector<int> trail;
            VertexSet nbrs;
            for (int u : g_.neighbors(best))
                if (alive_[size_t(u)]) nbrs.push_back(u);
            excluded_[size_t(best)] = 1;
            remove_vertex(best, trail);
            for (int u : nbrs) {
                in_cover_[size_t(u)] = 1;
                remove_vertex(u, trail);
            }
            expand(budget - int(nbrs.size()));
            undo(trail);
            for (int u : nbrs) in_cover_[size_t(u)] = 0;
            excluded_[size_t(best)] = 0;
        } else {
            out_.budget_limited = true;
        }
    }

    const Graph& g_;
    int k_;
    std::vector<char> alive_, in_cover_, excluded_;
    std::vector<int> deg_;
    long alive_edges_;
    BranchOutcome out_;
};

}  // namespace

BranchOutcome vc_and_vcplus_branching(const Graph& g, int k) {
    if (k < 0) throw ContractError("branching budget must be nonnegative");
    BranchSearch search(g, k);
    return search.run();
}

WellCoveredReport well_covered_via_branching(const Graph& g) {
    const int n = g.n();
    int k = n - int(greedy_maximal_independent_set(g).size());

    BranchOutcome out = vc_and_vcplus_branching(g, k);
    while (out.budget_limited && k < n) {
        k = std::min(n, std::max(2 * k, k + 1));
        out = vc_and_vcplus_branching(g, k);
    }
    // Rerun at the exact maximum so the reported tree is the budget = vc+ one.
    if (out.found && out.stats.k != out.max_cover) {
        BranchOutcome exact = vc_and_vcplus_branching(g, out.max_cover);
        exact.budget_limited = false;  // completeness at vc+ is guaranteed
        out = exact;
    }

    WellCoveredReport report;
    report.algorithm = "vcplus";
    report.tree = out.stats;
    report.max_leaf_constraints = out.max_leaf_constraints;
    report.vc = out.min_cover;
    report.vc_plus = out.max_cover;
    report.alpha = n - out.min_cover;
    report.well_covered = out.min_cover == out.max_cover;
    if (!report.well_covered) {
        report.witness_small = set_complement(n, out.witness_max);
        report.witness_large = set_complement(n, out.witness_min);
    }
    return report;
}

}  // namespace wcov
