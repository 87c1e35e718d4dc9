#include "degen.hpp"

#include <algorithm>
#include <map>

namespace wcov {

namespace {

class DegenSearch {
public:
    DegenSearch(const Graph& g, bool early_exit)
        : g_(g), early_exit_(early_exit), alive_(size_t(g.n()), 1), deg_(size_t(g.n())),
          alive_count_(g.n()) {
        for (int v = 0; v < g.n(); ++v) deg_[size_t(v)] = g.degree(v);
    }

    void run() {
        chosen_.clear();
        expand();
    }

    std::int64_t nodes = 0;
    std::int64_t leaves = 0;
    std::map<int, VertexSet> depth_witness;  // one chosen set per observed leaf depth
    bool stopped_early = false;

private:
    void remove_closed(int v, std::vector<int>& trail) {
        VertexSet victims{v};
        for (int u : g_.neighbors(v))
            if (alive_[size_t(u)]) victims.push_back(u);
        for (int w : victims) {
            alive_[size_t(w)] = 0;
            --alive_count_;
            trail.push_back(w);
            for (int u : g_.neighbors(w))
                if (alive_[size_t(u)]) --deg_[size_t(u)];
        }
    }

    void undo(std::vector<int>& trail) {
        while (!trail.empty()) {
            int w = trail.back();
            trail.pop_back();
            alive_[size_t(w)] = 1;
            ++alive_count_;
            for (int u : g_.neighbors(w))
                if (alive_[size_t(u)]) ++deg_[size_t(u)];
        }
    }

    bool done() const { return early_exit_ && depth_witness.size() >= 2; }

    void expand() {
        ++nodes;
        if (alive_count_ == 0) {
            ++leaves;
            int depth = int(chosen_.size());
            if (!depth_witness.count(depth)) {
                VertexSet w(chosen_);
                std::sort(w.begin(), w.end());
                depth_witness.emplace(depth, std::move(w));
                if (done()) stopped_early = true;
            }
            return;
        }
        int v = -1, v_deg = g_.n();
        for (int u = 0; u < g_.n(); ++u)
            if (alive_[size_t(u)] && deg_[size_t(u)] < v_deg) {
                v_deg = deg_[size_t(u)];
                v = u;
            }
        VertexSet closed{v};
        for (int u : g_.neighbors(v))
            if (alive_[size_t(u)]) closed.push_back(u);
        std::sort(closed.begin(), closed.end());
        for (int u : closed) {
            std::vector<int> trail;
            chosen_.push_back(u);
            remove_closed(u, trail);
            expand();
            undo(trail);
            chosen_.pop_back();
            if (done()) return;
        }
    }

    const Graph& g_;
    bool early_exit_;
    std::vector<char> alive_;
    std::vector<int> deg_;
    int alive_count_;
    VertexSet chosen_;
};

}  // namespace

WellCoveredReport well_covered_degenerate(const Graph& g, const DegenOptions& options) {
    DegenSearch search(g, options.early_exit);
    search.run();

    WellCoveredReport report;
    report.algorithm = "degen";
    report.tree.leaves = search.leaves;
    report.tree.nodes = search.nodes;
    report.well_covered = search.depth_witness.size() <= 1;
    if (report.well_covered) {
        int depth = search.depth_witness.empty() ? 0 : search.depth_witness.begin()->first;
        report.alpha = depth;
        report.vc = g.n() - depth;
        report.vc_plus = report.vc;
    } else {
        report.witness_small = search.depth_witness.begin()->second;
        report.witness_large = search.depth_witness.rbegin()->second;
        if (!search.stopped_early) {
            // The full tree saw every maximal independent set size.
            report.alpha = search.depth_witness.rbegin()->first;
            report.vc = g.n() - report.alpha;
            report.vc_plus = g.n() - search.depth_witness.begin()->first;
        }
    }
    return report;
}

TreeStats degen_tree_stats(const Graph& g) {
    DegenOptions options;
    options.early_exit = false;
    return well_covered_degenerate(g, options).tree;
}

}  // namespace wcov
