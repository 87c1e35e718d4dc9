#include "oracle.hpp"

#include "errors.hpp"

namespace wcov {

namespace {

// Maximal independent sets of g are the maximal cliques of its complement, so
// this is Bron-Kerbosch with pivoting run over the non-adjacency rows.
class MisEnumerator {
public:
    MisEnumerator(const Graph& g, const std::function<void(const VertexSet&)>& emit, std::uint64_t budget)
        : n_(g.n()), emit_(emit), budget_(budget) {
        nonadj_.reserve(size_t(n_));
        for (int v = 0; v < n_; ++v) {
            Bits row(n_);
            for (int u = 0; u < n_; ++u)
                if (u != v) row.set(u);
            for (int u : g.neighbors(v)) row.reset(u);
            nonadj_.push_back(std::move(row));
        }
    }

    void run() {
        Bits p(n_), x(n_);
        for (int v = 0; v < n_; ++v) p.set(v);
        VertexSet current;
        expand(current, p, x);
    }

private:
    void expand(VertexSet& current, Bits p, Bits x) {
        if (p.none() && x.none()) {
            if (++emitted_ > budget_) throw BudgetExceeded("maximal independent set enumeration");
            emit_(current);
            return;
        }
        int pivot = -1, best = -1;
        auto consider = [&](int u) {
            int gain = p.count_and(nonadj_[size_t(u)]);
            if (gain > best) {
                best = gain;
                pivot = u;
            }
        };
        p.for_each(consider);
        x.for_each(consider);

        Bits cand = p.and_not(nonadj_[size_t(pivot)]);
        VertexSet order;
        cand.for_each([&](int v) { order.push_back(v); });
        for (int v : order) {
            current.push_back(v);
            expand(current, p & nonadj_[size_t(v)], x & nonadj_[size_t(v)]);
            current.pop_back();
            p.reset(v);
            x.set(v);
        }
    }

    int n_;
    std::vector<Bits> nonadj_;
    const std::function<void(const VertexSet&)>& emit_;
    std::uint64_t budget_;
    std::uint64_t emitted_ = 0;
};

}  // namespace

void enumerate_maximal_independent_sets(const Graph& g,
                                        const std::function<void(const VertexSet&)>& emit,
                                        std::uint64_t budget) {
    auto sorted_emit = [&emit](const VertexSet& s) {
        VertexSet copy(s);
        std::sort(copy.begin(), copy.end());
        emit(copy);
    };
    MisEnumerator(g, sorted_emit, budget).run();
}

void enumerate_minimal_vertex_covers_oracle(const Graph& g,
                                            const std::function<void(const VertexSet&)>& emit,
                                            std::uint64_t budget) {
    enumerate_maximal_independent_sets(
        g, [&](const VertexSet& s) { emit(set_complement(g.n(), s)); }, budget);
}

GraphStats graph_stats_oracle(const Graph& g, std::uint64_t budget) {
    GraphStats stats;
    int min_size = g.n() + 1, max_size = -1;
    enumerate_maximal_independent_sets(
        g,
        [&](const VertexSet& s) {
            min_size = std::min(min_size, int(s.size()));
            max_size = std::max(max_size, int(s.size()));
        },
        budget);
    stats.alpha = max_size;
    stats.i_min = min_size;
    stats.vc = g.n() - stats.alpha;
    stats.vc_plus = g.n() - stats.i_min;
    stats.degeneracy = degeneracy_ordering(g).degeneracy;
    return stats;
}

WellCoveredReport is_well_covered_oracle(const Graph& g, std::uint64_t budget) {
    WellCoveredReport report;
    report.algorithm = "oracle";
    VertexSet smallest, largest;
    int min_size = g.n() + 1, max_size = -1;
    std::uint64_t count = 0;
    enumerate_maximal_independent_sets(
        g,
        [&](const VertexSet& s) {
            ++count;
            if (int(s.size()) < min_size) {
                min_size = int(s.size());
                smallest = s;
            }
            if (int(s.size()) > max_size) {
                max_size = int(s.size());
                largest = s;
            }
        },
        budget);
    report.sets_enumerated = count;
    report.alpha = max_size;
    report.vc = g.n() - max_size;
    report.vc_plus = g.n() - min_size;
    report.well_covered = (min_size == max_size);
    if (!report.well_covered) {
        report.witness_small = std::move(smallest);
        report.witness_large = std::move(largest);
    }
    return report;
}

}  // namespace wcov
