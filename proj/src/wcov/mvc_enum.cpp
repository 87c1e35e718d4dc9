#include "mvc_enum.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace wcov {

namespace {

// Mutable view used by the bounded cover search: vertices are deleted by
// flipping alive flags and restored on backtrack.
class VcSearch {
public:
    explicit VcSearch(const Graph& g)
        : g_(g), alive_(size_t(g.n()), 1), deg_(size_t(g.n())), alive_edges_(g.m()) {
        for (int v = 0; v < g.n(); ++v) deg_[size_t(v)] = g.degree(v);
    }

    bool solve(int budget, VertexSet& out) {
        cover_.clear();
        if (!branch(budget)) return false;
        out = cover_;
        std::sort(out.begin(), out.end());
        return true;
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

    void undo(std::vector<int>& trail, size_t mark, size_t cover_mark) {
        while (trail.size() > mark) {
            int v = trail.back();
            trail.pop_back();
            alive_[size_t(v)] = 1;
            for (int u : g_.neighbors(v))
                if (alive_[size_t(u)]) {
                    ++deg_[size_t(u)];
                    ++alive_edges_;
                }
        }
        cover_.resize(cover_mark);
    }

    bool branch(int budget) {
        std::vector<int> trail;
        size_t cover_mark = cover_.size();

        // Degree-1 simplification: take the neighbor of any pendant vertex.
        bool changed = true;
        while (changed && budget >= 0) {
            changed = false;
            for (int v = 0; v < g_.n() && !changed; ++v) {
                if (!alive_[size_t(v)] || deg_[size_t(v)] != 1) continue;
                int u = -1;
                for (int w : g_.neighbors(v))
                    if (alive_[size_t(w)]) {
                        u = w;
                        break;
                    }
                cover_.push_back(u);
                remove_vertex(u, trail);
                --budget;
                changed = true;
            }
        }

        if (budget >= 0 && alive_edges_ == 0) return true;
        if (budget <= 0) {
            undo(trail, 0, cover_mark);
            return false;
        }

        int best = -1, best_deg = -1;
        for (int v = 0; v < g_.n(); ++v)
            if (alive_[size_t(v)] && deg_[size_t(v)] > best_deg) {
                best_deg = deg_[size_t(v)];
                best = v;
            }

        // Include best.
        {
            size_t mark = trail.size(), cmark = cover_.size();
            cover_.push_back(best);
            remove_vertex(best, trail);
            if (branch(budget - 1)) return true;
            undo(trail, mark, cmark);
        }
        // Exclude best: its whole alive neighborhood goes in.
        if (best_deg <= budget) {
            size_t mark = trail.size(), cmark = cover_.size();
            VertexSet nbrs;
            for (int u : g_.neighbors(best))
                if (alive_[size_t(u)]) nbrs.push_back(u);
            remove_vertex(best, trail);
            for (int u : nbrs) {
                cover_.push_back(u);
                remove_vertex(u, trail);
            }
            if (branch(budget - int(nbrs.size()))) return true;
            undo(trail, mark, cmark);
        }
        undo(trail, 0, cover_mark);
        return false;
    }

    const Graph& g_;
    std::vector<char> alive_;
    std::vector<int> deg_;
    long alive_edges_;
    VertexSet cover_;
};

}  // namespace

std::optional<VertexSet> minimum_vertex_cover(const Graph& g, std::optional<int> budget) {
    int lower = int(greedy_maximal_matching(g).size());
    int upper = budget.value_or(g.n());
    VcSearch search(g);
    VertexSet cover;
    for (int k = std::min(lower, upper); k <= upper; ++k)
        if (search.solve(k, cover)) return cover;
    return std::nullopt;
}

PartitionCandidate classify_partition(const Graph& g, const VertexSet& cmin, const VertexSet& b) {
    PartitionCandidate pc;
    pc.b = b;
    pc.a = set_minus(cmin, b);
    VertexSet nb;
    {
        std::vector<char> in_b(size_t(g.n()), 0);
        for (int v : b) in_b[size_t(v)] = 1;
        std::vector<char> in_nb(size_t(g.n()), 0);
        for (int v : b)
            for (int u : g.neighbors(v))
                if (!in_b[size_t(u)]) in_nb[size_t(u)] = 1;
        for (int v = 0; v < g.n(); ++v)
            if (in_nb[size_t(v)]) nb.push_back(v);
    }
    pc.candidate = set_union(pc.a, nb);
    if (!is_vertex_cover(g, pc.candidate))
        pc.verdict = PartitionVerdict::kNotACover;
    else if (is_minimal_vertex_cover(g, pc.candidate))
        pc.verdict = PartitionVerdict::kMinimalCover;
    else
        pc.verdict = PartitionVerdict::kCoverNotMinimal;
    return pc;
}

EnumerateResult enumerate_minimal_vertex_covers(const Graph& g, const VertexSet& cmin,
                                                const std::function<void(const VertexSet&)>& emit,
                                                const EnumerateOptions& options) {
    if (!is_vertex_cover(g, cmin)) throw ContractError("reference set is not a vertex cover");
    {
        auto best = minimum_vertex_cover(g);
        if (!best || best->size() != cmin.size())
            throw ContractError("reference cover is not minimum");
    }

    const int k = int(cmin.size());
    if (k >= 63) throw GuardExceeded("2^" + std::to_string(k) + " partitions");
    EnumerateResult result;
    std::set<VertexSet> seen;

    // B runs over subsets of cmin in binary-counter order. Candidates are only
    // materialized when B is independent: with B dependent, the edge inside B
    // is uncovered and the partition is skipped. nbr_in_b counts make the
    // independence test and candidate construction incremental.
    std::vector<char> in_b(size_t(g.n()), 0);
    std::vector<int> nbr_in_b(size_t(g.n()), 0);
    long edges_in_b = 0;

    auto flip = [&](int v) {
        if (in_b[size_t(v)]) {
            in_b[size_t(v)] = 0;
            for (int u : g.neighbors(v)) {
                --nbr_in_b[size_t(u)];
                if (in_b[size_t(u)]) --edges_in_b;
            }
        } else {
            in_b[size_t(v)] = 1;
            for (int u : g.neighbors(v)) {
                ++nbr_in_b[size_t(u)];
                if (in_b[size_t(u)]) ++edges_in_b;
            }
        }
    };

    auto process = [&]() -> bool {  // returns false to stop early
        ++result.partitions;
        if (edges_in_b != 0) return true;
        VertexSet candidate;
        for (int v : cmin)
            if (!in_b[size_t(v)]) candidate.push_back(v);
        for (int v = 0; v < g.n(); ++v)
            if (!in_b[size_t(v)] && nbr_in_b[size_t(v)] > 0 && !set_contains(cmin, v))
                candidate.push_back(v);
        std::sort(candidate.begin(), candidate.end());
        if (!is_minimal_vertex_cover(g, candidate)) return true;
        if (!seen.insert(candidate).second) return true;

        ++result.emitted;
        int size = int(candidate.size());
        if (result.min_size < 0 || size < result.min_size) {
            result.min_size = size;
            result.smallest = candidate;
        }
        if (size > result.max_size) {
            result.max_size = size;
            result.largest = candidate;
        }
        if (emit) emit(candidate);
        if (options.decide_only && size != k) {
            result.stopped_early = true;
            return false;
        }
        return true;
    };

    if (!process()) return result;
    for (std::uint64_t counter = 1; counter < (std::uint64_t{1} << k); ++counter) {
        // Standard binary-counter increment: flip the vertices whose bits change.
        std::uint64_t changed = counter ^ (counter - 1);
        for (int bit = 0; changed; ++bit, changed >>= 1)
            if (changed & 1) flip(cmin[size_t(bit)]);
        if (!process()) return result;
    }
    return result;
}

WellCoveredReport well_covered_via_mvc_enum(const Graph& g, bool decide_only) {
    WellCoveredReport report;
    report.algorithm = "mvc-enum";
    VertexSet cmin = *minimum_vertex_cover(g);

    EnumerateOptions options;
    options.decide_only = decide_only;
    EnumerateResult r = enumerate_minimal_vertex_covers(g, cmin, nullptr, options);

    report.partitions = r.partitions;
    report.vc = int(cmin.size());
    report.alpha = g.n() - report.vc;
    report.well_covered = (r.min_size == r.max_size) && !r.stopped_early;
    if (!r.stopped_early) report.vc_plus = r.max_size;
    if (!report.well_covered) {
        report.witness_small = set_complement(g.n(), r.largest);
        report.witness_large = set_complement(g.n(), r.smallest);
    }
    return report;
}

}  // namespace wcov
