#include "leaf_dp.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "bits.hpp"
#include "errors.hpp"

namespace wcov {

namespace {

using Mask = std::uint32_t;

// Chain states for the walk along a path or cycle. kHeadIn marks the first
// cycle vertex when it is taken into the cover: its witness is tracked by a
// separate flag because either cycle neighbor may provide it.
enum Chain : int { kOut = 0, kInSat = 1, kInNeeds = 2, kHeadIn = 3 };

struct StateKey {
    int chain;
    bool head_sat;
    Mask mask;
    bool operator<(const StateKey& o) const {
        if (chain != o.chain) return chain < o.chain;
        if (head_sat != o.head_sat) return head_sat < o.head_sat;
        return mask < o.mask;
    }
};

using Frontier = std::map<StateKey, Bits>;  // -> achievable |X| values

enum class CompKind { kPath, kCycleHeadOut, kCycleHeadIn };

// One DP run over a component in a fixed vertex order; keeps every frontier
// for backward extraction.
struct CompRun {
    CompKind kind;
    std::vector<int> order;           // component vertices in walk order
    std::vector<Frontier> frontiers;  // frontiers[i] = state after order[0..i]
};

// Accumulated achievable (mask, sizes) of one component over all of its runs.
struct CompTable {
    std::vector<CompRun> runs;
    std::map<Mask, Bits> result;
    int first_vertex = 0;
};

bool accepts(CompKind kind, int chain, bool head_sat) {
    switch (kind) {
        case CompKind::kPath: return chain == kOut || chain == kInSat;
        case CompKind::kCycleHeadOut: return chain == kInSat || chain == kInNeeds;
        case CompKind::kCycleHeadIn: return chain == kOut || (chain == kInSat && head_sat);
    }
    return false;
}

// Applies the transition for taking vertex `sat_mask`-tagged v out of / into
// the cover. Returns false when the choice is inconsistent.
bool step_out(int chain_prev, bool head_sat_prev, int& chain, bool& head_sat) {
    if (chain_prev == kOut) return false;  // edge to the previous vertex uncovered
    chain = kOut;
    head_sat = head_sat_prev || chain_prev == kHeadIn;
    return true;
}

bool step_in(int chain_prev, bool head_sat_prev, int& chain, bool& head_sat) {
    if (chain_prev == kInNeeds) return false;  // previous vertex loses its witness
    chain = (chain_prev == kOut) ? kInSat : kInNeeds;
    head_sat = head_sat_prev;
    return true;
}

void run_component(CompRun& run, const std::vector<Mask>& sat_of, int budget_cap) {
    const int len = int(run.order.size());
    run.frontiers.assign(size_t(len), {});

    Frontier& init = run.frontiers[0];
    const Mask sat0 = sat_of[size_t(run.order[0])];
    auto put = [budget_cap](Frontier& f, int chain, bool head_sat, Mask mask, int size) {
        auto [it, fresh] = f.try_emplace({chain, head_sat, mask}, Bits(budget_cap + 1));
        it->second.set(size);
    };
    switch (run.kind) {
        case CompKind::kPath:
            put(init, kOut, false, sat0, 0);
            put(init, kInNeeds, false, 0, 1);
            break;
        case CompKind::kCycleHeadOut:
            put(init, kOut, false, sat0, 0);
            break;
        case CompKind::kCycleHeadIn:
            put(init, kHeadIn, false, 0, 1);
            break;
    }

    for (int i = 1; i < len; ++i) {
        const Mask sat = sat_of[size_t(run.order[i])];
        Frontier& next = run.frontiers[size_t(i)];
        for (const auto& [key, sizes] : run.frontiers[size_t(i - 1)]) {
            int chain;
            bool head_sat;
            if (step_out(key.chain, key.head_sat, chain, head_sat)) {
                auto [it, fresh] = next.try_emplace({chain, head_sat, key.mask | sat}, Bits(sizes.size()));
                it->second |= sizes;
            }
            if (step_in(key.chain, key.head_sat, chain, head_sat)) {
                auto [it, fresh] = next.try_emplace({chain, head_sat, key.mask}, Bits(sizes.size()));
                it->second.or_shifted(sizes, 1);
            }
        }
    }
}

// Walks one run backward to recover an extension achieving (mask, size).
bool extract_from_run(const CompRun& run, const std::vector<Mask>& sat_of, Mask mask, int size,
                      std::vector<char>& chosen) {
    const int len = int(run.order.size());
    const Frontier& last = run.frontiers[size_t(len - 1)];
    StateKey cur{-1, false, 0};
    for (const auto& [key, sizes] : last) {
        if (key.mask != mask) continue;
        bool head_sat = key.head_sat || (run.kind == CompKind::kCycleHeadIn && key.chain == kOut);
        if (!accepts(run.kind, key.chain, head_sat)) continue;
        if (size < sizes.size() && sizes.test(size)) {
            cur = key;
            break;
        }
    }
    if (cur.chain < 0) return false;

    int cur_size = size;
    for (int i = len - 1; i >= 1; --i) {
        const bool took = cur.chain == kInSat || cur.chain == kInNeeds || cur.chain == kHeadIn;
        if (took) chosen[size_t(run.order[i])] = 1;
        const Mask sat = sat_of[size_t(run.order[i])];
        const int prev_size = took ? cur_size - 1 : cur_size;
        StateKey prev{-1, false, 0};
        for (const auto& [key, sizes] : run.frontiers[size_t(i - 1)]) {
            if (prev_size >= sizes.size() || !sizes.test(prev_size)) continue;
            int chain;
            bool head_sat;
            if (!took) {
                if (!step_out(key.chain, key.head_sat, chain, head_sat)) continue;
                if ((key.mask | sat) != cur.mask) continue;
            } else {
                if (!step_in(key.chain, key.head_sat, chain, head_sat)) continue;
                if (key.mask != cur.mask) continue;
            }
            if (chain != cur.chain || head_sat != cur.head_sat) continue;
            prev = key;
            break;
        }
        if (prev.chain < 0) return false;  // should not happen on a reachable state
        cur = prev;
        cur_size = prev_size;
    }
    if (cur.chain == kInSat || cur.chain == kInNeeds || cur.chain == kHeadIn)
        chosen[size_t(run.order[0])] = 1;
    return true;
}

}  // namespace

LeafOutcome solve_leaf(const LeafProblem& problem) {
    const Graph& g = *problem.graph;
    const int n = g.n();
    LeafOutcome outcome;

    // Active minimality constraints: each partial-cover vertex without an
    // excluded neighbor needs at least one residual neighbor left out of X.
    // Residual vertices cannot have excluded neighbors (every neighborhood of
    // an excluded vertex was taken into the cover when it was excluded), so no
    // other witnesses are possible for these.
    std::vector<VertexSet> constraints;
    for (int u = 0; u < n; ++u) {
        if (!problem.in_cover[size_t(u)]) continue;
        bool witnessed = false;
        VertexSet targets;
        for (int w : g.neighbors(u)) {
            if (problem.excluded[size_t(w)]) {
                witnessed = true;
                break;
            }
            if (problem.alive[size_t(w)]) targets.push_back(w);
        }
        if (witnessed) continue;
        if (targets.empty()) return outcome;  // no witness can ever exist
        constraints.push_back(std::move(targets));
    }
    std::sort(constraints.begin(), constraints.end(),
              [](const VertexSet& a, const VertexSet& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());
    // Drop supersets: satisfying the smaller set satisfies them for free.
    {
        std::vector<VertexSet> kept;
        for (const auto& c : constraints) {
            bool subsumed = false;
            for (const auto& k : kept)
                if (std::includes(c.begin(), c.end(), k.begin(), k.end())) {
                    subsumed = true;
                    break;
                }
            if (!subsumed) kept.push_back(c);
        }
        constraints = std::move(kept);
    }
    const int t = int(constraints.size());
    outcome.active_constraints = t;
    if (t > kMaxLeafConstraints)
        throw BudgetExceeded("leaf solver: " + std::to_string(t) + " active minimality constraints");

    std::vector<Mask> sat_of(size_t(n), 0);
    for (int j = 0; j < t; ++j)
        for (int v : constraints[size_t(j)]) sat_of[size_t(v)] |= Mask{1} << j;

    int alive_count = 0;
    for (int v = 0; v < n; ++v)
        if (problem.alive[size_t(v)]) ++alive_count;
    const int cap = alive_count;  // sizes range over 0..alive_count

    // Split the residual into components and run the DPs.
    std::vector<CompTable> comps;
    std::vector<char> seen(size_t(n), 0);
    auto alive_neighbors = [&](int v) {
        VertexSet nb;
        for (int u : g.neighbors(v))
            if (problem.alive[size_t(u)]) nb.push_back(u);
        return nb;
    };
    for (int s = 0; s < n; ++s) {
        if (!problem.alive[size_t(s)] || seen[size_t(s)]) continue;
        VertexSet comp{s};
        seen[size_t(s)] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (int u : alive_neighbors(comp[i]))
                if (!seen[size_t(u)]) {
                    seen[size_t(u)] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());

        CompTable table;
        table.first_vertex = comp[0];
        if (comp.size() == 1) {
            // Isolated residual vertex: it has no possible witness, so it must
            // stay out of X.
            Bits zero(cap + 1);
            zero.set(0);
            table.result[sat_of[size_t(comp[0])]] = std::move(zero);
            comps.push_back(std::move(table));
            continue;
        }
        int endpoint = -1;
        for (int v : comp)
            if (alive_neighbors(v).size() <= 1) {
                endpoint = v;
                break;
            }
        std::vector<int> order;
        int start = endpoint >= 0 ? endpoint : comp[0];
        order.push_back(start);
        int prev = -1, cur = start;
        while (true) {
            int next = -1;
            for (int u : alive_neighbors(cur))
                if (u != prev) {
                    next = u;
                    break;
                }
            if (next == -1 || next == start) break;
            order.push_back(next);
            prev = cur;
            cur = next;
        }

        if (endpoint >= 0) {
            table.runs.push_back({CompKind::kPath, order, {}});
        } else {
            table.runs.push_back({CompKind::kCycleHeadOut, order, {}});
            table.runs.push_back({CompKind::kCycleHeadIn, order, {}});
        }
        for (CompRun& run : table.runs) {
            run_component(run, sat_of, cap);
            const Frontier& last = run.frontiers.back();
            for (const auto& [key, sizes] : last) {
                bool head_sat = key.head_sat || (run.kind == CompKind::kCycleHeadIn && key.chain == kOut);
                if (!accepts(run.kind, key.chain, head_sat)) continue;
                auto [it, fresh] = table.result.try_emplace(key.mask, Bits(cap + 1));
                it->second |= sizes;
            }
        }
        comps.push_back(std::move(table));
    }
    std::sort(comps.begin(), comps.end(),
              [](const CompTable& a, const CompTable& b) { return a.first_vertex < b.first_vertex; });

    // Combine components: masks union, sizes add.
    std::vector<std::map<Mask, Bits>> prefix(comps.size() + 1);
    {
        Bits zero(cap + 1);
        zero.set(0);
        prefix[0][0] = std::move(zero);
    }
    for (size_t i = 0; i < comps.size(); ++i) {
        for (const auto& [gm, gsizes] : prefix[i])
            for (const auto& [lm, lsizes] : comps[i].result) {
                auto [it, fresh] = prefix[i + 1].try_emplace(gm | lm, Bits(cap + 1));
                Bits& target = it->second;
                gsizes.for_each([&](int a) { target.or_shifted(lsizes, a); });
            }
    }

    const Mask full = t == 32 ? ~Mask{0} : (Mask{1} << t) - 1;
    auto it = prefix[comps.size()].find(full);
    if (it == prefix[comps.size()].end()) return outcome;

    const Bits& achievable = it->second;
    outcome.feasible = true;
    outcome.max_size_any = achievable.highest();
    int lo = achievable.lowest();
    if (lo > problem.budget) return outcome;  // nothing within budget
    int hi = std::min(problem.budget, achievable.highest());
    while (hi >= 0 && !achievable.test(hi)) --hi;
    outcome.within_budget = true;
    outcome.min_size = lo;
    outcome.max_size = hi;

    // Recover one extension for each target size by walking the prefixes and
    // the per-component frontiers backward.
    auto extract = [&](int target_size) {
        std::vector<char> chosen(size_t(n), 0);
        Mask mask = full;
        int size = target_size;
        for (size_t i = comps.size(); i-- > 0;) {
            bool done = false;
            for (const auto& [gm, gsizes] : prefix[i]) {
                for (const auto& [lm, lsizes] : comps[i].result) {
                    if ((gm | lm) != mask) continue;
                    for (int a = 0; a <= size && !done; ++a) {
                        if (a < gsizes.size() && gsizes.test(a) && (size - a) < lsizes.size() &&
                            lsizes.test(size - a)) {
                            const int comp_size = size - a;
                            if (comps[i].runs.empty()) {
                                // isolated vertex, nothing chosen
                            } else {
                                bool ok = false;
                                for (const CompRun& run : comps[i].runs)
                                    if (extract_from_run(run, sat_of, lm, comp_size, chosen)) {
                                        ok = true;
                                        break;
                                    }
                                if (!ok) continue;
                            }
                            mask = gm;
                            size = a;
                            done = true;
                        }
                    }
                    if (done) break;
                }
                if (done) break;
            }
        }
        VertexSet ext;
        for (int v = 0; v < n; ++v)
            if (chosen[size_t(v)]) ext.push_back(v);
        return ext;
    };
    outcome.min_extension = extract(outcome.min_size);
    outcome.max_extension = extract(outcome.max_size);
    return outcome;
}

}  // namespace wcov
