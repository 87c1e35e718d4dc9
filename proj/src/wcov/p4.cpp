#include "p4.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"
#include "oracle.hpp"

namespace wcov {

std::vector<std::array<int, 4>> list_induced_p4s(const Graph& g) {
    std::vector<std::array<int, 4>> p4s;
    auto rows = g.adjacency_rows();
    for (int x = 0; x < g.n(); ++x)
        for (int y : g.neighbors(x)) {
            // w-x-y-z with the middle edge (x,y); w < z kills the reversal.
            for (int w : g.neighbors(x)) {
                if (w == y || rows[size_t(y)].test(w)) continue;
                for (int z : g.neighbors(y)) {
                    if (z == x || z <= w || rows[size_t(x)].test(z)) continue;
                    if (rows[size_t(w)].test(z)) continue;
                    p4s.push_back({w, x, y, z});
                }
            }
        }
    return p4s;
}

std::vector<VertexSet> p_components(const Graph& g) {
    if (g.n() > kP4EnumerationGuard)
        throw GuardExceeded("p_components requires n <= " + std::to_string(kP4EnumerationGuard));
    std::vector<int> parent(static_cast<size_t>(g.n()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[size_t(v)] != v) v = parent[size_t(v)] = parent[size_t(parent[size_t(v)])];
        return v;
    };
    for (const auto& p4 : list_induced_p4s(g))
        for (int i = 1; i < 4; ++i) parent[size_t(find(p4[size_t(i)]))] = find(p4[0]);

    std::vector<VertexSet> comps;
    std::vector<int> comp_of(size_t(g.n()), -1);
    for (int v = 0; v < g.n(); ++v) {
        int root = find(v);
        if (comp_of[size_t(root)] == -1) {
            comp_of[size_t(root)] = int(comps.size());
            comps.push_back({});
        }
        comps[size_t(comp_of[size_t(root)])].push_back(v);
    }
    return comps;
}

namespace {

struct SplitCandidate {
    PseudoSplitPartition partition;
};

// Enumerates valid pseudo-split partitions (nonempty clique and stable parts),
// calling `take` on each; stops when `take` returns true.
bool for_each_pseudo_split(const Graph& g, const std::function<bool(PseudoSplitPartition&&)>& take) {
    const int n = g.n();
    if (n < 2) return false;
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    auto rows = g.adjacency_rows();

    for (int a = 1; a < n; ++a) {
        for (int b = 0; a + b < n; ++b) {
            // Degrees strictly separate the parts: clique >= a+b, middle part
            // in [a, a+b-1], stable <= a-1.
            if (g.degree(order[size_t(a - 1)]) < a + b) continue;
            if (b > 0 && (g.degree(order[size_t(a)]) > a + b - 1 || g.degree(order[size_t(a + b - 1)]) < a))
                continue;
            if (g.degree(order[size_t(a + b)]) > a - 1) continue;

            PseudoSplitPartition p;
            p.c.assign(order.begin(), order.begin() + a);
            p.r.assign(order.begin() + a, order.begin() + a + b);
            p.s.assign(order.begin() + a + b, order.end());
            std::sort(p.c.begin(), p.c.end());
            std::sort(p.r.begin(), p.r.end());
            std::sort(p.s.begin(), p.s.end());

            Bits s_mask(n), c_mask(n);
            for (int v : p.s) s_mask.set(v);
            for (int v : p.c) c_mask.set(v);
            bool ok = true;
            for (int v : p.c) {
                if (rows[size_t(v)].count_and(c_mask) != a - 1) { ok = false; break; }     // clique
                if (rows[size_t(v)].count_and(s_mask) == 0) { ok = false; break; }         // stable neighbor
            }
            for (size_t i = 0; ok && i < p.s.size(); ++i) {
                int v = p.s[i];
                if (rows[size_t(v)].count_and(s_mask) != 0) ok = false;                    // independent
                else if (rows[size_t(v)].count_and(c_mask) == a) ok = false;               // non-neighbor in c
            }
            for (size_t i = 0; ok && i < p.r.size(); ++i) {
                int v = p.r[i];
                if (rows[size_t(v)].count_and(c_mask) != a) ok = false;                    // complete to c
                else if (rows[size_t(v)].count_and(s_mask) != 0) ok = false;               // anticomplete to s
            }
            if (ok && take(std::move(p))) return true;
        }
    }
    return false;
}

std::optional<SpiderPartition> try_spider(const Graph& g) {
    std::optional<SpiderPartition> found;
    for_each_pseudo_split(g, [&](PseudoSplitPartition&& p) {
        const int k = int(p.c.size());
        if (k < 2 || p.s.size() != p.c.size()) return false;
        std::vector<char> in_c(size_t(g.n()), 0);
        for (int v : p.c) in_c[size_t(v)] = 1;

        std::vector<int> partner(size_t(p.s.size()), -1);
        bool thin = true, thick = true;
        for (size_t i = 0; i < p.s.size(); ++i) {
            int cnt = 0;
            for (int u : g.neighbors(p.s[i]))
                if (in_c[size_t(u)]) ++cnt;
            if (cnt != 1) thin = false;
            if (cnt != k - 1) thick = false;
        }
        if (k == 2 && thick) thin = true;  // the two shapes coincide at k = 2
        SpiderKind kind;
        if (thin) {
            kind = SpiderKind::kThin;
            for (size_t i = 0; i < p.s.size(); ++i) {
                int c = -1;
                for (int u : g.neighbors(p.s[i]))
                    if (in_c[size_t(u)]) { c = u; break; }
                partner[i] = c;
            }
        } else if (thick) {
            kind = SpiderKind::kThick;
            for (size_t i = 0; i < p.s.size(); ++i) {
                std::vector<char> hit(size_t(g.n()), 0);
                for (int u : g.neighbors(p.s[i]))
                    if (in_c[size_t(u)]) hit[size_t(u)] = 1;
                for (int c : p.c)
                    if (!hit[size_t(c)]) { partner[i] = c; break; }
            }
        } else {
            return false;
        }
        std::vector<char> used(size_t(g.n()), 0);
        for (int c : partner) {
            if (c < 0 || used[size_t(c)]) return false;  // pairing must be a bijection
            used[size_t(c)] = 1;
        }
        SpiderPartition sp;
        sp.r = p.r;
        sp.kind = kind;
        for (size_t i = 0; i < p.s.size(); ++i) {
            sp.stable_groups.push_back({p.s[i]});
            sp.clique_groups.push_back({partner[i]});
        }
        found = std::move(sp);
        return true;
    });
    return found;
}

std::vector<std::pair<std::pair<int, int>, SubstKind>> twin_pairs(const Graph& g) {
    std::vector<std::pair<std::pair<int, int>, SubstKind>> pairs;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            auto nu = g.neighbors(u), nv = g.neighbors(v);
            if (g.has_edge(u, v)) {
                VertexSet a(nu.begin(), nu.end()), b(nv.begin(), nv.end());
                a.erase(std::find(a.begin(), a.end(), v));
                b.erase(std::find(b.begin(), b.end(), u));
                if (a == b) pairs.push_back({{u, v}, SubstKind::kClique2});
            } else {
                if (std::equal(nu.begin(), nu.end(), nv.begin(), nv.end()))
                    pairs.push_back({{u, v}, SubstKind::kCoClique2});
            }
        }
    return pairs;
}

}  // namespace

std::optional<PseudoSplitPartition> pseudo_split_partition(const Graph& g) {
    std::optional<PseudoSplitPartition> found;
    for_each_pseudo_split(g, [&](PseudoSplitPartition&& p) {
        found = std::move(p);
        return true;
    });
    return found;
}

std::optional<SpiderPartition> quasi_spider_partition(const Graph& g) {
    if (auto plain = try_spider(g)) return plain;

    for (const auto& [pair, kind] : twin_pairs(g)) {
        auto [u, v] = pair;
        VertexSet keep;
        for (int w = 0; w < g.n(); ++w)
            if (w != v) keep.push_back(w);
        InducedSubgraph contracted = induced_subgraph(g, keep);
        auto spider = try_spider(contracted.graph);
        if (!spider) continue;

        SpiderPartition sp;
        sp.kind = spider->kind;
        auto lift = [&](const VertexSet& s) {
            VertexSet out;
            for (int w : s) out.push_back(contracted.to_original[size_t(w)]);
            std::sort(out.begin(), out.end());
            return out;
        };
        sp.r = lift(spider->r);
        bool placed = false;
        for (size_t i = 0; i < spider->clique_groups.size(); ++i) {
            VertexSet cg = lift(spider->clique_groups[i]);
            VertexSet sg = lift(spider->stable_groups[i]);
            if (cg.size() == 1 && cg[0] == u) {
                cg = {std::min(u, v), std::max(u, v)};
                sp.substitution = SpiderSubstitution{true, int(i), kind, {cg[0], cg[1]}};
                placed = true;
            } else if (sg.size() == 1 && sg[0] == u) {
                sg = {std::min(u, v), std::max(u, v)};
                sp.substitution = SpiderSubstitution{false, int(i), kind, {sg[0], sg[1]}};
                placed = true;
            }
            sp.clique_groups.push_back(std::move(cg));
            sp.stable_groups.push_back(std::move(sg));
        }
        if (!placed) continue;  // the twins sit in r; not a head substitution
        return sp;
    }
    return std::nullopt;
}

std::optional<PComponentSeparation> separable_p_component(const Graph& g) {
    auto comps = p_components(g);
    if (comps.size() == 1 && int(comps[0].size()) == g.n())
        throw ContractError("separable_p_component: graph is p-connected");

    auto rows = g.adjacency_rows();
    for (const auto& h : comps) {
        if (h.size() < 4 || int(h.size()) == g.n()) continue;
        Bits outside(g.n());
        for (int v = 0; v < g.n(); ++v) outside.set(v);
        for (int v : h) outside.reset(v);
        const int outside_count = outside.count();

        PComponentSeparation sep;
        sep.h = h;
        bool ok = true;
        for (int v : h) {
            int cnt = rows[size_t(v)].count_and(outside);
            if (cnt == outside_count)
                sep.h1.push_back(v);
            else if (cnt == 0)
                sep.h2.push_back(v);
            else {
                ok = false;
                break;
            }
        }
        if (!ok || sep.h1.empty()) continue;

        std::vector<char> part(size_t(g.n()), 0);  // 1 = h1, 2 = h2
        for (int v : sep.h1) part[size_t(v)] = 1;
        for (int v : sep.h2) part[size_t(v)] = 2;
        InducedSubgraph hg = induced_subgraph(g, h);
        for (const auto& p4 : list_induced_p4s(hg.graph)) {
            int w = part[size_t(hg.to_original[size_t(p4[0])])];
            int x = part[size_t(hg.to_original[size_t(p4[1])])];
            int y = part[size_t(hg.to_original[size_t(p4[2])])];
            int z = part[size_t(hg.to_original[size_t(p4[3])])];
            bool crossing = (w == 2 || x == 2 || y == 2 || z == 2) && (w == 1 || x == 1 || y == 1 || z == 1);
            if (crossing && !(x == 1 && y == 1 && w == 2 && z == 2)) {
                ok = false;
                break;
            }
        }
        if (ok) return sep;
    }
    return std::nullopt;
}

namespace {

bool looks_like_p5(const Graph& g) {
    if (g.n() != 5 || g.m() != 4) return false;
    int ones = 0, twos = 0;
    for (int v = 0; v < 5; ++v) {
        if (g.degree(v) == 1) ++ones;
        else if (g.degree(v) == 2) ++twos;
        else return false;
    }
    return ones == 2 && twos == 3 && connected_components(g).size() == 1;
}

bool looks_like_c5(const Graph& g) {
    if (g.n() != 5 || g.m() != 5) return false;
    for (int v = 0; v < 5; ++v)
        if (g.degree(v) != 2) return false;
    return connected_components(g).size() == 1;
}

}  // namespace

DecompositionCase decompose_step(const Graph& g, P4Mode mode, int q) {
    DecompositionCase dc;
    if (g.n() <= 1) {
        dc.tag = DecompositionCase::Tag::kSingleVertex;
        return dc;
    }
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        dc.tag = DecompositionCase::Tag::kUnion;
        dc.parts = std::move(comps);
        return dc;
    }
    auto co_comps = connected_components(complement(g));
    if (co_comps.size() > 1) {
        dc.tag = DecompositionCase::Tag::kJoin;
        dc.parts = std::move(co_comps);
        return dc;
    }
    if (mode == P4Mode::kExtendedP4Laden && g.n() == 5) {
        if (looks_like_c5(g)) {
            dc.tag = DecompositionCase::Tag::kC5;
            return dc;
        }
        if (looks_like_p5(g)) {
            dc.tag = DecompositionCase::Tag::kP5;
            return dc;
        }
        if (looks_like_p5(complement(g))) {
            dc.tag = DecompositionCase::Tag::kP5Bar;
            return dc;
        }
    }
    if (auto ps = pseudo_split_partition(g)) {
        dc.tag = DecompositionCase::Tag::kPseudoSplit;
        dc.pseudo_split = std::move(ps);
        return dc;
    }
    if (auto sp = quasi_spider_partition(g)) {
        dc.tag = DecompositionCase::Tag::kQuasiSpider;
        dc.spider = std::move(sp);
        return dc;
    }
    if (mode == P4Mode::kQQ4) {
        auto pcs = p_components(g);
        bool p_connected = pcs.size() == 1 && int(pcs[0].size()) == g.n();
        if (!p_connected) {
            if (auto sep = separable_p_component(g); sep && int(sep->h.size()) < q) {
                dc.tag = DecompositionCase::Tag::kPComponent;
                dc.separation = std::move(sep);
                return dc;
            }
        }
        if (g.n() < q) {
            dc.tag = DecompositionCase::Tag::kSmall;
            return dc;
        }
    }
    throw DecompositionFailed("no case applies to a graph with " + std::to_string(g.n()) + " vertices",
                              to_edge_list(g));
}

namespace {

struct DpResult {
    bool wc = true;
    int alpha = 0;
    VertexSet max_is;  // one maximum independent set, original ids
    std::optional<std::pair<VertexSet, VertexSet>> witnesses;
};

VertexSet translate(const VertexSet& local, const std::vector<int>& to_orig) {
    VertexSet out;
    out.reserve(local.size());
    for (int v : local) out.push_back(to_orig[size_t(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

void order_witnesses(DpResult& r, VertexSet a, VertexSet b) {
    if (a.size() > b.size()) std::swap(a, b);
    r.witnesses = {std::move(a), std::move(b)};
}

// Oracle pass that also keeps a maximum set, for the base cases.
DpResult oracle_result(const Graph& g, const std::vector<int>& to_orig, std::uint64_t budget) {
    DpResult r;
    VertexSet smallest, largest;
    int min_size = g.n() + 1, max_size = -1;
    enumerate_maximal_independent_sets(
        g,
        [&](const VertexSet& s) {
            if (int(s.size()) < min_size) { min_size = int(s.size()); smallest = s; }
            if (int(s.size()) > max_size) { max_size = int(s.size()); largest = s; }
        },
        budget);
    r.alpha = max_size;
    r.max_is = translate(largest, to_orig);
    r.wc = min_size == max_size;
    if (!r.wc) r.witnesses = {translate(smallest, to_orig), translate(largest, to_orig)};
    return r;
}

class FewP4Solver {
public:
    FewP4Solver(P4Mode mode, int q, std::uint64_t budget) : mode_(mode), q_(q), budget_(budget) {}

    DpResult solve(const Graph& g, const std::vector<int>& to_orig) {
        if (g.n() == 0) return {};
        DecompositionCase dc = decompose_step(g, mode_, q_);
        switch (dc.tag) {
            case DecompositionCase::Tag::kSingleVertex: {
                DpResult r;
                r.alpha = 1;
                r.max_is = {to_orig[0]};
                return r;
            }
            case DecompositionCase::Tag::kUnion: return solve_union(g, to_orig, dc.parts);
            case DecompositionCase::Tag::kJoin: return solve_join(g, to_orig, dc.parts);
            case DecompositionCase::Tag::kC5:
            case DecompositionCase::Tag::kP5:
            case DecompositionCase::Tag::kP5Bar:
            case DecompositionCase::Tag::kSmall: return oracle_result(g, to_orig, budget_);
            case DecompositionCase::Tag::kPseudoSplit: return solve_pseudo_split(g, to_orig, *dc.pseudo_split);
            case DecompositionCase::Tag::kQuasiSpider: return solve_quasi_spider(g, to_orig, *dc.spider);
            case DecompositionCase::Tag::kPComponent: return solve_p_component(g, to_orig, *dc.separation);
        }
        throw ContractError("unreachable decomposition tag");
    }

private:
    DpResult recurse(const Graph& g, const std::vector<int>& to_orig, const VertexSet& part) {
        InducedSubgraph sub = induced_subgraph(g, part);
        std::vector<int> comp(sub.to_original.size());
        for (size_t i = 0; i < comp.size(); ++i) comp[i] = to_orig[size_t(sub.to_original[i])];
        return solve(sub.graph, comp);
    }

    DpResult solve_union(const Graph& g, const std::vector<int>& to_orig,
                         const std::vector<VertexSet>& parts) {
        DpResult r;
        std::vector<DpResult> children;
        for (const auto& part : parts) children.push_back(recurse(g, to_orig, part));
        for (const auto& ch : children) {
            r.alpha += ch.alpha;
            r.max_is = set_union(r.max_is, ch.max_is);
            r.wc = r.wc && ch.wc;
        }
        for (size_t i = 0; i < children.size(); ++i) {
            if (children[i].wc) continue;
            // Complete the failing part's witnesses with maximal sets elsewhere.
            VertexSet rest;
            for (size_t j = 0; j < children.size(); ++j)
                if (j != i) rest = set_union(rest, children[j].max_is);
            order_witnesses(r, set_union(children[i].witnesses->first, rest),
                            set_union(children[i].witnesses->second, rest));
            break;
        }
        return r;
    }

    DpResult solve_join(const Graph& g, const std::vector<int>& to_orig,
                        const std::vector<VertexSet>& parts) {
        DpResult r;
        std::vector<DpResult> children;
        for (const auto& part : parts) children.push_back(recurse(g, to_orig, part));
        size_t best = 0;
        bool alphas_equal = true;
        for (size_t i = 0; i < children.size(); ++i) {
            if (children[i].alpha > children[best].alpha) best = i;
            if (children[i].alpha != children[0].alpha) alphas_equal = false;
        }
        r.alpha = children[best].alpha;
        r.max_is = children[best].max_is;
        r.wc = alphas_equal;
        for (const auto& ch : children) r.wc = r.wc && ch.wc;
        if (!r.wc) {
            // A maximal set of one side is maximal in the join.
            for (const auto& ch : children)
                if (!ch.wc) {
                    order_witnesses(r, ch.witnesses->first, ch.witnesses->second);
                    return r;
                }
            size_t worst = 0;
            for (size_t i = 0; i < children.size(); ++i)
                if (children[i].alpha < children[worst].alpha) worst = i;
            order_witnesses(r, children[worst].max_is, children[best].max_is);
        }
        return r;
    }

    DpResult solve_pseudo_split(const Graph& g, const std::vector<int>& to_orig,
                                const PseudoSplitPartition& p) {
        DpResult child = recurse(g, to_orig, p.r);
        DpResult r;
        VertexSet s_orig = translate(p.s, to_orig);
        r.alpha = int(p.s.size()) + child.alpha;
        r.max_is = set_union(s_orig, child.max_is);

        std::vector<char> in_s(size_t(g.n()), 0);
        for (int v : p.s) in_s[size_t(v)] = 1;
        auto stable_degree = [&](int c) {
            int cnt = 0;
            for (int u : g.neighbors(c))
                if (in_s[size_t(u)]) ++cnt;
            return cnt;
        };
        auto one_clique_vertex_set = [&](int c) {  // {c} plus its stable non-neighbors
            VertexSet res{c};
            std::vector<char> adj(size_t(g.n()), 0);
            for (int u : g.neighbors(c)) adj[size_t(u)] = 1;
            for (int v : p.s)
                if (!adj[size_t(v)]) res.push_back(v);
            std::sort(res.begin(), res.end());
            return translate(res, to_orig);
        };

        int busy = -1;  // a clique vertex with two or more stable neighbors
        for (int c : p.c)
            if (stable_degree(c) >= 2) {
                busy = c;
                break;
            }
        r.wc = p.r.empty() && busy == -1;
        if (!r.wc) {
            if (!p.r.empty())
                order_witnesses(r, one_clique_vertex_set(p.c[0]), r.max_is);
            else
                order_witnesses(r, one_clique_vertex_set(busy), s_orig);
        }
        return r;
    }

    DpResult solve_quasi_spider(const Graph& g, const std::vector<int>& to_orig,
                                const SpiderPartition& sp) {
        DpResult child = recurse(g, to_orig, sp.r);

        VertexSet stable_all;
        for (const auto& grp : sp.stable_groups) stable_all = set_union(stable_all, grp);
        const bool stable_k2 = sp.substitution && !sp.substitution->on_clique_side &&
                               sp.substitution->kind == SubstKind::kClique2;
        // Largest independent subset of the stable side: everything, except
        // that an adjacent twin pair contributes one vertex.
        VertexSet stable_max;
        for (const auto& grp : sp.stable_groups) {
            if (grp.size() == 2 && stable_k2) stable_max.push_back(grp[0]);
            else stable_max = set_union(stable_max, grp);
        }
        std::sort(stable_max.begin(), stable_max.end());

        // Choices that take clique-side vertices: one vertex, or a nonadjacent
        // twin pair, each together with the stable vertices they miss.
        auto with_clique_choice = [&](const VertexSet& x) {
            std::vector<char> adj(size_t(g.n()), 0);
            for (int v : x)
                for (int u : g.neighbors(v)) adj[size_t(u)] = 1;
            VertexSet res(x);
            int value = int(x.size());
            for (const auto& grp : sp.stable_groups) {
                VertexSet survivors;
                for (int v : grp)
                    if (!adj[size_t(v)]) survivors.push_back(v);
                if (survivors.empty()) continue;
                if (survivors.size() == 2 && stable_k2) survivors.resize(1);
                value += int(survivors.size());
                res = set_union(res, survivors);
            }
            std::sort(res.begin(), res.end());
            return std::pair<int, VertexSet>{value, res};
        };

        int no_c_value = int(stable_max.size()) + child.alpha;
        VertexSet no_c_set = set_union(translate(stable_max, to_orig), child.max_is);

        int best_c_value = -1;
        VertexSet best_c_set;
        int single_value = -1;  // best choice of a single clique vertex from a 1-group
        VertexSet single_set;
        for (const auto& grp : sp.clique_groups) {
            auto [value, set] = with_clique_choice({grp[0]});
            if (value > best_c_value) {
                best_c_value = value;
                best_c_set = set;
            }
            if (grp.size() == 1 && single_value < 0) {
                single_value = value;
                single_set = set;
            }
            if (grp.size() == 2 && sp.substitution->kind == SubstKind::kCoClique2) {
                auto [pv, ps] = with_clique_choice(grp);
                if (pv > best_c_value) {
                    best_c_value = pv;
                    best_c_set = ps;
                }
            }
        }
        best_c_set = translate(best_c_set, to_orig);
        single_set = translate(single_set, to_orig);

        DpResult r;
        if (no_c_value >= best_c_value) {
            r.alpha = no_c_value;
            r.max_is = no_c_set;
        } else {
            r.alpha = best_c_value;
            r.max_is = best_c_set;
        }

        const bool good_subst =
            !sp.substitution || sp.substitution->kind == SubstKind::kClique2;
        r.wc = sp.r.empty() && sp.kind == SpiderKind::kThin && good_subst;
        if (r.wc) return r;

        VertexSet stable_max_orig = translate(stable_max, to_orig);
        if (!sp.r.empty()) {
            order_witnesses(r, single_set, no_c_set);
        } else if (sp.kind == SpiderKind::kThick) {
            order_witnesses(r, single_set, stable_max_orig);
        } else if (!sp.substitution->on_clique_side) {
            // Nonadjacent twins on the stable side: their clique partner kills
            // both at once.
            int partner = sp.clique_groups[size_t(sp.substitution->group_index)][0];
            order_witnesses(r, translate(with_clique_choice({partner}).second, to_orig),
                            stable_max_orig);
        } else {
            // Nonadjacent twins on the clique side: taking both beats the
            // plain stable side by one.
            VertexSet pair_set =
                translate(with_clique_choice(sp.clique_groups[size_t(sp.substitution->group_index)]).second,
                          to_orig);
            order_witnesses(r, stable_max_orig, pair_set);
        }
        return r;
    }

    DpResult solve_p_component(const Graph& g, const std::vector<int>& to_orig,
                               const PComponentSeparation& sep) {
        VertexSet outside = set_complement(g.n(), sep.h);
        DpResult rest = recurse(g, to_orig, outside);

        InducedSubgraph h2_sub = induced_subgraph(g, sep.h2);
        std::vector<int> h2_map(h2_sub.to_original.size());
        for (size_t i = 0; i < h2_map.size(); ++i) h2_map[i] = to_orig[size_t(h2_sub.to_original[i])];
        DpResult h2 = oracle_result(h2_sub.graph, h2_map, budget_);

        // Maximal independent sets of H that touch H1 are maximal in g.
        InducedSubgraph h_sub = induced_subgraph(g, sep.h);
        std::vector<char> is_h1(h_sub.to_original.size(), 0);
        for (size_t i = 0; i < h_sub.to_original.size(); ++i)
            is_h1[i] = set_contains(sep.h1, h_sub.to_original[i]);
        std::vector<int> h_map(h_sub.to_original.size());
        for (size_t i = 0; i < h_map.size(); ++i) h_map[i] = to_orig[size_t(h_sub.to_original[i])];

        const int target = rest.alpha + h2.alpha;
        int meet_min = -1, meet_max = -1;
        VertexSet meet_min_set, meet_max_set, offending;
        enumerate_maximal_independent_sets(
            h_sub.graph,
            [&](const VertexSet& s) {
                bool touches = false;
                for (int v : s)
                    if (is_h1[size_t(v)]) {
                        touches = true;
                        break;
                    }
                if (!touches) return;
                int size = int(s.size());
                if (meet_min < 0 || size < meet_min) { meet_min = size; meet_min_set = s; }
                if (size > meet_max) { meet_max = size; meet_max_set = s; }
                if (size != target && offending.empty()) offending = s;
            },
            budget_);

        DpResult r;
        VertexSet combined = set_union(rest.max_is, h2.max_is);
        if (meet_max > target) {
            r.alpha = meet_max;
            r.max_is = translate(meet_max_set, h_map);
        } else {
            r.alpha = target;
            r.max_is = combined;
        }
        r.wc = rest.wc && h2.wc && offending.empty();
        if (r.wc) return r;

        if (!rest.wc)
            order_witnesses(r, set_union(rest.witnesses->first, h2.max_is),
                            set_union(rest.witnesses->second, h2.max_is));
        else if (!h2.wc)
            order_witnesses(r, set_union(rest.max_is, h2.witnesses->first),
                            set_union(rest.max_is, h2.witnesses->second));
        else
            order_witnesses(r, translate(offending, h_map), combined);
        return r;
    }

    P4Mode mode_;
    int q_;
    std::uint64_t budget_;
};

}  // namespace

FewP4Result well_covered_few_p4(const Graph& g, P4Mode mode, int q, std::uint64_t oracle_budget) {
    FewP4Solver solver(mode, q, oracle_budget);
    std::vector<int> identity(static_cast<size_t>(g.n()));
    std::iota(identity.begin(), identity.end(), 0);
    DpResult dp = solver.solve(g, identity);

    FewP4Result result;
    result.alpha = dp.alpha;
    result.max_independent_set = dp.max_is;
    result.report.algorithm = "p4";
    result.report.well_covered = dp.wc;
    result.report.alpha = dp.alpha;
    result.report.vc = g.n() - dp.alpha;
    if (dp.wc) result.report.vc_plus = result.report.vc;
    if (!dp.wc) {
        result.report.witness_small = dp.witnesses->first;
        result.report.witness_large = dp.witnesses->second;
    }
    return result;
}

namespace {

// P4s inside a subset, counted from the precomputed global list.
int count_p4s_within(const std::vector<std::array<int, 4>>& p4s, const std::vector<char>& in,
                     int stop_after) {
    int count = 0;
    for (const auto& p : p4s) {
        if (in[size_t(p[0])] && in[size_t(p[1])] && in[size_t(p[2])] && in[size_t(p[3])]) {
            if (++count > stop_after) return count;
        }
    }
    return count;
}

bool free_of_2k2_and_c4(const Graph& g, const VertexSet& subset) {
    // Induced 2K2: two disjoint edges with no connection between them.
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j) {
            int a = subset[i], b = subset[j];
            if (!g.has_edge(a, b)) continue;
            for (size_t x = 0; x < subset.size(); ++x)
                for (size_t y = x + 1; y < subset.size(); ++y) {
                    int c = subset[x], d = subset[y];
                    if (c == a || c == b || d == a || d == b || !g.has_edge(c, d)) continue;
                    if (!g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d))
                        return false;
                }
        }
    // Induced C4.
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = 0; j < subset.size(); ++j)
            for (size_t x = i + 1; x < subset.size(); ++x)
                for (size_t y = j + 1; y < subset.size(); ++y) {
                    if (i == j || i == y || x == j || x == y || j == y) continue;
                    int w = subset[i], p = subset[j], z = subset[x], r = subset[y];
                    if (g.has_edge(w, p) && g.has_edge(p, z) && g.has_edge(z, r) && g.has_edge(r, w) &&
                        !g.has_edge(w, z) && !g.has_edge(p, r))
                        return false;
                }
    return true;
}

template <typename F>
void for_each_subset(int n, int size, F&& f) {
    VertexSet idx(static_cast<size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        int i = size - 1;
        while (i >= 0 && idx[size_t(i)] == n - size + i) --i;
        if (i < 0) break;
        ++idx[size_t(i)];
        for (int j = i + 1; j < size; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }
}

}  // namespace

bool is_class_member(const Graph& g, P4Mode mode, int q) {
    const int guard = mode == P4Mode::kExtendedP4Laden ? kClassCheckGuardExtLaden : kClassCheckGuardQQ4;
    if (g.n() > guard)
        throw GuardExceeded("class membership check requires n <= " + std::to_string(guard));
    auto p4s = list_induced_p4s(g);

    if (mode == P4Mode::kExtendedP4Laden) {
        // Subsets of exactly six vertices suffice: the property is inherited
        // downward by induced subgraphs.
        const int size = std::min(g.n(), 6);
        if (size == 0) return true;
        bool ok = true;
        for_each_subset(g.n(), size, [&](const VertexSet& subset) {
            if (!ok) return;
            std::vector<char> in(size_t(g.n()), 0);
            for (int v : subset) in[size_t(v)] = 1;
            if (count_p4s_within(p4s, in, 2) <= 2) return;
            if (!free_of_2k2_and_c4(g, subset)) ok = false;
        });
        return ok;
    }

    if (q < 4) throw ContractError("q must be at least 4");
    const int size = std::min(g.n(), q);
    if (size == 0) return true;
    bool ok = true;
    for_each_subset(g.n(), size, [&](const VertexSet& subset) {
        if (!ok) return;
        std::vector<char> in(size_t(g.n()), 0);
        for (int v : subset) in[size_t(v)] = 1;
        if (count_p4s_within(p4s, in, q - 4) > q - 4) ok = false;
    });
    return ok;
}

}  // namespace wcov
