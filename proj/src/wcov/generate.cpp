#include "generate.hpp"

#include <algorithm>

#include "errors.hpp"
#include "rng.hpp"

namespace wcov {

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw ContractError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({n - 1, 0});
    return Graph(n, std::move(edges));
}

Graph make_star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.push_back({0, v});
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges(a.edges());
    for (auto [u, v] : b.edges()) edges.push_back({u + a.n(), v + a.n()});
    return Graph(a.n() + b.n(), std::move(edges));
}

Graph join(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges(a.edges());
    for (auto [u, v] : b.edges()) edges.push_back({u + a.n(), v + a.n()});
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) edges.push_back({u, a.n() + v});
    return Graph(a.n() + b.n(), std::move(edges));
}

Graph corona(const Graph& base) {
    std::vector<std::pair<int, int>> edges(base.edges());
    for (int v = 0; v < base.n(); ++v) edges.push_back({v, base.n() + v});
    return Graph(2 * base.n(), std::move(edges));
}

Graph gnp(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

namespace {

Graph random_cograph_impl(int n, Rng& rng) {
    if (n <= 1) return Graph(n, {});
    int left = 1 + int(rng.below(std::uint64_t(n - 1)));
    bool use_join = rng.below(2) == 0;
    Graph a = random_cograph_impl(left, rng);
    Graph b = random_cograph_impl(n - left, rng);
    return use_join ? join(a, b) : disjoint_union(a, b);
}

Graph recipe_impl(int n, Rng& rng) {
    if (n <= 1) return Graph(n, {});
    if (n == 5 && rng.below(3) == 0) return make_cycle(5);
    if (n == 4 && rng.below(3) == 0) return make_path(4);
    if (n == 2 && rng.below(2) == 0) return make_complete(2);
    int left = 1 + int(rng.below(std::uint64_t(n - 1)));
    bool use_join = rng.below(2) == 0;
    Graph a = recipe_impl(left, rng);
    Graph b = recipe_impl(n - left, rng);
    return use_join ? join(a, b) : disjoint_union(a, b);
}

}  // namespace

Graph random_cograph(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_cograph_impl(n, rng);
}

Graph make_spider(const SpiderSpec& spec) {
    if (spec.k < 2) throw ContractError("spider needs k >= 2");
    // Clique side first (ids 0..k-1 before expansion), then the stable side,
    // then the attachment. The substituted position becomes two consecutive ids.
    const int k = spec.k;
    std::vector<std::vector<int>> clique_groups, stable_groups;
    int next = 0;
    for (int i = 0; i < k; ++i) {
        bool sub = spec.substituted_position == i && spec.substitution_on_clique_side;
        std::vector<int> grp{next++};
        if (sub) grp.push_back(next++);
        clique_groups.push_back(grp);
    }
    for (int i = 0; i < k; ++i) {
        bool sub = spec.substituted_position == i && !spec.substitution_on_clique_side;
        std::vector<int> grp{next++};
        if (sub) grp.push_back(next++);
        stable_groups.push_back(grp);
    }
    std::vector<std::pair<int, int>> edges;
    auto pair_adjacent = [&](int i, int j) {
        return spec.kind == SpiderKind::kThin ? i == j : i != j;
    };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i != j)
                for (int u : clique_groups[size_t(i)])
                    for (int v : clique_groups[size_t(j)])
                        if (u < v) edges.push_back({u, v});
            if (pair_adjacent(j, i))
                for (int u : stable_groups[size_t(j)])
                    for (int v : clique_groups[size_t(i)]) edges.push_back({u, v});
        }
    if (spec.substituted_position >= 0 && spec.substitution_kind == SubstKind::kClique2) {
        auto& grp = spec.substitution_on_clique_side
                        ? clique_groups[size_t(spec.substituted_position)]
                        : stable_groups[size_t(spec.substituted_position)];
        edges.push_back({grp[0], grp[1]});
    }
    int base = next;
    for (auto [u, v] : spec.attachment.edges()) edges.push_back({base + u, base + v});
    for (int r = 0; r < spec.attachment.n(); ++r)
        for (const auto& grp : clique_groups)
            for (int u : grp) edges.push_back({u, base + r});
    return Graph(base + spec.attachment.n(), std::move(edges));
}

Graph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::kGnp:
            if (spec.n < 0 || spec.p < 0 || spec.p > 1) throw ContractError("gnp needs n >= 0, p in [0,1]");
            return gnp(spec.n, spec.p, spec.seed);
        case Family::kPath: return make_path(spec.n);
        case Family::kCycle: return make_cycle(spec.n);
        case Family::kStar:
            if (spec.n < 1) throw ContractError("star needs n >= 1");
            return make_star(spec.n);
        case Family::kComplete: return make_complete(spec.n);
        case Family::kCorona: return corona(gnp(spec.n, spec.p, spec.seed));
        case Family::kThinSpider:
        case Family::kThickSpider: {
            SpiderSpec s;
            s.k = spec.k;
            s.kind = spec.family == Family::kThinSpider ? SpiderKind::kThin : SpiderKind::kThick;
            return make_spider(s);
        }
        case Family::kPseudoSplit: {
            // Clique of size k, middle part of size q attached to the whole
            // clique, stable part of size n-k-q; stable vertex i hangs off
            // clique vertex i mod k, plus extra clique edges with chance p.
            const int k = spec.k, mid = spec.q;
            const int stable = spec.n - k - mid;
            if (k < 2 || stable < k || mid < 0)
                throw ContractError("pseudo-split needs k >= 2 and at least k stable vertices");
            Rng rng(spec.seed);
            Graph middle = random_cograph(mid, rng.split().next());
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < k; ++u)
                for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
            for (auto [u, v] : middle.edges()) edges.push_back({k + u, k + v});
            for (int r = 0; r < mid; ++r)
                for (int c = 0; c < k; ++c) edges.push_back({c, k + r});
            for (int s = 0; s < stable; ++s) {
                int v = k + mid + s;
                edges.push_back({s % k, v});
                if (spec.p > 0)
                    for (int c = 0; c < k; ++c)
                        if (c != s % k && c != (s + 1) % k && rng.chance(spec.p))
                            edges.push_back({c, v});  // never all of the clique
            }
            return Graph(spec.n, std::move(edges));
        }
        case Family::kCograph: return random_cograph(spec.n, spec.seed);
        case Family::kUnionJoinRecipe: {
            Rng rng(spec.seed);
            return recipe_impl(spec.n, rng);
        }
    }
    throw ContractError("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "gnp") return Family::kGnp;
    if (name == "path") return Family::kPath;
    if (name == "cycle") return Family::kCycle;
    if (name == "star") return Family::kStar;
    if (name == "complete") return Family::kComplete;
    if (name == "corona") return Family::kCorona;
    if (name == "thin-spider") return Family::kThinSpider;
    if (name == "thick-spider") return Family::kThickSpider;
    if (name == "pseudo-split") return Family::kPseudoSplit;
    if (name == "cograph") return Family::kCograph;
    if (name == "union-join-recipe") return Family::kUnionJoinRecipe;
    throw ContractError("unknown family '" + name + "'");
}

std::string family_name(Family family) {
    switch (family) {
        case Family::kGnp: return "gnp";
        case Family::kPath: return "path";
        case Family::kCycle: return "cycle";
        case Family::kStar: return "star";
        case Family::kComplete: return "complete";
        case Family::kCorona: return "corona";
        case Family::kThinSpider: return "thin-spider";
        case Family::kThickSpider: return "thick-spider";
        case Family::kPseudoSplit: return "pseudo-split";
        case Family::kCograph: return "cograph";
        case Family::kUnionJoinRecipe: return "union-join-recipe";
    }
    return "?";
}

}  // namespace wcov
