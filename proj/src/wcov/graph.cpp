#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

#include "errors.hpp"

namespace wcov {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ContractError("edge endpoint out of range");
        if (u == v) throw ContractError("self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    std::vector<int> deg(n + 1, 0);
    for (auto [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    adj_ptr_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) adj_ptr_[v + 1] = adj_ptr_[v] + deg[v];
    adj_flat_.resize(size_t(adj_ptr_[n]));
    std::vector<int> cursor(adj_ptr_.begin(), adj_ptr_.end() - 1);
    for (auto [u, v] : edges_) {
        adj_flat_[size_t(cursor[u]++)] = v;
        adj_flat_[size_t(cursor[v]++)] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(adj_flat_.begin() + adj_ptr_[v], adj_flat_.begin() + adj_ptr_[v + 1]);
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Bits Graph::adjacency_row(int v) const {
    Bits row(n_);
    for (int u : neighbors(v)) row.set(u);
    return row;
}

std::vector<Bits> Graph::adjacency_rows() const {
    std::vector<Bits> rows;
    rows.reserve(size_t(n_));
    for (int v = 0; v < n_; ++v) rows.push_back(adjacency_row(v));
    return rows;
}

namespace {

struct Line {
    std::string_view text;
    int number;
};

std::vector<Line> significant_lines(std::string_view text, char comment) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        ++number;
        if (size_t c = line.find(comment); c != std::string_view::npos) line = line.substr(0, c);
        size_t b = line.find_first_not_of(" \t\r");
        if (b != std::string_view::npos) {
            size_t e = line.find_last_not_of(" \t\r");
            out.push_back({line.substr(b, e - b + 1), number});
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t b = s.find_first_not_of(" \t", pos);
        if (b == std::string_view::npos) break;
        size_t e = s.find_first_of(" \t", b);
        if (e == std::string_view::npos) e = s.size();
        out.push_back(s.substr(b, e - b));
        pos = e;
    }
    return out;
}

long parse_int(std::string_view tok, int line) {
    long value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    long max_id = -1;
    for (const Line& line : significant_lines(text, '#')) {
        auto toks = tokens(line.text);
        if (toks.size() != 2) throw ParseError(line.number, "expected 'u v'");
        long u = parse_int(toks[0], line.number);
        long v = parse_int(toks[1], line.number);
        if (u < 0 || v < 0) throw ParseError(line.number, "negative vertex id");
        if (u == v) throw ParseError(line.number, "self-loop");
        max_id = std::max({max_id, u, v});
        edges.push_back({int(u), int(v)});
    }
    return Graph(int(max_id + 1), std::move(edges));
}

Graph parse_dimacs(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    long n = -1;
    for (const Line& line : significant_lines(text, '\0')) {
        auto toks = tokens(line.text);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(line.number, "duplicate problem line");
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "edges" && toks[1] != "col"))
                throw ParseError(line.number, "expected 'p edge <n> <m>'");
            n = parse_int(toks[2], line.number);
            if (n < 0) throw ParseError(line.number, "negative vertex count");
        } else if (toks[0] == "e") {
            if (n < 0) throw ParseError(line.number, "edge before problem line");
            if (toks.size() != 3) throw ParseError(line.number, "expected 'e <u> <v>'");
            long u = parse_int(toks[1], line.number);
            long v = parse_int(toks[2], line.number);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(line.number, "vertex id out of range 1..n");
            if (u == v) throw ParseError(line.number, "self-loop");
            edges.push_back({int(u - 1), int(v - 1)});
        } else {
            throw ParseError(line.number, "unknown line type '" + std::string(toks[0]) + "'");
        }
    }
    if (n < 0) throw ParseError(0, "missing problem line");
    return Graph(int(n), std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::kDimacs ? parse_dimacs(text) : parse_edge_list(text);
}

Graph parse_graph_auto(std::string_view text) {
    for (const Line& line : significant_lines(text, '#'))
        return (line.text[0] == 'p' || line.text[0] == 'c' || line.text[0] == 'e') &&
                       line.text.size() > 1 && (line.text[1] == ' ' || line.text[1] == '\t')
                   ? parse_dimacs(text)
                   : parse_edge_list(text);
    return parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# n=" << g.n() << " m=" << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u) {
        auto nb = g.neighbors(u);
        size_t i = 0;
        for (int v = u + 1; v < g.n(); ++v) {
            while (i < nb.size() && nb[i] < v) ++i;
            if (i >= nb.size() || nb[i] != v) edges.push_back({u, v});
        }
    }
    return Graph(g.n(), std::move(edges));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(size_t(g.n()), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[size_t(s)]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(s);
        seen[size_t(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[size_t(u)]) {
                    seen[size_t(u)] = 1;
                    q.push(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> local(size_t(g.n()), -1);
    for (size_t i = 0; i < s.size(); ++i) {
        int v = s[i];
        if (v < 0 || v >= g.n()) throw ContractError("induced_subgraph: vertex out of range");
        local[size_t(v)] = int(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (local[size_t(u)] >= 0 && local[size_t(v)] >= 0)
            edges.push_back({local[size_t(u)], local[size_t(v)]});
    return {Graph(int(s.size()), std::move(edges)), s};
}

InducedSubgraph strip_isolated(const Graph& g) {
    VertexSet keep;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    return induced_subgraph(g, keep);
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    const int n = g.n();
    DegeneracyOrdering result;
    if (n == 0) return result;

    std::vector<int> deg(static_cast<size_t>(n));
    int max_deg = 0;
    for (int v = 0; v < n; ++v) {
        deg[size_t(v)] = g.degree(v);
        max_deg = std::max(max_deg, deg[size_t(v)]);
    }
    // Bucket queue over current degrees with lazy deletion. Entries below
    // `cur` are always consumed, so scanning upward finds the minimum; lowest
    // id wins ties because pushes happen in ascending id order.
    std::vector<std::vector<int>> bucket(size_t(max_deg + 1));
    for (int v = 0; v < n; ++v) bucket[size_t(deg[size_t(v)])].push_back(v);
    std::vector<char> removed(size_t(n), 0);
    std::vector<size_t> head(size_t(max_deg + 1), 0);

    int cur = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        while (true) {
            while (head[size_t(cur)] >= bucket[size_t(cur)].size()) ++cur;
            int cand = bucket[size_t(cur)][head[size_t(cur)]++];
            if (!removed[size_t(cand)] && deg[size_t(cand)] == cur) {
                v = cand;
                break;
            }
        }
        removed[size_t(v)] = 1;
        result.order.push_back(v);
        result.degeneracy = std::max(result.degeneracy, deg[size_t(v)]);
        for (int u : g.neighbors(v))
            if (!removed[size_t(u)]) {
                int d = --deg[size_t(u)];
                bucket[size_t(d)].push_back(u);
                if (d < cur) cur = d;
            }
    }
    return result;
}

Matching greedy_maximal_matching(const Graph& g) {
    Matching m;
    std::vector<char> used(size_t(g.n()), 0);
    for (auto [u, v] : g.edges())
        if (!used[size_t(u)] && !used[size_t(v)]) {
            used[size_t(u)] = used[size_t(v)] = 1;
            m.push_back({u, v});
        }
    return m;
}

namespace {

bool kuhn_augment(const Graph& g, int v, const std::vector<char>& in_right,
                  std::vector<int>& match_of, std::vector<char>& visited) {
    for (int u : g.neighbors(v)) {
        if (!in_right[size_t(u)] || visited[size_t(u)]) continue;
        visited[size_t(u)] = 1;
        if (match_of[size_t(u)] == -1 || kuhn_augment(g, match_of[size_t(u)], in_right, match_of, visited)) {
            match_of[size_t(u)] = v;
            match_of[size_t(v)] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

BipartiteMatching max_bipartite_matching(const Graph& g, const VertexSet& left, const VertexSet& right) {
    std::vector<char> in_left(size_t(g.n()), 0), in_right(size_t(g.n()), 0);
    for (int v : left) in_left[size_t(v)] = 1;
    for (int v : right) {
        if (in_left[size_t(v)]) throw ContractError("bipartite sides intersect");
        in_right[size_t(v)] = 1;
    }

    BipartiteMatching result;
    result.match_of.assign(size_t(g.n()), -1);
    for (int v : left) {
        std::vector<char> visited(size_t(g.n()), 0);
        kuhn_augment(g, v, in_right, result.match_of, visited);
    }
    for (int v : left)
        if (result.match_of[size_t(v)] != -1) result.pairs.push_back({v, result.match_of[size_t(v)]});

    // Alternating reachability from unmatched left vertices: free edge to the
    // right, matched edge back to the left.
    result.left_reachable.assign(size_t(g.n()), 0);
    result.right_reachable.assign(size_t(g.n()), 0);
    std::queue<int> q;
    for (int v : left)
        if (result.match_of[size_t(v)] == -1) {
            result.left_reachable[size_t(v)] = 1;
            q.push(v);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            if (!in_right[size_t(u)] || result.right_reachable[size_t(u)]) continue;
            result.right_reachable[size_t(u)] = 1;
            int w = result.match_of[size_t(u)];
            if (w != -1 && !result.left_reachable[size_t(w)]) {
                result.left_reachable[size_t(w)] = 1;
                q.push(w);
            }
        }
    }
    return result;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    std::vector<char> in(size_t(g.n()), 0);
    for (int v : s) in[size_t(v)] = 1;
    for (auto [u, v] : g.edges())
        if (!in[size_t(u)] && !in[size_t(v)]) return false;
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    std::vector<char> in(size_t(g.n()), 0);
    for (int v : s) in[size_t(v)] = 1;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (in[size_t(u)]) return false;
    return true;
}

bool is_minimal_vertex_cover(const Graph& g, const VertexSet& s) {
    std::vector<char> in(size_t(g.n()), 0);
    for (int v : s) in[size_t(v)] = 1;
    for (auto [u, v] : g.edges())
        if (!in[size_t(u)] && !in[size_t(v)]) return false;
    for (int v : s) {
        bool witness = false;
        for (int u : g.neighbors(v))
            if (!in[size_t(u)]) {
                witness = true;
                break;
            }
        if (!witness) return false;
    }
    return true;
}

bool is_maximal_independent_set(const Graph& g, const VertexSet& s) {
    std::vector<char> in(size_t(g.n()), 0);
    for (int v : s) in[size_t(v)] = 1;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (in[size_t(u)]) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (in[size_t(v)]) continue;
        bool dominated = false;
        for (int u : g.neighbors(v))
            if (in[size_t(u)]) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

VertexSet greedy_maximal_independent_set(const Graph& g) {
    VertexSet s;
    std::vector<char> blocked(size_t(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (blocked[size_t(v)]) continue;
        s.push_back(v);
        for (int u : g.neighbors(v)) blocked[size_t(u)] = 1;
    }
    return s;
}

VertexSet set_complement(int n, const VertexSet& s) {
    VertexSet out;
    size_t i = 0;
    for (int v = 0; v < n; ++v) {
        while (i < s.size() && s[i] < v) ++i;
        if (i >= s.size() || s[i] != v) out.push_back(v);
    }
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace wcov
