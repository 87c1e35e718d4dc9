#include "wellcovered.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "wcov/crown.hpp"
#include "wcov/degen.hpp"
#include "wcov/errors.hpp"
#include "wcov/generate.hpp"
#include "wcov/graph.hpp"
#include "wcov/mvc_enum.hpp"
#include "wcov/oracle.hpp"
#include "wcov/p4.hpp"
#include "wcov/vcplus.hpp"

struct wc_graph {
    wcov::Graph g;
};

struct wc_report {
    wcov::WellCoveredReport r;
};

namespace {

void fill_error(char* err, size_t err_len, const char* what) {
    if (!err || err_len == 0) return;
    std::strncpy(err, what, err_len - 1);
    err[err_len - 1] = '\0';
}

template <typename F>
wc_status guarded(char* err, size_t err_len, F&& f) {
    try {
        return f();
    } catch (const wcov::ParseError& e) {
        fill_error(err, err_len, e.what());
        return WC_ERR_PARSE;
    } catch (const wcov::BudgetExceeded& e) {
        fill_error(err, err_len, e.what());
        return WC_ERR_BUDGET;
    } catch (const wcov::GuardExceeded& e) {
        fill_error(err, err_len, e.what());
        return WC_ERR_GUARD;
    } catch (const wcov::DecompositionFailed& e) {
        fill_error(err, err_len, e.what());
        return WC_ERR_DECOMP;
    } catch (const wcov::ContractError& e) {
        fill_error(err, err_len, e.what());
        return WC_ERR_INVALID_ARG;
    } catch (const std::exception& e) {
        fill_error(err, err_len, e.what());
        return WC_ERR_INTERNAL;
    }
}

wcov::GraphFormat format_from(const char* format) {
    std::string f(format);
    if (f == "edge-list") return wcov::GraphFormat::kEdgeList;
    if (f == "dimacs") return wcov::GraphFormat::kDimacs;
    throw wcov::ContractError("unknown format '" + f + "'");
}

// Strips isolated vertices, runs the kernel size test, then the cheapest
// applicable decider. Results are mapped back to the input graph's ids.
wcov::WellCoveredReport decide_auto(const wcov::Graph& g, std::uint64_t budget) {
    wcov::InducedSubgraph stripped = wcov::strip_isolated(g);
    const int isolated = g.n() - stripped.graph.n();
    wcov::VertexSet isolated_ids;
    {
        std::vector<char> kept(size_t(g.n()), 0);
        for (int v : stripped.to_original) kept[size_t(v)] = 1;
        for (int v = 0; v < g.n(); ++v)
            if (!kept[size_t(v)]) isolated_ids.push_back(v);
    }

    if (stripped.graph.n() == 0) {
        wcov::WellCoveredReport r;
        r.algorithm = "auto:trivial";
        r.well_covered = true;
        r.alpha = isolated;
        r.vc = 0;
        r.vc_plus = 0;
        return r;
    }

    auto small_cover = wcov::minimum_vertex_cover(stripped.graph, 25);
    if (small_cover && stripped.graph.n() > 5 * int(small_cover->size())) {
        // More than five times the cover number cannot be well covered.
        wcov::WellCoveredReport r;
        r.algorithm = "auto:kernel";
        r.well_covered = false;
        r.vc = int(small_cover->size());
        r.alpha = g.n() - r.vc;
        return r;
    }

    wcov::WellCoveredReport r;
    if (small_cover) {
        r = wcov::well_covered_via_mvc_enum(stripped.graph, /*decide_only=*/true);
        r.algorithm = "auto:mvc-enum";
    } else {
        int degeneracy = wcov::degeneracy_ordering(stripped.graph).degeneracy;
        int alpha_guess = int(wcov::greedy_maximal_independent_set(stripped.graph).size());
        double estimate = double(alpha_guess) * std::log(double(degeneracy + 1));
        if (estimate <= std::log(2.0e7)) {
            r = wcov::well_covered_degenerate(stripped.graph);
            r.algorithm = "auto:degen";
        } else {
            r = wcov::well_covered_via_branching(stripped.graph);
            r.algorithm = "auto:vcplus";
        }
    }
    (void)budget;

    // Translate back: isolated vertices sit in every maximal independent set.
    if (r.alpha >= 0) r.alpha += isolated;
    auto lift = [&](std::optional<wcov::VertexSet>& w) {
        if (!w) return;
        wcov::VertexSet lifted;
        for (int v : *w) lifted.push_back(stripped.to_original[size_t(v)]);
        w = wcov::set_union(lifted, isolated_ids);
    };
    lift(r.witness_small);
    lift(r.witness_large);
    return r;
}

}  // namespace

extern "C" {

const char* wc_version(void) { return "1.0.0"; }

wc_status wc_graph_parse(const char* text, const char* format, wc_graph** out, char* err,
                         size_t err_len) {
    return guarded(err, err_len, [&]() {
        if (!text || !out) throw wcov::ContractError("null argument");
        wcov::Graph g = format ? wcov::parse_graph(text, format_from(format))
                               : wcov::parse_graph_auto(text);
        *out = new wc_graph{std::move(g)};
        return WC_OK;
    });
}

wc_status wc_graph_from_file(const char* path, const char* format, wc_graph** out, char* err,
                             size_t err_len) {
    if (!path || !out) {
        fill_error(err, err_len, "null argument");
        return WC_ERR_INVALID_ARG;
    }
    std::ifstream in(path);
    if (!in) {
        fill_error(err, err_len, (std::string("cannot read '") + path + "'").c_str());
        return WC_ERR_IO;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    return wc_graph_parse(text.c_str(), format, out, err, err_len);
}

wc_status wc_graph_create(int32_t n, const int32_t* edges, int32_t m, wc_graph** out, char* err,
                          size_t err_len) {
    return guarded(err, err_len, [&]() {
        if (!out || (m > 0 && !edges)) throw wcov::ContractError("null argument");
        std::vector<std::pair<int, int>> list;
        for (int32_t i = 0; i < m; ++i) list.push_back({edges[2 * i], edges[2 * i + 1]});
        *out = new wc_graph{wcov::Graph(n, std::move(list))};
        return WC_OK;
    });
}

wc_status wc_graph_generate(const char* family, int32_t n, double p, int32_t k, int32_t q,
                            uint64_t seed, wc_graph** out, char* err, size_t err_len) {
    return guarded(err, err_len, [&]() {
        if (!family || !out) throw wcov::ContractError("null argument");
        wcov::GenSpec spec;
        spec.family = wcov::family_from_name(family);
        spec.n = n;
        spec.p = p;
        spec.k = k;
        spec.q = q;
        spec.seed = seed;
        *out = new wc_graph{wcov::generate(spec)};
        return WC_OK;
    });
}

void wc_graph_destroy(wc_graph* g) { delete g; }

int32_t wc_graph_vertex_count(const wc_graph* g) { return g ? g->g.n() : -1; }
int32_t wc_graph_edge_count(const wc_graph* g) { return g ? g->g.m() : -1; }

wc_status wc_graph_to_text(const wc_graph* g, const char* format, char** out, char* err,
                           size_t err_len) {
    return guarded(err, err_len, [&]() {
        if (!g || !format || !out) throw wcov::ContractError("null argument");
        std::string text = format_from(format) == wcov::GraphFormat::kDimacs
                               ? wcov::to_dimacs(g->g)
                               : wcov::to_edge_list(g->g);
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
        return WC_OK;
    });
}

void wc_text_free(char* text) { delete[] text; }

wc_status wc_graph_strip_isolated(const wc_graph* g, wc_graph** out, char* err, size_t err_len) {
    return guarded(err, err_len, [&]() {
        if (!g || !out) throw wcov::ContractError("null argument");
        *out = new wc_graph{wcov::strip_isolated(g->g).graph};
        return WC_OK;
    });
}

wc_status wc_compute_stats(const wc_graph* g, uint64_t oracle_budget, wc_graph_stats* out,
                           char* err, size_t err_len) {
    return guarded(err, err_len, [&]() {
        if (!g || !out) throw wcov::ContractError("null argument");
        std::uint64_t budget = oracle_budget ? oracle_budget : wcov::kDefaultOracleBudget;
        wcov::GraphStats stats = wcov::graph_stats_oracle(g->g, budget);
        out->n = g->g.n();
        out->m = g->g.m();
        out->alpha = stats.alpha;
        out->vc = stats.vc;
        out->vc_plus = stats.vc_plus;
        out->i_min = stats.i_min;
        out->degeneracy = stats.degeneracy;
        return WC_OK;
    });
}

void wc_check_options_init(wc_check_options* options) {
    if (!options) return;
    options->algo = "auto";
    options->p4_class = "ext-laden";
    options->q = 7;
    options->early_exit = 1;
    options->verify_class = 0;
    options->oracle_budget = 0;
}

wc_status wc_check(const wc_graph* g, const wc_check_options* options, wc_report** out, char* err,
                   size_t err_len) {
    return guarded(err, err_len, [&]() {
        if (!g || !out) throw wcov::ContractError("null argument");
        wc_check_options defaults;
        wc_check_options_init(&defaults);
        const wc_check_options& opt = options ? *options : defaults;
        std::string algo = opt.algo ? opt.algo : "auto";
        std::uint64_t budget = opt.oracle_budget ? opt.oracle_budget : wcov::kDefaultOracleBudget;

        wcov::WellCoveredReport r;
        if (algo == "auto") {
            r = decide_auto(g->g, budget);
        } else if (algo == "oracle") {
            r = wcov::is_well_covered_oracle(g->g, budget);
        } else if (algo == "mvc-enum") {
            r = wcov::well_covered_via_mvc_enum(g->g, opt.early_exit != 0);
        } else if (algo == "vcplus") {
            r = wcov::well_covered_via_branching(g->g);
        } else if (algo == "degen") {
            wcov::DegenOptions d;
            d.early_exit = opt.early_exit != 0;
            r = wcov::well_covered_degenerate(g->g, d);
        } else if (algo == "p4") {
            std::string mode_name = opt.p4_class ? opt.p4_class : "ext-laden";
            wcov::P4Mode mode;
            if (mode_name == "ext-laden") mode = wcov::P4Mode::kExtendedP4Laden;
            else if (mode_name == "qq4") mode = wcov::P4Mode::kQQ4;
            else throw wcov::ContractError("unknown p4 class '" + mode_name + "'");
            if (opt.verify_class && !wcov::is_class_member(g->g, mode, opt.q))
                throw wcov::ContractError("input is not in the declared graph class");
            r = wcov::well_covered_few_p4(g->g, mode, opt.q, budget).report;
        } else {
            throw wcov::ContractError("unknown algorithm '" + algo + "'");
        }
        *out = new wc_report{std::move(r)};
        return WC_OK;
    });
}

void wc_report_destroy(wc_report* report) { delete report; }

int32_t wc_report_well_covered(const wc_report* r) { return r && r->r.well_covered ? 1 : 0; }
const char* wc_report_algorithm(const wc_report* r) { return r ? r->r.algorithm.c_str() : ""; }
int32_t wc_report_vc(const wc_report* r) { return r ? r->r.vc : -1; }
int32_t wc_report_vc_plus(const wc_report* r) { return r ? r->r.vc_plus : -1; }
int32_t wc_report_alpha(const wc_report* r) { return r ? r->r.alpha : -1; }
int64_t wc_report_tree_leaves(const wc_report* r) { return r ? r->r.tree.leaves : -1; }
int64_t wc_report_tree_nodes(const wc_report* r) { return r ? r->r.tree.nodes : -1; }

int32_t wc_report_witness(const wc_report* r, int32_t which, int32_t* buffer, int32_t cap) {
    if (!r) return -1;
    const auto& w = which == 0 ? r->r.witness_small : r->r.witness_large;
    if (!w) return -1;
    if (buffer) {
        int32_t count = std::min<int32_t>(cap, int32_t(w->size()));
        for (int32_t i = 0; i < count; ++i) buffer[i] = (*w)[size_t(i)];
    }
    return int32_t(w->size());
}

wc_status wc_kernelize(const wc_graph* g, int32_t* not_well_covered, int32_t* k_out,
                       wc_graph** kernel_out, char* err, size_t err_len) {
    return guarded(err, err_len, [&]() {
        if (!g || !not_well_covered || !k_out || !kernel_out)
            throw wcov::ContractError("null argument");
        wcov::KernelOutcome outcome = wcov::kernelize(g->g);
        *not_well_covered = outcome.not_well_covered ? 1 : 0;
        *k_out = outcome.k;
        *kernel_out = outcome.not_well_covered ? nullptr : new wc_graph{std::move(outcome.kernel)};
        return WC_OK;
    });
}

wc_status wc_enumerate_minimal_covers(const wc_graph* g, wc_vertex_set_callback callback,
                                      void* user, uint64_t* count_out, char* err, size_t err_len) {
    return guarded(err, err_len, [&]() {
        if (!g) throw wcov::ContractError("null argument");
        wcov::VertexSet cover = *wcov::minimum_vertex_cover(g->g);
        std::function<void(const wcov::VertexSet&)> emit;
        if (callback)
            emit = [&](const wcov::VertexSet& s) {
                std::vector<int32_t> buffer(s.begin(), s.end());
                callback(buffer.data(), int32_t(buffer.size()), user);
            };
        wcov::EnumerateResult result = wcov::enumerate_minimal_vertex_covers(g->g, cover, emit);
        if (count_out) *count_out = result.emitted;
        return WC_OK;
    });
}

}  // extern "C"
