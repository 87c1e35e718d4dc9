// Command-line front end for the wellcovered shared library.
//
// Exit codes: 0 = well covered (or command succeeded), 1 = not well covered,
// 2 = error (parse failure, exceeded budget or guard, bad arguments).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wellcovered.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct GraphHandle {
    wc_graph* g = nullptr;
    ~GraphHandle() { wc_graph_destroy(g); }
};

struct ReportHandle {
    wc_report* r = nullptr;
    ~ReportHandle() { wc_report_destroy(r); }
};

std::string error_buffer(256, '\0');

uint64_t env_oracle_budget() {
    const char* env = std::getenv("WCOV_ORACLE_BUDGET");
    return env ? std::strtoull(env, nullptr, 10) : 0;
}

bool load_graph(const std::string& path, const std::string& format, GraphHandle& handle) {
    wc_status status = wc_graph_from_file(path.c_str(), format.empty() ? nullptr : format.c_str(),
                                          &handle.g, error_buffer.data(), error_buffer.size());
    if (status != WC_OK) {
        std::cerr << "error: " << error_buffer.c_str() << "\n";
        return false;
    }
    return true;
}

std::vector<int32_t> report_witness(const wc_report* r, int32_t which) {
    int32_t len = wc_report_witness(r, which, nullptr, 0);
    if (len < 0) return {};
    std::vector<int32_t> buffer(static_cast<size_t>(len));
    wc_report_witness(r, which, buffer.data(), len);
    return buffer;
}

int run_check(const std::string& path, const std::string& format, const std::string& algo,
              const std::string& p4_class, int q, bool no_early_exit, bool verify_class,
              uint64_t oracle_budget, bool as_json) {
    GraphHandle graph;
    if (!load_graph(path, format, graph)) return kExitError;

    wc_check_options options;
    wc_check_options_init(&options);
    options.algo = algo.c_str();
    options.p4_class = p4_class.c_str();
    options.q = q;
    options.early_exit = no_early_exit ? 0 : 1;
    options.verify_class = verify_class ? 1 : 0;
    options.oracle_budget = oracle_budget;

    ReportHandle report;
    auto start = std::chrono::steady_clock::now();
    wc_status status =
        wc_check(graph.g, &options, &report.r, error_buffer.data(), error_buffer.size());
    double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (status != WC_OK) {
        std::cerr << "error: " << error_buffer.c_str() << "\n";
        return kExitError;
    }

    const bool yes = wc_report_well_covered(report.r) != 0;
    if (as_json) {
        ordered_json j;
        j["schema"] = 1;
        j["input"] = std::filesystem::path(path).filename().string();
        j["n"] = wc_graph_vertex_count(graph.g);
        j["m"] = wc_graph_edge_count(graph.g);
        j["algorithm"] = wc_report_algorithm(report.r);
        j["well_covered"] = yes;
        if (wc_report_vc(report.r) >= 0) j["vc"] = wc_report_vc(report.r);
        if (wc_report_vc_plus(report.r) >= 0) j["vc_plus"] = wc_report_vc_plus(report.r);
        if (wc_report_alpha(report.r) >= 0) j["alpha"] = wc_report_alpha(report.r);
        if (wc_report_witness(report.r, 0, nullptr, 0) >= 0)
            j["witness_small"] = report_witness(report.r, 0);
        if (wc_report_witness(report.r, 1, nullptr, 0) >= 0)
            j["witness_large"] = report_witness(report.r, 1);
        if (wc_report_tree_leaves(report.r) >= 0) j["tree_leaves"] = wc_report_tree_leaves(report.r);
        if (wc_report_tree_nodes(report.r) >= 0) j["tree_nodes"] = wc_report_tree_nodes(report.r);
        j["elapsed_ms"] = elapsed_ms;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "input: " << path << "\n"
                  << "algorithm: " << wc_report_algorithm(report.r) << "\n"
                  << "n: " << wc_graph_vertex_count(graph.g)
                  << "  m: " << wc_graph_edge_count(graph.g) << "\n"
                  << "well_covered: " << (yes ? "yes" : "no") << "\n";
        if (wc_report_vc(report.r) >= 0) std::cout << "vc: " << wc_report_vc(report.r) << "\n";
        if (wc_report_vc_plus(report.r) >= 0)
            std::cout << "vc_plus: " << wc_report_vc_plus(report.r) << "\n";
        if (wc_report_alpha(report.r) >= 0)
            std::cout << "alpha: " << wc_report_alpha(report.r) << "\n";
        for (int32_t which = 0; which < 2; ++which) {
            auto w = report_witness(report.r, which);
            if (wc_report_witness(report.r, which, nullptr, 0) < 0) continue;
            std::cout << (which == 0 ? "witness_small:" : "witness_large:");
            for (int32_t v : w) std::cout << " " << v;
            std::cout << "\n";
        }
        if (wc_report_tree_leaves(report.r) >= 0)
            std::cout << "tree_leaves: " << wc_report_tree_leaves(report.r)
                      << "  tree_nodes: " << wc_report_tree_nodes(report.r) << "\n";
        std::cout << "elapsed_ms: " << elapsed_ms << "\n";
    }
    return yes ? kExitYes : kExitNo;
}

int run_stats(const std::string& path, const std::string& format, int max_n,
              uint64_t oracle_budget) {
    GraphHandle graph;
    if (!load_graph(path, format, graph)) return kExitError;
    if (wc_graph_vertex_count(graph.g) > max_n) {
        std::cerr << "error: graph has " << wc_graph_vertex_count(graph.g)
                  << " vertices, over the --max-n guard of " << max_n << "\n";
        return kExitError;
    }
    wc_graph_stats stats;
    wc_status status =
        wc_compute_stats(graph.g, oracle_budget, &stats, error_buffer.data(), error_buffer.size());
    if (status != WC_OK) {
        std::cerr << "error: " << error_buffer.c_str() << "\n";
        return kExitError;
    }
    std::cout << "n=" << stats.n << " m=" << stats.m << " alpha=" << stats.alpha
              << " vc=" << stats.vc << " vc_plus=" << stats.vc_plus << " i_min=" << stats.i_min
              << " degeneracy=" << stats.degeneracy << "\n";
    return kExitYes;
}

int run_kernel(const std::string& path, const std::string& format) {
    GraphHandle graph;
    if (!load_graph(path, format, graph)) return kExitError;
    GraphHandle stripped;
    if (wc_graph_strip_isolated(graph.g, &stripped.g, error_buffer.data(), error_buffer.size()) !=
        WC_OK) {
        std::cerr << "error: " << error_buffer.c_str() << "\n";
        return kExitError;
    }
    int32_t not_wc = 0, k = 0;
    wc_graph* kernel = nullptr;
    wc_status status = wc_kernelize(stripped.g, &not_wc, &k, &kernel, error_buffer.data(),
                                    error_buffer.size());
    if (status != WC_OK) {
        std::cerr << "error: " << error_buffer.c_str() << "\n";
        return kExitError;
    }
    if (not_wc) {
        std::cout << "NOT_WELL_COVERED (n > 5k: n=" << wc_graph_vertex_count(stripped.g)
                  << ", k=" << k << ")\n";
        return kExitNo;
    }
    GraphHandle owner;
    owner.g = kernel;
    char* text = nullptr;
    if (wc_graph_to_text(kernel, "edge-list", &text, error_buffer.data(), error_buffer.size()) !=
        WC_OK) {
        std::cerr << "error: " << error_buffer.c_str() << "\n";
        return kExitError;
    }
    std::cout << text;
    wc_text_free(text);
    return kExitYes;
}

int run_enum_mvc(const std::string& path, const std::string& format, bool count_only) {
    GraphHandle graph;
    if (!load_graph(path, format, graph)) return kExitError;
    uint64_t count = 0;
    wc_vertex_set_callback callback = nullptr;
    if (!count_only)
        callback = [](const int32_t* vertices, int32_t n, void*) {
            for (int32_t i = 0; i < n; ++i) std::cout << (i ? " " : "") << vertices[i];
            std::cout << "\n";
        };
    wc_status status = wc_enumerate_minimal_covers(graph.g, callback, nullptr, &count,
                                                   error_buffer.data(), error_buffer.size());
    if (status != WC_OK) {
        std::cerr << "error: " << error_buffer.c_str() << "\n";
        return kExitError;
    }
    if (count_only) std::cout << count << "\n";
    return kExitYes;
}

int run_gen(const std::string& family, int n, double p, int k, int q, uint64_t seed,
            const std::string& format) {
    GraphHandle graph;
    wc_status status = wc_graph_generate(family.c_str(), n, p, k, q, seed, &graph.g,
                                         error_buffer.data(), error_buffer.size());
    if (status != WC_OK) {
        std::cerr << "error: " << error_buffer.c_str() << "\n";
        return kExitError;
    }
    char* text = nullptr;
    if (wc_graph_to_text(graph.g, format.c_str(), &text, error_buffer.data(),
                         error_buffer.size()) != WC_OK) {
        std::cerr << "error: " << error_buffer.c_str() << "\n";
        return kExitError;
    }
    std::cout << text;
    wc_text_free(text);
    return kExitYes;
}

int run_bench(const std::string& dir, const std::string& algos_csv, uint64_t oracle_budget) {
    std::vector<std::string> algos;
    {
        std::string token;
        for (char c : algos_csv + ",") {
            if (c == ',') {
                if (!token.empty()) algos.push_back(token);
                token.clear();
            } else {
                token += c;
            }
        }
    }
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
        if (entry.is_regular_file()) files.push_back(entry.path());
    if (ec) {
        std::cerr << "error: cannot read directory '" << dir << "'\n";
        return kExitError;
    }
    std::sort(files.begin(), files.end());

    int violations = 0;
    std::cout << "instance\talgo\tverdict\tleaves\tbound\telapsed_ms\n";
    for (const auto& file : files) {
        GraphHandle graph;
        if (!load_graph(file.string(), "", graph)) {
            std::cout << file.filename().string() << "\t-\terror\t-\t-\t-\n";
            continue;
        }
        wc_graph_stats stats;
        bool have_stats = wc_compute_stats(graph.g, oracle_budget, &stats, error_buffer.data(),
                                           error_buffer.size()) == WC_OK;
        for (const auto& algo : algos) {
            wc_check_options options;
            wc_check_options_init(&options);
            options.algo = algo.c_str();
            options.early_exit = 0;  // measure the full tree
            options.oracle_budget = oracle_budget;
            ReportHandle report;
            auto start = std::chrono::steady_clock::now();
            wc_status status =
                wc_check(graph.g, &options, &report.r, error_buffer.data(), error_buffer.size());
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                  start)
                            .count();
            if (status != WC_OK) {
                std::cout << file.filename().string() << "\t" << algo << "\terror\t-\t-\t-\n";
                continue;
            }
            int64_t leaves = wc_report_tree_leaves(report.r);
            std::string bound = "-";
            bool violated = false;
            if (have_stats && leaves >= 0) {
                double limit = -1;
                if (algo == "vcplus")
                    limit = std::ceil(std::pow(1.4656, double(stats.vc_plus)));
                else if (algo == "degen")
                    limit = std::pow(double(stats.degeneracy + 1), double(stats.alpha));
                if (limit >= 0) {
                    bound = std::to_string(int64_t(limit));
                    violated = double(leaves) > limit;
                }
            }
            std::cout << file.filename().string() << "\t" << algo << "\t"
                      << (wc_report_well_covered(report.r) ? "yes" : "no") << "\t"
                      << (leaves >= 0 ? std::to_string(leaves) : "-") << "\t" << bound << "\t" << ms
                      << (violated ? "\tBOUND-VIOLATION" : "") << "\n";
            if (violated) ++violations;
        }
    }
    if (violations) {
        std::cerr << "error: " << violations << " bound violation(s)\n";
        return kExitError;
    }
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"well-covered graph toolkit"};
    app.require_subcommand(1);

    std::string path, format, algo = "auto", p4_class = "ext-laden", family, algos = "mvc-enum,vcplus,degen";
    int q = 7, n = 0, k = 2, max_n = 500;
    double p = 0.0;
    uint64_t seed = 1, oracle_budget = env_oracle_budget();
    bool as_json = false, no_early_exit = false, verify_class = false, count_only = false;
    std::string gen_format = "edge-list";

    auto* check = app.add_subcommand("check", "decide whether a graph is well covered");
    check->add_option("file", path)->required();
    check->add_option("--format", format)->check(CLI::IsMember({"edge-list", "dimacs"}));
    check->add_option("--algo", algo)
        ->check(CLI::IsMember({"auto", "oracle", "mvc-enum", "vcplus", "degen", "p4"}));
    check->add_option("--class", p4_class)->check(CLI::IsMember({"ext-laden", "qq4"}));
    check->add_option("--q", q);
    check->add_flag("--json", as_json);
    check->add_flag("--no-early-exit", no_early_exit);
    check->add_flag("--emit-tree-stats", no_early_exit,
                    "run the full tree so leaf/node counts are exact");
    check->add_flag("--verify-class", verify_class);
    check->add_option("--oracle-budget", oracle_budget);

    auto* stats = app.add_subcommand("stats", "brute-force graph statistics");
    stats->add_option("file", path)->required();
    stats->add_option("--format", format)->check(CLI::IsMember({"edge-list", "dimacs"}));
    stats->add_option("--max-n", max_n);
    stats->add_option("--oracle-budget", oracle_budget);

    auto* kernel = app.add_subcommand("kernel", "5k size-rule kernel");
    kernel->add_option("file", path)->required();
    kernel->add_option("--format", format)->check(CLI::IsMember({"edge-list", "dimacs"}));

    auto* enum_mvc = app.add_subcommand("enum-mvc", "list every minimal vertex cover");
    enum_mvc->add_option("file", path)->required();
    enum_mvc->add_option("--format", format)->check(CLI::IsMember({"edge-list", "dimacs"}));
    enum_mvc->add_flag("--count-only", count_only);

    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--family", family)->required();
    gen->add_option("--n", n);
    gen->add_option("--p", p);
    gen->add_option("--k", k);
    gen->add_option("--q", q);
    gen->add_option("--seed", seed);
    gen->add_option("--format", gen_format)->check(CLI::IsMember({"edge-list", "dimacs"}));

    auto* bench = app.add_subcommand("bench", "run algorithms over a directory of graphs");
    bench->add_option("dir", path)->required();
    bench->add_option("--algos", algos);
    bench->add_option("--oracle-budget", oracle_budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(path, format, algo, p4_class, q, no_early_exit, verify_class,
                             oracle_budget, as_json);
        if (stats->parsed()) return run_stats(path, format, max_n, oracle_budget);
        if (kernel->parsed()) return run_kernel(path, format);
        if (enum_mvc->parsed()) return run_enum_mvc(path, format, count_only);
        if (gen->parsed()) return run_gen(family, n, p, k, q, seed, gen_format);
        if (bench->parsed()) return run_bench(path, algos, oracle_budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
