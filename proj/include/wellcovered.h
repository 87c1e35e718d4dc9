/* wellcovered — recognition of well-covered graphs (all maximal independent
 * sets share one size), exposed as a C API over opaque handles.
 *
 * Every function that can fail returns a wc_status and, when a non-NULL
 * error buffer is supplied, leaves a human-readable message in it. Handles
 * returned through out-parameters are owned by the caller and released with
 * the matching _destroy function. All functions are thread-safe as long as a
 * handle is not destroyed while in use; graphs are immutable after creation.
 */
#ifndef WELLCOVERED_H
#define WELLCOVERED_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wc_graph wc_graph;
typedef struct wc_report wc_report;

typedef enum wc_status {
    WC_OK = 0,
    WC_ERR_PARSE = 1,       /* malformed input text */
    WC_ERR_INVALID_ARG = 2, /* bad arguments or violated precondition */
    WC_ERR_BUDGET = 3,      /* enumeration or search budget exhausted */
    WC_ERR_GUARD = 4,       /* input too large for a guarded operation */
    WC_ERR_DECOMP = 5,      /* structural decomposition found no case */
    WC_ERR_IO = 6,          /* file could not be read */
    WC_ERR_INTERNAL = 7
} wc_status;

const char* wc_version(void);

/* ---- graphs ------------------------------------------------------------ */

/* format: "edge-list", "dimacs", or NULL to auto-detect. */
wc_status wc_graph_parse(const char* text, const char* format, wc_graph** out,
                         char* err, size_t err_len);
wc_status wc_graph_from_file(const char* path, const char* format, wc_graph** out,
                             char* err, size_t err_len);
/* n vertices and m edges given as u,v pairs: edges[2*i], edges[2*i+1]. */
wc_status wc_graph_create(int32_t n, const int32_t* edges, int32_t m, wc_graph** out,
                          char* err, size_t err_len);
/* family: gnp, path, cycle, star, complete, corona, thin-spider, thick-spider,
 * pseudo-split, cograph, union-join-recipe. Unused parameters are ignored. */
wc_status wc_graph_generate(const char* family, int32_t n, double p, int32_t k, int32_t q,
                            uint64_t seed, wc_graph** out, char* err, size_t err_len);
void wc_graph_destroy(wc_graph* g);

int32_t wc_graph_vertex_count(const wc_graph* g);
int32_t wc_graph_edge_count(const wc_graph* g);
/* format: "edge-list" or "dimacs"; the returned string is released with wc_text_free. */
wc_status wc_graph_to_text(const wc_graph* g, const char* format, char** out,
                           char* err, size_t err_len);
void wc_text_free(char* text);
/* New graph without the degree-0 vertices (the verdict is unchanged by this). */
wc_status wc_graph_strip_isolated(const wc_graph* g, wc_graph** out, char* err, size_t err_len);

/* ---- statistics (brute force) ------------------------------------------ */

typedef struct wc_graph_stats {
    int32_t n, m;
    int32_t alpha;      /* maximum independent set */
    int32_t vc;         /* minimum vertex cover = n - alpha */
    int32_t vc_plus;    /* maximum minimal vertex cover */
    int32_t i_min;      /* minimum maximal independent set = n - vc_plus */
    int32_t degeneracy;
} wc_graph_stats;

/* oracle_budget 0 picks the default (10^7 enumerated sets). */
wc_status wc_compute_stats(const wc_graph* g, uint64_t oracle_budget, wc_graph_stats* out,
                           char* err, size_t err_len);

/* ---- the decision ------------------------------------------------------ */

typedef struct wc_check_options {
    /* "auto", "oracle", "mvc-enum", "vcplus", "degen", "p4" */
    const char* algo;
    /* p4 only: "ext-laden" or "qq4", and the q parameter for qq4. */
    const char* p4_class;
    int32_t q;
    /* stop at the first size disagreement (mvc-enum, degen); default on. */
    int32_t early_exit;
    /* verify class membership before the p4 run (guarded; may be slow). */
    int32_t verify_class;
    uint64_t oracle_budget; /* 0 = default */
} wc_check_options;

void wc_check_options_init(wc_check_options* options);

wc_status wc_check(const wc_graph* g, const wc_check_options* options, wc_report** out,
                   char* err, size_t err_len);
void wc_report_destroy(wc_report* report);

int32_t wc_report_well_covered(const wc_report* r); /* 1 = yes, 0 = no */
const char* wc_report_algorithm(const wc_report* r);
/* -1 when the algorithm did not compute the value. */
int32_t wc_report_vc(const wc_report* r);
int32_t wc_report_vc_plus(const wc_report* r);
int32_t wc_report_alpha(const wc_report* r);
int64_t wc_report_tree_leaves(const wc_report* r);
int64_t wc_report_tree_nodes(const wc_report* r);

/* Witnesses are two maximal independent sets of different sizes, present only
 * on some NO verdicts. which: 0 = smaller, 1 = larger. Returns the length, or
 * -1 when absent; copies at most cap entries. */
int32_t wc_report_witness(const wc_report* r, int32_t which, int32_t* buffer, int32_t cap);

/* ---- kernel and enumeration -------------------------------------------- */

/* Size test against 5 * vc. Requires a graph without isolated vertices.
 * When not well covered, *kernel_out is NULL; otherwise it receives the
 * kernel (the input itself). k_out receives the vertex cover number. */
wc_status wc_kernelize(const wc_graph* g, int32_t* not_well_covered, int32_t* k_out,
                       wc_graph** kernel_out, char* err, size_t err_len);

typedef void (*wc_vertex_set_callback)(const int32_t* vertices, int32_t count, void* user);

/* Enumerates all minimal vertex covers (deduplicated). The callback may be
 * NULL when only the count is wanted. */
wc_status wc_enumerate_minimal_covers(const wc_graph* g, wc_vertex_set_callback callback,
                                      void* user, uint64_t* count_out, char* err, size_t err_len);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WELLCOVERED_H */
