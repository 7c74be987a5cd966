#ifndef BOOKRAMSEY_H
#define BOOKRAMSEY_H

/*
 * C interface to the bookramsey library.
 *
 * Objects are opaque handles created by br_*_new / br_* constructors and
 * released with the matching br_*_free. Every fallible call returns a
 * br_status; on failure br_last_error() describes the problem for the
 * calling thread until its next failing call.
 *
 * Text results (certificates, reports, CSV) come back as br_document handles.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BOOKRAMSEY_BUILDING)
#    define BR_API __declspec(dllexport)
#  else
#    define BR_API __declspec(dllimport)
#  endif
#else
#  define BR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum br_status {
    BR_OK = 0,
    BR_ERR_ARGUMENT = 1,     /* precondition violated */
    BR_ERR_PARSE = 2,        /* malformed witness, spec record or certificate */
    BR_ERR_NULL = 3,         /* required pointer argument was NULL */
    BR_ERR_INTERNAL = 4
} br_status;

typedef enum br_color { BR_RED = 0, BR_BLUE = 1 } br_color;

typedef struct br_graph br_graph;
typedef struct br_document br_document;

BR_API const char* br_last_error(void);
BR_API const char* br_version(void);

/* ---- documents ---------------------------------------------------------- */

BR_API const char* br_document_text(const br_document* doc);
BR_API size_t br_document_size(const br_document* doc);
BR_API void br_document_free(br_document* doc);

/* ---- graphs ------------------------------------------------------------- */

/* red_pairs holds pair_count (u, v) pairs as 2 * pair_count ints. */
BR_API br_status br_graph_from_red_pairs(int n_vertices, const int* red_pairs, size_t pair_count, br_graph** out);
BR_API br_status br_graph_from_witness(const char* witness, br_graph** out);
/* Builds a construction from its spec record, e.g. "kind=paley;q=29". */
BR_API br_status br_graph_construct(const char* spec_record, br_graph** out);
BR_API void br_graph_free(br_graph* g);

BR_API br_status br_graph_vertex_count(const br_graph* g, int* out);
BR_API br_status br_graph_is_red(const br_graph* g, int u, int v, int* out);
BR_API br_status br_graph_flip(br_graph* g, int u, int v);
BR_API br_status br_graph_witness(const br_graph* g, br_document** out);
BR_API br_status br_graph_codegree(const br_graph* g, int u, int v, br_color color, int* out);

typedef struct br_book {
    br_color color;
    int k;
    int has_base; /* 0 when the color has no k-clique; pages is then 0 */
    int base[4];
    int pages;
} br_book;

/* k in [2, 4]; k = 2 is the ordinary book. */
BR_API br_status br_graph_book_size(const br_graph* g, br_color color, int k, br_book* out);

/* Greedy witness written to witness (capacity n_vertices) when non-NULL. */
BR_API br_status br_graph_turan_floor(const br_graph* g, br_color color, int* floor, int* witness, int* witness_size);

BR_API br_status br_graph_pair_density(const br_graph* g, const int* first, size_t first_size, const int* second,
                                       size_t second_size, double* red_density, double* blue_density);

/* ---- certification ------------------------------------------------------ */

typedef struct br_target_result {
    int certified;
    int red_pages;
    int red_has_base;
    int blue_pages;
    int blue_has_base;
    int violation_color; /* br_color of the offending book, -1 when certified */
    int violation_base[2];
} br_target_result;

/* Certificate document written to *certificate when certified and non-NULL. */
BR_API br_status br_verify_target(const br_graph* g, int m, int n, const char* spec_record, br_target_result* out,
                                  br_document** certificate);

/* Parses a certificate document and re-measures its witness. *matches is 1
   when the recorded page counts and targets reproduce exactly. */
BR_API br_status br_reverify_certificate(const char* text, br_target_result* out, int* matches);

typedef struct br_mc_summary {
    int trials;
    int successes;
    double success_rate;
    int has_certificate;
} br_mc_summary;

/* workers = 0 uses the hardware concurrency. The certificate document is
   only produced when some trial succeeded. */
BR_API br_status br_mc_certify(const char* spec_record, int m, int n, int trials, uint64_t base_seed,
                               unsigned workers, br_mc_summary* out, br_document** report,
                               br_document** certificate);

typedef struct br_anneal_params {
    int n_vertices;
    int m;
    int n;
    double weight_red;  /* <= 0 selects 1/m */
    double weight_blue; /* <= 0 selects 1/n */
    double initial_temperature;
    double cooling_factor;
    int steps_per_temperature; /* 0 selects 10 per vertex pair */
    double floor_temperature;
    uint64_t seed;
} br_anneal_params;

BR_API void br_anneal_defaults(br_anneal_params* params);

typedef struct br_anneal_summary {
    double best_cost;
    int red_pages;
    int blue_pages;
    uint64_t proposals;
} br_anneal_summary;

/* certificate is produced only for a cost-0 outcome. */
BR_API br_status br_anneal(const br_anneal_params* params, br_anneal_summary* out, br_document** report,
                           br_document** certificate);

typedef struct br_exhaustive_summary {
    int witness_found;
    uint64_t colorings_examined;
    uint64_t nodes_visited;
} br_exhaustive_summary;

BR_API br_status br_exhaustive(int n_vertices, int m, int n, br_exhaustive_summary* out, br_document** report);

/* ---- bounds ------------------------------------------------------------- */

BR_API br_status br_parse_alpha(const char* text, double* out);
BR_API br_status br_random_bound(double alpha, int k, double* out);
BR_API br_status br_mid_upper(double alpha, double* out);
BR_API br_status br_p_star(double alpha, double* out);
BR_API br_status br_three_block_bound(double alpha, double* out);
BR_API br_status br_crossing_alpha(double* out);
BR_API br_status br_chernoff_exponent(double c, double* out);
/* out receives delta1, delta2, cd - c - d. */
BR_API br_status br_claim_discriminants(double alpha, double out[3]);

typedef struct br_expectations {
    double expected_red_intra;
    double expected_blue_cross;
    double expected_red_cross;
} br_expectations;

BR_API br_status br_construction_expectations(int n_vertices, double p, br_expectations* out);

typedef struct br_bound_point {
    double alpha;
    double random_lb;
    int has_mid_ub;
    double mid_ub;
    int has_three_block_lb;
    double three_block_lb;
    double best_lower;
    double best_upper;
    const char* regime; /* static string */
} br_bound_point;

BR_API br_status br_best_known(double alpha, br_bound_point* out);
BR_API br_status br_bounds_csv(double alpha_min, double alpha_max, int steps, br_document** out);

BR_API br_status br_inequality_gap(double lambda, double alpha, double* out);

typedef struct br_interval_summary {
    int certified; /* 1 for nonnegative_certified */
    double minimum_lo;
    double minimum_hi;
    size_t touching_boxes;
    size_t unresolved_boxes;
    uint64_t boxes_processed;
} br_interval_summary;

BR_API br_status br_certify_no_solution(double alpha_lo, double alpha_hi, double tolerance, int max_depth,
                                        br_interval_summary* out, br_document** report);

#ifdef __cplusplus
}
#endif

#endif /* BOOKRAMSEY_H */
