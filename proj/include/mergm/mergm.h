/*
 * mergm -- hierarchical multilayer ERGMs for ordinal weighted networks.
 *
 * C API over the core library: opaque handles, status-code returns, and a
 * thread-local error message. All functions returning mergm_status set the
 * out-parameter only on MERGM_OK; call mergm_last_error() for the reason
 * otherwise. Handles are freed with the matching *_free function.
 */
#ifndef MERGM_H
#define MERGM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mergm_status {
  MERGM_OK = 0,
  MERGM_ERR_USAGE = 1,   /* bad arguments or configuration */
  MERGM_ERR_DATA = 2,    /* unreadable or ill-formed data */
  MERGM_ERR_NUMERIC = 3  /* numerical failure */
} mergm_status;

typedef struct mergm_network mergm_network;       /* weighted ordinal network */
typedef struct mergm_stack mergm_stack;           /* nested binary layers */
typedef struct mergm_attributes mergm_attributes; /* categorical node attributes */
typedef struct mergm_model mergm_model;           /* ordered statistic list */
typedef struct mergm_posterior mergm_posterior;   /* posterior sample set */
typedef struct mergm_gof mergm_gof;               /* weighted-degree GOF report */

const char* mergm_version(void);
/* Message for the most recent failure on this thread; empty if none. */
const char* mergm_last_error(void);

/* -- weighted networks ---------------------------------------------------- */

/* CSV edge list with integer weights (see README for the format). */
mergm_status mergm_network_read(const char* path, mergm_network** out);
/* CSV edge list with real weights, thresholded into ordinal categories:
 * weight(i,j) = #{k : raw >= thresholds[k]}; thresholds strictly increasing. */
mergm_status mergm_network_read_ordinalized(const char* path, const double* thresholds, size_t n_thresholds,
                                            mergm_network** out);
mergm_status mergm_network_write(const mergm_network* net, const char* path);
/* Empirical (linear-interpolation) quantiles of the nonzero edge weights in a
 * real-valued edge list; levels in [0,1], out has n_levels entries. Useful for
 * picking ordinalization thresholds from the weight distribution. */
mergm_status mergm_edgelist_weight_quantiles(const char* path, const double* levels, size_t n_levels, double* out);
size_t mergm_network_nodes(const mergm_network* net);
uint32_t mergm_network_weight(const mergm_network* net, uint32_t i, uint32_t j);
uint32_t mergm_network_max_weight(const mergm_network* net);
mergm_status mergm_network_weighted_degree(const mergm_network* net, uint32_t node, uint64_t* out);
void mergm_network_free(mergm_network* net);

/* -- layer stacks ---------------------------------------------------------- */

/* Layer w holds a dyad iff its weight is >= w; n_layers must cover the
 * maximum observed weight. */
mergm_status mergm_stack_decompose(const mergm_network* net, uint32_t n_layers, mergm_stack** out);
mergm_status mergm_stack_recompose(const mergm_stack* stack, mergm_network** out);
size_t mergm_stack_layers(const mergm_stack* stack);
/* layer is 1-based (1..W). */
mergm_status mergm_stack_edge_count(const mergm_stack* stack, uint32_t layer, size_t* out);
mergm_status mergm_stack_write_layer(const mergm_stack* stack, uint32_t layer, const char* path);
void mergm_stack_free(mergm_stack* stack);

/* -- node attributes ------------------------------------------------------- */

mergm_status mergm_attributes_read(const char* path, mergm_attributes** out);
void mergm_attributes_free(mergm_attributes* attrs);

/* -- model specification --------------------------------------------------- */

/* JSON: {"statistics":[{"kind":"edges"},{"kind":"gwesp","decay":0.693},
 *                      {"kind":"nodematch","attribute":"faction"}]}
 * (or the same object wrapped as {"model": ...}). */
mergm_status mergm_model_from_json(const char* json_text, mergm_model** out);
size_t mergm_model_dim(const mergm_model* model);
void mergm_model_free(mergm_model* model);

/* -- generative simulation -------------------------------------------------- */

/* One multilayer draw; layer 1 is conditioned on the complete graph, each
 * further layer on its predecessor. phi is row-major n_layers x dim. */
mergm_status mergm_simulate_stack(const mergm_model* model, const mergm_attributes* attrs_or_null, size_t n_nodes,
                                  size_t n_layers, const double* phi, uint32_t steps_per_edge, uint64_t seed,
                                  mergm_stack** out);

/* n_draws x dim row-major samples from N(mean, cov); cov row-major dim x dim. */
mergm_status mergm_sample_mvn(size_t dim, const double* mean, const double* cov, size_t n_draws, uint64_t seed,
                              double* out);

/* -- posterior inference ---------------------------------------------------- */

/* config_json = {"model":..., "prior":{...}?, "run":{...}?}; defaults follow
 * the README. The seed argument overrides any ambient state: identical
 * (data, config, seed) give bit-identical posterior files. */
mergm_status mergm_fit(const mergm_stack* observed, const mergm_attributes* attrs_or_null, const char* config_json,
                       uint64_t seed, mergm_posterior** out);

/* Validates a fit configuration and returns the fully resolved JSON (every
 * default materialized); free the string with mergm_string_free. */
mergm_status mergm_config_resolve(const char* config_json, char** out_json);
void mergm_string_free(char* s);

mergm_status mergm_posterior_write(const mergm_posterior* post, const char* phi_path, const char* hyper_path);
mergm_status mergm_posterior_write_acceptance(const mergm_posterior* post, const char* path);
/* hyper_path may be NULL when only layer parameters are needed (e.g. GOF). */
mergm_status mergm_posterior_read(const char* phi_path, const char* hyper_path, mergm_posterior** out);
size_t mergm_posterior_draws(const mergm_posterior* post);
size_t mergm_posterior_layers(const mergm_posterior* post);
size_t mergm_posterior_dim(const mergm_posterior* post);
void mergm_posterior_free(mergm_posterior* post);

/* -- goodness of fit --------------------------------------------------------- */

mergm_status mergm_gof_run(const mergm_posterior* post, const mergm_model* model,
                           const mergm_attributes* attrs_or_null, const mergm_network* observed, size_t replicates,
                           uint32_t steps_per_edge, uint64_t seed, size_t threads, mergm_gof** out);
mergm_status mergm_gof_write(const mergm_gof* gof, const char* envelope_path, const char* replicates_path,
                             const char* summary_path);
double mergm_gof_coverage(const mergm_gof* gof);
void mergm_gof_free(mergm_gof* gof);

/* -- posterior summaries ------------------------------------------------------ */

/* Mean/SD/quantile tables (CSV plus a plain-text rendering); model_or_null
 * supplies statistic labels. */
mergm_status mergm_summary_write(const mergm_posterior* post, const mergm_model* model_or_null, const char* csv_path,
                                 const char* text_path);

#ifdef __cplusplus
}
#endif

#endif /* MERGM_H */
