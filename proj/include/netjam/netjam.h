/*
 * Copyright 2026 The netjam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libnetjam.
 *
 * Every fallible function returns an nj_status; on failure a description is
 * available from nj_last_error() on the calling thread until the next call
 * into the library from that thread. Handles are opaque and released with the
 * matching *_free function, which accepts NULL.
 */

#ifndef NETJAM_NETJAM_H_
#define NETJAM_NETJAM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define NJ_API __declspec(dllexport)
#else
#  define NJ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nj_status {
  NJ_OK = 0,
  NJ_ERR_INVALID_ARGUMENT = 1, /* NULL handle or out-pointer, bad index */
  NJ_ERR_CONFIG = 2,           /* parameter invariant violated */
  NJ_ERR_PARSE = 3,            /* config text malformed */
  NJ_ERR_STRUCTURE = 4,        /* graph disconnected or not simple */
  NJ_ERR_CONTRACT = 5,         /* operation precondition violated */
  NJ_ERR_DOMAIN = 6,           /* formula evaluated outside its domain */
  NJ_ERR_BRACKET = 7,          /* beta search bracket does not straddle */
  NJ_ERR_IO = 8,
  NJ_ERR_INTERNAL = 9
} nj_status;

typedef struct nj_graph nj_graph;
typedef struct nj_sim nj_sim;
typedef struct nj_config nj_config;

NJ_API const char* nj_version(void);
NJ_API const char* nj_last_error(void);
NJ_API const char* nj_status_name(nj_status status);

/* ---- networks ---------------------------------------------------------- */

/* Grows a hybrid-attachment network (p = 0 preferential, p = 1 random). */
NJ_API nj_status nj_graph_generate(size_t nodes, size_t links_per_node,
                                   double p, uint64_t seed, nj_graph** out);
NJ_API void nj_graph_free(nj_graph* graph);

NJ_API size_t nj_graph_node_count(const nj_graph* graph);
NJ_API size_t nj_graph_edge_count(const nj_graph* graph);
NJ_API size_t nj_graph_k_max(const nj_graph* graph);
NJ_API nj_status nj_graph_degree(const nj_graph* graph, uint32_t node,
                                 size_t* out);
NJ_API nj_status nj_graph_distance(const nj_graph* graph, uint32_t u,
                                   uint32_t v, unsigned* out);
NJ_API nj_status nj_graph_mean_path_length(const nj_graph* graph, double* out);
/* Edge-list text: "# N=.. m=.. p=.. seed=.." header, then "u v" lines. */
NJ_API nj_status nj_graph_write_edge_list(const nj_graph* graph,
                                          const char* path);

/* ---- traffic ------------------------------------------------------------- */

typedef struct nj_rate_params {
  double lambda;
  double beta;
  int efficient;           /* 0 = every node gets beta; 1 = hubs only */
  double hub_fraction;     /* used when degree_threshold == 0 */
  size_t degree_threshold; /* hubs are nodes with k >= threshold if > 0 */
} nj_rate_params;

typedef struct nj_sim_counters {
  uint64_t t;
  uint64_t created;
  uint64_t delivered;
  uint64_t in_flight;
  double n1; /* in_flight / N */
  double n2; /* mean queue over the hub set */
} nj_sim_counters;

/* The simulation keeps its graph alive; the graph may be freed first. */
NJ_API nj_status nj_sim_create(const nj_graph* graph,
                               const nj_rate_params* params, uint64_t seed,
                               nj_sim** out);
NJ_API void nj_sim_free(nj_sim* sim);
NJ_API nj_status nj_sim_step(nj_sim* sim, size_t steps);
NJ_API nj_status nj_sim_inject(nj_sim* sim, uint32_t at, uint32_t destination);
NJ_API nj_status nj_sim_counters_get(const nj_sim* sim, nj_sim_counters* out);
NJ_API nj_status nj_sim_queue_length(const nj_sim* sim, uint32_t node,
                                     size_t* out);

/* ---- analytic threshold ----------------------------------------------- */

NJ_API nj_status nj_gamma_of_p(double p, size_t m, double* out);
NJ_API nj_status nj_kmax_estimate(double nodes, double m, double gamma,
                                  double* out);
/* *in_range is set to 1 when alpha1 lies in (0, 1], else 0. */
NJ_API nj_status nj_calibrate_alpha1(double beta_c, double lambda, double h,
                                     double k_max, double* alpha1,
                                     int* in_range);
NJ_API nj_status nj_beta_c_predicted(double lambda, double h, double alpha1,
                                     double k_max, double* out);
NJ_API nj_status nj_lambda_min(double alpha1, double h, double k_max,
                               double* out);

/* ---- experiments ------------------------------------------------------- */

NJ_API nj_status nj_config_parse(const char* text, nj_config** out);
NJ_API nj_status nj_config_load(const char* path, nj_config** out);
NJ_API void nj_config_free(nj_config* config);
NJ_API nj_status nj_config_set_output(nj_config* config, const char* dir);
NJ_API nj_status nj_config_set_master_seed(nj_config* config, uint64_t seed);
NJ_API nj_status nj_config_set_workers(nj_config* config, size_t workers);
/*
 * Copies the resolved "key = value" manifest into buf (NUL-terminated,
 * truncated to capacity). *needed receives the full length including NUL.
 */
NJ_API nj_status nj_config_manifest(const nj_config* config, char* buf,
                                    size_t capacity, size_t* needed);
/* Runs the experiment and writes its CSVs and manifest.txt. */
NJ_API nj_status nj_run_experiment(const nj_config* config);

#ifdef __cplusplus
}
#endif

#endif /* NETJAM_NETJAM_H_ */
