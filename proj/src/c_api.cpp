// Copyright 2026 The netjam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netjam/netjam.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "netjam/config.hpp"
#include "netjam/error.hpp"
#include "netjam/experiment.hpp"
#include "netjam/netgen.hpp"
#include "netjam/routing.hpp"
#include "netjam/theory.hpp"
#include "netjam/traffic.hpp"

struct nj_graph {
  netjam::GrowthConfig growth;
  std::shared_ptr<const netjam::Graph> graph;
  std::shared_ptr<const netjam::DistanceMatrix> dist;
};

struct nj_sim {
  std::shared_ptr<const netjam::Graph> graph;
  std::shared_ptr<const netjam::DistanceMatrix> dist;
  std::unique_ptr<netjam::RatePlan> plan;
  std::unique_ptr<netjam::Simulation> sim;
};

struct nj_config {
  netjam::ExperimentConfig config;
};

namespace {

thread_local std::string g_last_error;

nj_status fail(nj_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
nj_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return NJ_OK;
  } catch (const netjam::ParseError& e) {
    return fail(NJ_ERR_PARSE, e.what());
  } catch (const netjam::ConfigError& e) {
    return fail(NJ_ERR_CONFIG, e.what());
  } catch (const netjam::StructuralError& e) {
    return fail(NJ_ERR_STRUCTURE, e.what());
  } catch (const netjam::ContractViolation& e) {
    return fail(NJ_ERR_CONTRACT, e.what());
  } catch (const netjam::DomainError& e) {
    return fail(NJ_ERR_DOMAIN, e.what());
  } catch (const netjam::BracketError& e) {
    return fail(NJ_ERR_BRACKET, e.what());
  } catch (const netjam::IoError& e) {
    return fail(NJ_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NJ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NJ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NJ_ERR_INTERNAL, "unknown error");
  }
}

#define NJ_REQUIRE(cond, what)                              \
  do {                                                      \
    if (!(cond)) return fail(NJ_ERR_INVALID_ARGUMENT, what); \
  } while (0)

}  // namespace

extern "C" {

const char* nj_version(void) { return netjam::version_string(); }

const char* nj_last_error(void) { return g_last_error.c_str(); }

const char* nj_status_name(nj_status status) {
  switch (status) {
    case NJ_OK: return "ok";
    case NJ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NJ_ERR_CONFIG: return "configuration error";
    case NJ_ERR_PARSE: return "parse error";
    case NJ_ERR_STRUCTURE: return "structural error";
    case NJ_ERR_CONTRACT: return "contract violation";
    case NJ_ERR_DOMAIN: return "domain error";
    case NJ_ERR_BRACKET: return "bracket error";
    case NJ_ERR_IO: return "i/o error";
    case NJ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

nj_status nj_graph_generate(size_t nodes, size_t links_per_node, double p,
                            uint64_t seed, nj_graph** out) {
  NJ_REQUIRE(out, "out is NULL");
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<nj_graph>();
    h->growth = {nodes, links_per_node, p, seed};
    h->graph = std::make_shared<const netjam::Graph>(
        netjam::generate_network(h->growth));
    h->dist = std::make_shared<const netjam::DistanceMatrix>(
        netjam::compute_distances(*h->graph));
    *out = h.release();
  });
}

void nj_graph_free(nj_graph* graph) { delete graph; }

size_t nj_graph_node_count(const nj_graph* graph) {
  return graph ? graph->graph->node_count() : 0;
}

size_t nj_graph_edge_count(const nj_graph* graph) {
  return graph ? graph->graph->edge_count() : 0;
}

size_t nj_graph_k_max(const nj_graph* graph) {
  return graph ? netjam::k_max(*graph->graph) : 0;
}

nj_status nj_graph_degree(const nj_graph* graph, uint32_t node, size_t* out) {
  NJ_REQUIRE(graph && out, "NULL argument");
  NJ_REQUIRE(node < graph->graph->node_count(), "node out of range");
  *out = graph->graph->degree(node);
  return NJ_OK;
}

nj_status nj_graph_distance(const nj_graph* graph, uint32_t u, uint32_t v,
                            unsigned* out) {
  NJ_REQUIRE(graph && out, "NULL argument");
  const auto n = graph->graph->node_count();
  NJ_REQUIRE(u < n && v < n, "node out of range");
  *out = (*graph->dist)(u, v);
  return NJ_OK;
}

nj_status nj_graph_mean_path_length(const nj_graph* graph, double* out) {
  NJ_REQUIRE(graph && out, "NULL argument");
  return guarded([&] { *out = netjam::mean_path_length(*graph->graph, *graph->dist); });
}

nj_status nj_graph_write_edge_list(const nj_graph* graph, const char* path) {
  NJ_REQUIRE(graph && path, "NULL argument");
  return guarded([&] {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw netjam::IoError(std::string("cannot open '") + path + "'");
    netjam::write_edge_list(f, *graph->graph, graph->growth);
    f.close();
    if (!f) throw netjam::IoError(std::string("cannot write '") + path + "'");
  });
}

nj_status nj_sim_create(const nj_graph* graph, const nj_rate_params* params,
                        uint64_t seed, nj_sim** out) {
  NJ_REQUIRE(graph && params && out, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    netjam::HubSelection hubs;
    hubs.fraction = params->hub_fraction;
    if (params->degree_threshold > 0) hubs.degree_threshold = params->degree_threshold;
    auto h = std::make_unique<nj_sim>();
    h->graph = graph->graph;
    h->dist = graph->dist;
    h->plan = std::make_unique<netjam::RatePlan>(netjam::RatePlan::make(
        *h->graph, params->lambda, params->beta,
        params->efficient ? netjam::Approach::kEfficient
                          : netjam::Approach::kNormal,
        hubs));
    h->sim = std::make_unique<netjam::Simulation>(*h->graph, *h->dist,
                                                  *h->plan, seed);
    *out = h.release();
  });
}

void nj_sim_free(nj_sim* sim) { delete sim; }

nj_status nj_sim_step(nj_sim* sim, size_t steps) {
  NJ_REQUIRE(sim, "sim is NULL");
  return guarded([&] {
    for (size_t i = 0; i < steps; ++i) sim->sim->step();
  });
}

nj_status nj_sim_inject(nj_sim* sim, uint32_t at, uint32_t destination) {
  NJ_REQUIRE(sim, "sim is NULL");
  return guarded([&] { sim->sim->inject(at, destination); });
}

nj_status nj_sim_counters_get(const nj_sim* sim, nj_sim_counters* out) {
  NJ_REQUIRE(sim && out, "NULL argument");
  const auto& s = *sim->sim;
  out->t = s.time();
  out->created = s.created();
  out->delivered = s.delivered();
  out->in_flight = s.in_flight();
  out->n1 = static_cast<double>(s.in_flight()) /
            static_cast<double>(sim->graph->node_count());
  out->n2 = s.mean_hub_queue();
  return NJ_OK;
}

nj_status nj_sim_queue_length(const nj_sim* sim, uint32_t node, size_t* out) {
  NJ_REQUIRE(sim && out, "NULL argument");
  NJ_REQUIRE(node < sim->graph->node_count(), "node out of range");
  *out = sim->sim->queue_length(node);
  return NJ_OK;
}

nj_status nj_gamma_of_p(double p, size_t m, double* out) {
  NJ_REQUIRE(out, "out is NULL");
  return guarded([&] { *out = netjam::gamma_of_p(p, m); });
}

nj_status nj_kmax_estimate(double nodes, double m, double gamma, double* out) {
  NJ_REQUIRE(out, "out is NULL");
  return guarded([&] { *out = netjam::kmax_estimate(nodes, m, gamma); });
}

nj_status nj_calibrate_alpha1(double beta_c, double lambda, double h,
                              double k_max, double* alpha1, int* in_range) {
  NJ_REQUIRE(alpha1, "alpha1 is NULL");
  return guarded([&] {
    const auto cal = netjam::calibrate_alpha1(beta_c, lambda, h, k_max);
    *alpha1 = cal.alpha1;
    if (in_range) *in_range = cal.warning.empty() ? 1 : 0;
    if (!cal.warning.empty()) g_last_error = cal.warning;
  });
}

nj_status nj_beta_c_predicted(double lambda, double h, double alpha1,
                              double k_max, double* out) {
  NJ_REQUIRE(out, "out is NULL");
  return guarded([&] { *out = netjam::beta_c_predicted(lambda, h, alpha1, k_max); });
}

nj_status nj_lambda_min(double alpha1, double h, double k_max, double* out) {
  NJ_REQUIRE(out, "out is NULL");
  return guarded([&] { *out = netjam::lambda_min(alpha1, h, k_max); });
}

nj_status nj_config_parse(const char* text, nj_config** out) {
  NJ_REQUIRE(text && out, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<nj_config>();
    h->config = netjam::parse_config(text);
    *out = h.release();
  });
}

nj_status nj_config_load(const char* path, nj_config** out) {
  NJ_REQUIRE(path && out, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<nj_config>();
    h->config = netjam::load_config(path);
    *out = h.release();
  });
}

void nj_config_free(nj_config* config) { delete config; }

namespace {

void mark_explicit(netjam::ExperimentConfig& c, const char* key) {
  for (const auto& k : c.explicit_keys) {
    if (k == key) return;
  }
  c.explicit_keys.emplace_back(key);
}

}  // namespace

nj_status nj_config_set_output(nj_config* config, const char* dir) {
  NJ_REQUIRE(config && dir && *dir, "NULL or empty argument");
  config->config.output = dir;
  mark_explicit(config->config, "output");
  config->config.refresh();
  return NJ_OK;
}

nj_status nj_config_set_master_seed(nj_config* config, uint64_t seed) {
  NJ_REQUIRE(config, "config is NULL");
  config->config.master_seed = seed;
  mark_explicit(config->config, "master_seed");
  config->config.refresh();
  return NJ_OK;
}

nj_status nj_config_set_workers(nj_config* config, size_t workers) {
  NJ_REQUIRE(config, "config is NULL");
  config->config.workers = workers;
  mark_explicit(config->config, "workers");
  config->config.refresh();
  return NJ_OK;
}

nj_status nj_config_manifest(const nj_config* config, char* buf,
                             size_t capacity, size_t* needed) {
  NJ_REQUIRE(config, "config is NULL");
  const std::string text = netjam::render_manifest(config->config);
  if (needed) *needed = text.size() + 1;
  if (buf && capacity > 0) {
    const size_t n = text.size() < capacity - 1 ? text.size() : capacity - 1;
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
  }
  return NJ_OK;
}

nj_status nj_run_experiment(const nj_config* config) {
  NJ_REQUIRE(config, "config is NULL");
  return guarded([&] { netjam::run_experiment(config->config); });
}

}  // extern "C"
