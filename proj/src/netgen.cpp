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

#include "netjam/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "netjam/error.hpp"
#include "netjam/format.hpp"
#include "netjam/rng.hpp"

namespace netjam {

void GrowthConfig::validate() const {
  if (links_per_node < 1) {
    throw ConfigError("links per node m must be >= 1");
  }
  if (nodes < links_per_node + 1) {
    throw ConfigError("node count N=" + std::to_string(nodes) +
                      " must be >= m + 1 = " +
                      std::to_string(links_per_node + 1));
  }
  if (nodes > std::numeric_limits<NodeId>::max()) {
    throw ConfigError("node count N exceeds the node id range");
  }
  if (!(random_fraction >= 0.0 && random_fraction <= 1.0)) {
    throw ConfigError("random attachment probability p=" +
                      format_number(random_fraction) + " outside [0, 1]");
  }
}

Graph Graph::from_edges(std::size_t nodes,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  Graph g;
  g.degrees_.assign(nodes, 0);
  for (const auto& [u, v] : edges) {
    if (u >= nodes || v >= nodes) {
      throw StructuralError("edge endpoint out of range");
    }
    if (u == v) {
      throw StructuralError("self-loop at node " + std::to_string(u));
    }
    ++g.degrees_[u];
    ++g.degrees_[v];
  }
  g.offsets_.assign(nodes + 1, 0);
  for (std::size_t i = 0; i < nodes; ++i) {
    g.offsets_[i + 1] = g.offsets_[i] + g.degrees_[i];
  }
  g.targets_.resize(g.offsets_[nodes]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < nodes; ++i) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw StructuralError("duplicate edge at node " + std::to_string(i));
    }
  }
  return g;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  const std::size_t n = node_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

std::size_t expected_edge_count(const GrowthConfig& config) {
  const std::size_t m = config.links_per_node;
  return m * (m + 1) / 2 + m * (config.nodes - m - 1);
}

Graph generate_network(const GrowthConfig& config) {
  config.validate();
  const std::size_t n = config.nodes;
  const std::size_t m = config.links_per_node;
  const double p = config.random_fraction;

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(expected_edge_count(config));
  // Node i appears k_i times; a uniform pick from here is degree-proportional.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * expected_edge_count(config));

  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  Rng rng(config.seed);
  std::vector<NodeId> chosen;
  chosen.reserve(m);
  for (std::size_t next = m + 1; next < n; ++next) {
    // Total weight splits into (1 - p) * sum(k) preferential and p * n
    // uniform mass; drawing the component first samples the exact mixture.
    const double pref_mass = (1.0 - p) * static_cast<double>(endpoints.size());
    const double rand_mass = p * static_cast<double>(next);
    const double total = pref_mass + rand_mass;
    chosen.clear();
    while (chosen.size() < m) {
      bool preferential;
      if (p == 0.0) {
        preferential = true;
      } else if (p == 1.0) {
        preferential = false;
      } else {
        preferential = rng.uniform01() * total < pref_mass;
      }
      const NodeId target =
          preferential
              ? endpoints[static_cast<std::size_t>(rng.below(endpoints.size()))]
              : static_cast<NodeId>(rng.below(next));
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) {
        chosen.push_back(target);
      }
    }
    for (NodeId target : chosen) {
      edges.emplace_back(target, static_cast<NodeId>(next));
      endpoints.push_back(target);
      endpoints.push_back(static_cast<NodeId>(next));
    }
  }
  return Graph::from_edges(n, edges);
}

DegreeHistogram degree_histogram(const Graph& graph) {
  DegreeHistogram hist;
  hist.nodes = graph.node_count();
  for (std::size_t k : graph.degrees()) ++hist.counts[k];
  return hist;
}

std::size_t k_max(const Graph& graph) {
  const auto& d = graph.degrees();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

namespace {

// Slope of the least-squares line through (x, y).
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

}  // namespace

double fit_power_law_exponent(const DegreeHistogram& hist,
                              std::size_t min_degree, std::size_t min_count) {
  if (min_degree < 1) min_degree = 1;
  // Bins [min_degree * 2^j, min_degree * 2^(j+1)).
  std::vector<double> x, y;
  std::size_t lo = min_degree;
  const std::size_t top = hist.counts.empty() ? 0 : hist.counts.rbegin()->first;
  while (lo <= top) {
    const std::size_t hi = 2 * lo;
    std::size_t count = 0;
    for (auto it = hist.counts.lower_bound(lo);
         it != hist.counts.end() && it->first < hi; ++it) {
      count += it->second;
    }
    if (count < min_count) break;
    const double width = static_cast<double>(hi - lo);
    const double density =
        static_cast<double>(count) / (width * static_cast<double>(hist.nodes));
    // Geometric centre of the integer bin.
    x.push_back(0.5 * (std::log(static_cast<double>(lo)) +
                       std::log(static_cast<double>(hi - 1))));
    y.push_back(std::log(density));
    lo = hi;
  }
  if (x.size() < 2) {
    throw ContractViolation("too few populated degree bins for a power-law fit");
  }
  return -ls_slope(x, y);
}

double fit_exponential_rate(const DegreeHistogram& hist, std::size_t min_degree,
                            std::size_t min_count) {
  std::vector<double> x, y;
  for (auto it = hist.counts.lower_bound(min_degree); it != hist.counts.end();
       ++it) {
    if (it->second < min_count) break;
    x.push_back(static_cast<double>(it->first));
    y.push_back(std::log(static_cast<double>(it->second) /
                         static_cast<double>(hist.nodes)));
  }
  if (x.size() < 2) {
    throw ContractViolation("too few populated degrees for an exponential fit");
  }
  return -ls_slope(x, y);
}

void write_edge_list(std::ostream& out, const Graph& graph,
                     const GrowthConfig& config) {
  out << "# N=" << config.nodes << " m=" << config.links_per_node
      << " p=" << format_number(config.random_fraction)
      << " seed=" << config.seed << '\n';
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

}  // namespace netjam
