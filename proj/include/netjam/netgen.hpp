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

// Growing networks with hybrid attachment: an existing node i attracts a link
// from a newcomer with weight (1 - p) * k_i + p. p = 0 is pure preferential
// attachment, p = 1 is uniformly random growth.

#ifndef NETJAM_NETGEN_HPP_
#define NETJAM_NETGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace netjam {

using NodeId = std::uint32_t;

struct GrowthConfig {
  std::size_t nodes = 1000;
  std::size_t links_per_node = 3;
  double random_fraction = 0.0;  // p
  std::uint64_t seed = 1;

  // Throws ConfigError unless nodes >= links_per_node + 1,
  // links_per_node >= 1 and 0 <= random_fraction <= 1.
  void validate() const;
};

// Immutable undirected simple graph in compressed sparse row form. Neighbor
// lists are sorted ascending.
class Graph {
 public:
  Graph() = default;  // empty

  // Builds from an undirected edge list. Throws StructuralError on
  // self-loops, duplicate edges or out-of-range endpoints.
  static Graph from_edges(std::size_t nodes,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return degrees_.size(); }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const { return degrees_[u]; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }

  // Edges with u < v in lexicographic order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<std::size_t> degrees_;
};

// Grows a network from a complete graph on links_per_node + 1 seed nodes.
// Every later node links to links_per_node distinct earlier nodes; targets are
// drawn with probability proportional to (1 - p) * k_i + p over the degrees
// seen when the node arrives, re-drawing on collision.
Graph generate_network(const GrowthConfig& config);

// Edge count of generate_network's output: C(m + 1, 2) + m * (N - m - 1).
std::size_t expected_edge_count(const GrowthConfig& config);

struct DegreeHistogram {
  std::map<std::size_t, std::size_t> counts;  // degree -> node count
  std::size_t nodes = 0;
};

DegreeHistogram degree_histogram(const Graph& graph);

std::size_t k_max(const Graph& graph);

// Least-squares exponent gamma of P(k) ~ k^-gamma on logarithmically binned
// density over k >= min_degree, using bins holding at least `min_count`
// nodes. Needs at least two usable bins.
double fit_power_law_exponent(const DegreeHistogram& hist,
                              std::size_t min_degree,
                              std::size_t min_count = 5);

// Least-squares decay rate a of P(k) ~ exp(-a k) over k >= min_degree,
// using degrees holding at least `min_count` nodes.
double fit_exponential_rate(const DegreeHistogram& hist, std::size_t min_degree,
                            std::size_t min_count = 5);

// Edge list: header "# N=<N> m=<m> p=<p> seed=<seed>", then "u v" per line,
// u < v, sorted.
void write_edge_list(std::ostream& out, const Graph& graph,
                     const GrowthConfig& config);

}  // namespace netjam

#endif  // NETJAM_NETGEN_HPP_
