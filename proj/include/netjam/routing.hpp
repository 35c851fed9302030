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

#ifndef NETJAM_ROUTING_HPP_
#define NETJAM_ROUTING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "netjam/netgen.hpp"
#include "netjam/rng.hpp"

namespace netjam {

// All-pairs hop distances of a connected graph, stored densely. Only
// compute_distances builds one, so every entry is finite.
class DistanceMatrix {
 public:
  using Hops = std::uint16_t;

  std::size_t node_count() const { return nodes_; }

  Hops operator()(NodeId u, NodeId v) const { return hops_[u * nodes_ + v]; }

  // Distances from every node to `target` (the matrix is symmetric).
  std::span<const Hops> to(NodeId target) const {
    return {hops_.data() + target * nodes_, nodes_};
  }

 private:
  friend DistanceMatrix compute_distances(const Graph& graph);

  std::size_t nodes_ = 0;
  std::vector<Hops> hops_;
};

// BFS from every node. Throws StructuralError if the graph is disconnected
// and ConfigError if it is too large for 16-bit hop counts.
DistanceMatrix compute_distances(const Graph& graph);

// Mean hop distance over ordered pairs s != t. A d-hop path visits d nodes
// counting the destination and not the origin.
double mean_path_length(const Graph& graph, const DistanceMatrix& dist);

// Neighbors v of u with dist(v, t) = dist(u, t) - 1, ascending. Throws
// ContractViolation when u == t.
std::vector<NodeId> next_hop_candidates(const Graph& graph,
                                        const DistanceMatrix& dist, NodeId u,
                                        NodeId t);

// Allocation-free form used by the simulator; `out` is overwritten.
void next_hop_candidates(const Graph& graph, const DistanceMatrix& dist,
                         NodeId u, NodeId t, std::vector<NodeId>& out);

// A candidate with the fewest queued packets. Ties are broken uniformly at
// random; the rng is consulted only when there is a tie. Throws
// ContractViolation on an empty candidate set.
NodeId select_next_hop(std::span<const NodeId> candidates,
                       std::span<const std::size_t> queue_lengths, Rng& rng);

}  // namespace netjam

#endif  // NETJAM_ROUTING_HPP_
