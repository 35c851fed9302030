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

#include "netjam/routing.hpp"

#include <limits>
#include <string>

#include "netjam/error.hpp"

namespace netjam {

DistanceMatrix compute_distances(const Graph& graph) {
  constexpr auto kUnset = std::numeric_limits<DistanceMatrix::Hops>::max();
  const std::size_t n = graph.node_count();
  if (n >= kUnset) {
    throw ConfigError("graph too large for the distance table (" +
                      std::to_string(n) + " nodes)");
  }
  DistanceMatrix dm;
  dm.nodes_ = n;
  dm.hops_.assign(n * n, kUnset);

  std::vector<NodeId> frontier;
  frontier.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    DistanceMatrix::Hops* row = dm.hops_.data() + s * n;
    row[s] = 0;
    frontier.clear();
    frontier.push_back(s);
    std::size_t head = 0;
    while (head < frontier.size()) {
      const NodeId u = frontier[head++];
      const auto next = static_cast<DistanceMatrix::Hops>(row[u] + 1);
      for (NodeId v : graph.neighbors(u)) {
        if (row[v] == kUnset) {
          row[v] = next;
          frontier.push_back(v);
        }
      }
    }
    if (frontier.size() != n) {
      throw StructuralError("graph is disconnected: node " + std::to_string(s) +
                            " reaches only " + std::to_string(frontier.size()) +
                            " of " + std::to_string(n) + " nodes");
    }
  }
  return dm;
}

double mean_path_length(const Graph& graph, const DistanceMatrix& dist) {
  const std::size_t n = graph.node_count();
  if (dist.node_count() != n) {
    throw ContractViolation("distance matrix does not belong to this graph");
  }
  if (n < 2) throw ContractViolation("mean path length needs two nodes");
  std::uint64_t total = 0;
  for (NodeId t = 0; t < n; ++t) {
    for (auto h : dist.to(t)) total += h;
  }
  return static_cast<double>(total) / (static_cast<double>(n) * (n - 1));
}

void next_hop_candidates(const Graph& graph, const DistanceMatrix& dist,
                         NodeId u, NodeId t, std::vector<NodeId>& out) {
  if (u == t) {
    throw ContractViolation("next hop requested at the destination itself");
  }
  out.clear();
  const auto to_t = dist.to(t);
  const auto want = static_cast<DistanceMatrix::Hops>(to_t[u] - 1);
  for (NodeId v : graph.neighbors(u)) {
    if (to_t[v] == want) out.push_back(v);
  }
}

std::vector<NodeId> next_hop_candidates(const Graph& graph,
                                        const DistanceMatrix& dist, NodeId u,
                                        NodeId t) {
  std::vector<NodeId> out;
  next_hop_candidates(graph, dist, u, t, out);
  return out;
}

NodeId select_next_hop(std::span<const NodeId> candidates,
                       std::span<const std::size_t> queue_lengths, Rng& rng) {
  if (candidates.empty()) {
    throw ContractViolation("no next-hop candidates");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::size_t ties = 0;
  for (NodeId c : candidates) {
    const std::size_t q = queue_lengths[c];
    if (q < best) {
      best = q;
      ties = 1;
    } else if (q == best) {
      ++ties;
    }
  }
  std::size_t pick = ties > 1 ? static_cast<std::size_t>(rng.below(ties)) : 0;
  for (NodeId c : candidates) {
    if (queue_lengths[c] == best) {
      if (pick == 0) return c;
      --pick;
    }
  }
  return candidates.front();  // unreachable
}

}  // namespace netjam
