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

// Exhaustive small-graph enumeration and a path-enumeration distance oracle.

#ifndef NETJAM_TESTS_SMALL_GRAPHS_HPP_
#define NETJAM_TESTS_SMALL_GRAPHS_HPP_

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "netjam/netgen.hpp"
#include "netjam/routing.hpp"

namespace netjam::testing {

constexpr int kMaxOrder = 8;

// Small graphs as adjacency bitmasks.
using Adj = std::array<std::uint8_t, kMaxOrder>;

struct Small {
  int n;
  Adj adj{};
};

// Edge bitmask in (0,1),(0,2),...,(n-2,n-1) order, used as a canonical key.
inline std::uint32_t edge_code(const Small& g, const std::array<int, kMaxOrder>& perm) {
  std::uint32_t code = 0;
  int bit = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v, ++bit)
      if (g.adj[perm[u]] >> perm[v] & 1) code |= 1u << bit;
  return code;
}

inline std::uint32_t canonical(const Small& g) {
  std::array<int, kMaxOrder> perm{};
  std::iota(perm.begin(), perm.begin() + g.n, 0);
  std::uint32_t best = UINT32_MAX;
  do {
    best = std::min(best, edge_code(g, perm));
  } while (std::next_permutation(perm.begin(), perm.begin() + g.n));
  return best;
}

inline Small add_vertex(const Small& g, std::uint8_t nbrs) {
  Small h{g.n + 1, g.adj};
  h.adj[g.n] = nbrs;
  for (int v = 0; v < g.n; ++v)
    if (nbrs >> v & 1) h.adj[v] |= std::uint8_t(1u << g.n);
  return h;
}

// One representative per isomorphism class on n nodes, n <= 7. Every graph
// on n nodes is some (n-1)-node graph plus a vertex, so extending every
// class representative by every neighbor set reaches every class.
inline std::vector<std::vector<Small>> classes_up_to_seven() {
  std::vector<std::vector<Small>> by_order(kMaxOrder);
  by_order[1].push_back(Small{1, {}});
  for (int n = 2; n < kMaxOrder; ++n) {
    std::set<std::uint32_t> seen;
    for (const Small& g : by_order[n - 1]) {
      for (unsigned s = 0; s < (1u << (n - 1)); ++s) {
        Small h = add_vertex(g, static_cast<std::uint8_t>(s));
        if (seen.insert(canonical(h)).second) by_order[n].push_back(h);
      }
    }
  }
  return by_order;
}

inline bool connected(const Small& g) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int u = 0; u < g.n; ++u)
      if (frontier >> u & 1) next |= g.adj[u];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << g.n) - 1;
}

// Shortest length over all simple paths from u, found by exhaustive DFS.
inline void enumerate_paths(const Small& g, int at, std::uint32_t visited, int length,
                     std::array<int, kMaxOrder>& best) {
  best[at] = std::min(best[at], length);
  for (int v = 0; v < g.n; ++v) {
    if ((g.adj[at] >> v & 1) && !(visited >> v & 1))
      enumerate_paths(g, v, visited | 1u << v, length + 1, best);
  }
}

inline Graph to_graph(const Small& g) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adj[u] >> v & 1) e.emplace_back(u, v);
  return Graph::from_edges(g.n, e);
}

inline bool check_against_paths(const Small& g) {
  const Graph graph = to_graph(g);
  const DistanceMatrix dist = compute_distances(graph);
  for (int u = 0; u < g.n; ++u) {
    std::array<int, kMaxOrder> best;
    best.fill(INT32_MAX);
    enumerate_paths(g, u, 1u << u, 0, best);
    for (int v = 0; v < g.n; ++v)
      if (dist(u, v) != best[v]) return false;
  }
  return true;
}


// Checks every connected graph on up to kMaxOrder nodes: one per class up to
// order 7, then every single-vertex extension of each 7-node class, which
// covers every 8-node class (with repeats). Returns {checked, failures}.
inline std::pair<std::size_t, std::size_t> check_all_small_graphs() {
  const auto classes = classes_up_to_seven();
  std::size_t checked = 0, failures = 0;
  for (int n = 1; n < kMaxOrder; ++n) {
    for (const Small& g : classes[n]) {
      if (!connected(g)) continue;
      ++checked;
      failures += !check_against_paths(g);
    }
  }
  for (const Small& g : classes[kMaxOrder - 1]) {
    for (unsigned s = 1; s < (1u << (kMaxOrder - 1)); ++s) {
      const Small h = add_vertex(g, static_cast<std::uint8_t>(s));
      if (!connected(h)) continue;
      ++checked;
      failures += !check_against_paths(h);
    }
  }
  return {checked, failures};
}

}  // namespace netjam::testing

#endif  // NETJAM_TESTS_SMALL_GRAPHS_HPP_
