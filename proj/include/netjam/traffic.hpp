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

// Synchronous packet dynamics. Node i creates lambda * k_i packets and can
// forward 1 + beta_i * k_i packets per step; fractional parts are realized as
// Bernoulli trials.
//
// One step runs three phases:
//   1. creation: nodes in id order append new packets to the back of their
//      queue. Random draws: one Bernoulli for the fractional part of
//      lambda * k_i (only when it is non-zero), then one destination per
//      packet, uniform over the other N - 1 nodes.
//   2. delivery: queue lengths are snapshotted. Nodes in id order with a
//      non-empty queue draw their quota (one Bernoulli when beta_i * k_i has
//      a fractional part) and forward up to that many packets from the queue
//      front. Each packet picks a shortest-path neighbor with the shortest
//      snapshotted queue (one uniform draw only when several tie).
//   3. arrival: packets reaching their destination leave the system; the
//      rest are appended to their receiver's queue in sender id order, then
//      sender queue order. They become eligible to move next step.

#ifndef NETJAM_TRAFFIC_HPP_
#define NETJAM_TRAFFIC_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <vector>

#include "netjam/netgen.hpp"
#include "netjam/rng.hpp"
#include "netjam/routing.hpp"

namespace netjam {

struct Packet {
  std::uint64_t id = 0;  // creation sequence number within a run
  std::uint64_t created_at = 0;
  NodeId source = 0;
  NodeId destination = 0;
  std::uint32_t hops = 0;
};

enum class Approach { kNormal, kEfficient };

const char* approach_name(Approach approach);

// Which nodes count as hubs: the ceil(f N) highest-degree nodes (ties to the
// lower id), or every node with degree >= degree_threshold when set.
struct HubSelection {
  double fraction = 0.03;
  std::optional<std::size_t> degree_threshold;
};

// Hub node ids, ascending.
std::vector<NodeId> select_hubs(const Graph& graph, const HubSelection& sel);

struct RatePlan {
  double lambda = 0.0;
  double beta = 0.0;
  Approach approach = Approach::kNormal;
  std::vector<double> beta_per_node;
  // Hub set; carries the upgraded nodes under kEfficient and is the
  // averaging set of n2 under both approaches.
  std::vector<NodeId> hubs;

  // Normal: beta_i = beta everywhere. Efficient: beta_i = beta on the hub
  // set, 0 elsewhere. Throws ConfigError on negative rates or a hub fraction
  // outside (0, 1].
  static RatePlan make(const Graph& graph, double lambda, double beta,
                       Approach approach, const HubSelection& hubs);
};

// floor(lambda k) + Bernoulli(frac(lambda k)).
std::size_t creation_count(double lambda, std::size_t degree, Rng& rng);

// 1 + floor(beta k) + Bernoulli(frac(beta k)).
std::size_t delivery_quota(double beta, std::size_t degree, Rng& rng);

// Optional hooks for auditing packet movement in tests.
class TrafficObserver {
 public:
  virtual ~TrafficObserver() = default;
  virtual void on_enqueue(NodeId /*node*/, const Packet& /*packet*/) {}
  virtual void on_forward(NodeId /*from*/, NodeId /*to*/,
                          const Packet& /*packet*/) {}
  virtual void on_deliver(const Packet& /*packet*/) {}
};

class Simulation {
 public:
  // The graph, distances and plan must outlive the simulation.
  Simulation(const Graph& graph, const DistanceMatrix& dist,
             const RatePlan& plan, std::uint64_t seed);

  void step();

  // Places a packet at the back of `at`'s queue as if created there now.
  void inject(NodeId at, NodeId destination);

  void set_observer(TrafficObserver* observer) { observer_ = observer; }

  std::uint64_t time() const { return time_; }
  std::uint64_t created() const { return created_; }
  std::uint64_t delivered() const { return delivered_; }
  std::uint64_t in_flight() const { return created_ - delivered_; }
  // Packets queued when the last delivery phase began.
  std::uint64_t handled_load() const { return handled_load_; }

  std::size_t queue_length(NodeId node) const { return queues_[node].size(); }
  const std::deque<Packet>& queue(NodeId node) const { return queues_[node]; }
  std::vector<std::size_t> queue_lengths() const;
  double mean_hub_queue() const;

 private:
  struct Transit {
    NodeId to;
    Packet packet;
  };

  void enqueue(NodeId node, const Packet& packet);

  const Graph& graph_;
  const DistanceMatrix& dist_;
  const RatePlan& plan_;
  Rng rng_;
  TrafficObserver* observer_ = nullptr;

  std::vector<std::deque<Packet>> queues_;
  std::vector<std::size_t> snapshot_;
  std::vector<Transit> outbox_;
  std::vector<NodeId> candidates_;

  std::uint64_t time_ = 0;
  std::uint64_t created_ = 0;
  std::uint64_t delivered_ = 0;
  std::uint64_t handled_load_ = 0;
  std::uint64_t next_id_ = 0;
};

struct StepRecord {
  std::uint64_t t = 0;
  std::uint64_t created_cum = 0;
  std::uint64_t delivered_cum = 0;
  std::uint64_t in_flight = 0;
  double n1 = 0.0;  // in_flight / N
  double n2 = 0.0;  // mean queue length over the hub set
  std::uint64_t handled_load = 0;
};

struct QueueSnapshot {
  std::uint64_t t = 0;
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> queue_lengths;
};

struct TimeSeries {
  std::size_t nodes = 0;
  std::vector<StepRecord> steps;  // steps[i].t == i + 1
  std::vector<QueueSnapshot> snapshots;

  std::vector<double> n1() const;
  std::vector<double> n2() const;
};

struct RunOptions {
  std::size_t t_max = 500;
  // Steps after which per-node queue lengths are recorded.
  std::vector<std::uint64_t> snapshot_times;
};

// Runs t_max steps from empty queues. Throws ContractViolation if t_max = 0.
TimeSeries run(const Graph& graph, const DistanceMatrix& dist,
               const RatePlan& plan, const RunOptions& options,
               std::uint64_t seed);

// "t,created_cum,delivered_cum,in_flight,n1,n2"
void write_timeseries_csv(std::ostream& out, const TimeSeries& series);

// "node,degree,queue_len"
void write_snapshot_csv(std::ostream& out, const QueueSnapshot& snapshot);

}  // namespace netjam

#endif  // NETJAM_TRAFFIC_HPP_
