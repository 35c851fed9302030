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

#include "netjam/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "netjam/error.hpp"
#include "netjam/format.hpp"

namespace netjam {

const char* approach_name(Approach approach) {
  return approach == Approach::kEfficient ? "efficient" : "normal";
}

std::vector<NodeId> select_hubs(const Graph& graph, const HubSelection& sel) {
  const std::size_t n = graph.node_count();
  std::vector<NodeId> hubs;
  if (sel.degree_threshold) {
    for (NodeId i = 0; i < n; ++i) {
      if (graph.degree(i) >= *sel.degree_threshold) hubs.push_back(i);
    }
    return hubs;
  }
  if (!(sel.fraction > 0.0 && sel.fraction <= 1.0)) {
    throw ConfigError("hub fraction f=" + format_number(sel.fraction) +
                      " outside (0, 1]");
  }
  // The slack keeps 0.03 * 1000 from rounding up to 31.
  auto count = static_cast<std::size_t>(
      std::ceil(sel.fraction * static_cast<double>(n) - 1e-9));
  count = std::min(std::max<std::size_t>(count, 1), n);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return graph.degree(a) > graph.degree(b);
  });
  hubs.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count));
  std::sort(hubs.begin(), hubs.end());
  return hubs;
}

RatePlan RatePlan::make(const Graph& graph, double lambda, double beta,
                        Approach approach, const HubSelection& hubs) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("creation coefficient lambda must be >= 0");
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw ConfigError("delivery coefficient beta must be >= 0");
  }
  RatePlan plan;
  plan.lambda = lambda;
  plan.beta = beta;
  plan.approach = approach;
  plan.hubs = select_hubs(graph, hubs);
  if (approach == Approach::kNormal) {
    plan.beta_per_node.assign(graph.node_count(), beta);
  } else {
    plan.beta_per_node.assign(graph.node_count(), 0.0);
    for (NodeId h : plan.hubs) plan.beta_per_node[h] = beta;
  }
  return plan;
}

namespace {

std::size_t floor_plus_bernoulli(double x, Rng& rng) {
  const double whole = std::floor(x);
  const double frac = x - whole;
  auto n = static_cast<std::size_t>(whole);
  if (frac > 0.0 && rng.bernoulli(frac)) ++n;
  return n;
}

}  // namespace

std::size_t creation_count(double lambda, std::size_t degree, Rng& rng) {
  return floor_plus_bernoulli(lambda * static_cast<double>(degree), rng);
}

std::size_t delivery_quota(double beta, std::size_t degree, Rng& rng) {
  return 1 + floor_plus_bernoulli(beta * static_cast<double>(degree), rng);
}

Simulation::Simulation(const Graph& graph, const DistanceMatrix& dist,
                       const RatePlan& plan, std::uint64_t seed)
    : graph_(graph),
      dist_(dist),
      plan_(plan),
      rng_(seed),
      queues_(graph.node_count()),
      snapshot_(graph.node_count(), 0) {
  if (dist.node_count() != graph.node_count() ||
      plan.beta_per_node.size() != graph.node_count()) {
    throw ContractViolation("graph, distances and rate plan sizes differ");
  }
  if (graph.node_count() < 2) {
    throw ContractViolation("traffic needs at least two nodes");
  }
}

void Simulation::enqueue(NodeId node, const Packet& packet) {
  queues_[node].push_back(packet);
  if (observer_) observer_->on_enqueue(node, packet);
}

void Simulation::inject(NodeId at, NodeId destination) {
  if (at == destination || at >= graph_.node_count() ||
      destination >= graph_.node_count()) {
    throw ContractViolation("injected packet needs distinct in-range endpoints");
  }
  Packet p;
  p.id = next_id_++;
  p.created_at = time_;
  p.source = at;
  p.destination = destination;
  ++created_;
  enqueue(at, p);
}

void Simulation::step() {
  ++time_;
  const auto n = static_cast<NodeId>(graph_.node_count());

  if (plan_.lambda > 0.0) {
    for (NodeId i = 0; i < n; ++i) {
      const std::size_t count = creation_count(plan_.lambda, graph_.degree(i), rng_);
      for (std::size_t c = 0; c < count; ++c) {
        auto dest = static_cast<NodeId>(rng_.below(n - 1));
        if (dest >= i) ++dest;
        Packet p;
        p.id = next_id_++;
        p.created_at = time_;
        p.source = i;
        p.destination = dest;
        ++created_;
        enqueue(i, p);
      }
    }
  }

  handled_load_ = 0;
  for (NodeId i = 0; i < n; ++i) {
    snapshot_[i] = queues_[i].size();
    handled_load_ += snapshot_[i];
  }

  outbox_.clear();
  for (NodeId i = 0; i < n; ++i) {
    auto& q = queues_[i];
    if (q.empty()) continue;
    const std::size_t quota =
        delivery_quota(plan_.beta_per_node[i], graph_.degree(i), rng_);
    const std::size_t take = std::min(quota, q.size());
    for (std::size_t j = 0; j < take; ++j) {
      Packet p = q.front();
      q.pop_front();
      next_hop_candidates(graph_, dist_, i, p.destination, candidates_);
      const NodeId to = candidates_.size() == 1
                            ? candidates_.front()
                            : select_next_hop(candidates_, snapshot_, rng_);
      ++p.hops;
      if (observer_) observer_->on_forward(i, to, p);
      if (to == p.destination) {
        ++delivered_;
        if (observer_) observer_->on_deliver(p);
      } else {
        outbox_.push_back({to, p});
      }
    }
  }

  for (const Transit& tr : outbox_) enqueue(tr.to, tr.packet);
}

std::vector<std::size_t> Simulation::queue_lengths() const {
  std::vector<std::size_t> out(queues_.size());
  for (std::size_t i = 0; i < queues_.size(); ++i) out[i] = queues_[i].size();
  return out;
}

double Simulation::mean_hub_queue() const {
  if (plan_.hubs.empty()) return 0.0;
  std::size_t total = 0;
  for (NodeId h : plan_.hubs) total += queues_[h].size();
  return static_cast<double>(total) / static_cast<double>(plan_.hubs.size());
}

std::vector<double> TimeSeries::n1() const {
  std::vector<double> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.n1);
  return out;
}

std::vector<double> TimeSeries::n2() const {
  std::vector<double> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.n2);
  return out;
}

TimeSeries run(const Graph& graph, const DistanceMatrix& dist,
               const RatePlan& plan, const RunOptions& options,
               std::uint64_t seed) {
  if (options.t_max < 1) throw ContractViolation("t_max must be >= 1");
  Simulation sim(graph, dist, plan, seed);
  TimeSeries out;
  out.nodes = graph.node_count();
  out.steps.reserve(options.t_max);
  const double n = static_cast<double>(graph.node_count());
  for (std::size_t s = 0; s < options.t_max; ++s) {
    sim.step();
    StepRecord rec;
    rec.t = sim.time();
    rec.created_cum = sim.created();
    rec.delivered_cum = sim.delivered();
    rec.in_flight = sim.in_flight();
    rec.n1 = static_cast<double>(rec.in_flight) / n;
    rec.n2 = sim.mean_hub_queue();
    rec.handled_load = sim.handled_load();
    out.steps.push_back(rec);
    if (std::find(options.snapshot_times.begin(), options.snapshot_times.end(),
                  rec.t) != options.snapshot_times.end()) {
      out.snapshots.push_back({rec.t, graph.degrees(), sim.queue_lengths()});
    }
  }
  return out;
}

void write_timeseries_csv(std::ostream& out, const TimeSeries& series) {
  out << "t,created_cum,delivered_cum,in_flight,n1,n2\n";
  for (const auto& s : series.steps) {
    out << s.t << ',' << s.created_cum << ',' << s.delivered_cum << ','
        << s.in_flight << ',' << format_number(s.n1) << ','
        << format_number(s.n2) << '\n';
  }
}

void write_snapshot_csv(std::ostream& out, const QueueSnapshot& snapshot) {
  out << "node,degree,queue_len\n";
  for (std::size_t i = 0; i < snapshot.queue_lengths.size(); ++i) {
    out << i << ',' << snapshot.degrees[i] << ',' << snapshot.queue_lengths[i]
        << '\n';
  }
}

}  // namespace netjam
