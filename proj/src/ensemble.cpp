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

#include "netjam/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "netjam/rng.hpp"

namespace netjam {

std::size_t resolve_workers(std::size_t workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn) {
  const std::size_t threads = std::min(resolve_workers(workers), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

Ensemble Ensemble::grow(const GrowthConfig& base, std::size_t count,
                        std::uint64_t master_seed, std::size_t workers) {
  base.validate();
  std::vector<std::optional<Realization>> slots(count);
  parallel_for(count, workers, [&](std::size_t i) {
    GrowthConfig cfg = base;
    cfg.seed = derive_seed(master_seed, i, StreamPurpose::kGraph);
    Graph g = generate_network(cfg);
    DistanceMatrix d = compute_distances(g);
    slots[i].emplace(Realization{i, cfg, std::move(g), std::move(d),
                                 derive_seed(master_seed, i,
                                             StreamPurpose::kTraffic)});
  });
  Ensemble out;
  out.members_.reserve(count);
  for (auto& s : slots) out.members_.push_back(std::move(*s));
  return out;
}

}  // namespace netjam
