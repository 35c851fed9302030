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

#ifndef NETJAM_ENSEMBLE_HPP_
#define NETJAM_ENSEMBLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "netjam/netgen.hpp"
#include "netjam/routing.hpp"

namespace netjam {

// Runs fn(0) .. fn(count - 1) on up to `workers` threads (0 = hardware
// concurrency). Callers write results by index, so output never depends on
// scheduling. The first exception thrown by any task is rethrown.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn);

std::size_t resolve_workers(std::size_t workers);

// One ensemble member: a graph with its distances and the seed of its
// traffic stream. Both seeds derive from (master seed, index).
struct Realization {
  std::size_t index = 0;
  GrowthConfig growth;
  Graph graph;
  DistanceMatrix dist;
  std::uint64_t traffic_seed = 0;
};

class Ensemble {
 public:
  // Grows `count` graphs. base.seed is ignored in favour of derived seeds.
  static Ensemble grow(const GrowthConfig& base, std::size_t count,
                       std::uint64_t master_seed, std::size_t workers = 0);

  std::size_t size() const { return members_.size(); }
  const Realization& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::vector<Realization> members_;
};

}  // namespace netjam

#endif  // NETJAM_ENSEMBLE_HPP_
