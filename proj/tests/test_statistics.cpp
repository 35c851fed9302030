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

// Ensemble-level properties at N = 1000. Slower than the unit suites (about
// a minute on one core).

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "netjam/analysis.hpp"
#include "netjam/netgen.hpp"
#include "netjam/routing.hpp"
#include "netjam/traffic.hpp"

using namespace netjam;

namespace {

double mean(const std::vector<double>& x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

}  // namespace

TEST_CASE("known-free runs classify as free on every seed") {
  const Ensemble ens = Ensemble::grow({1000, 3, 0.0, 0}, 50, 314);
  std::vector<double> slope(ens.size());
  parallel_for(ens.size(), 0, [&](std::size_t i) {
    const auto& r = ens[i];
    const auto plan = RatePlan::make(r.graph, 0.01, 0.1, Approach::kNormal, {});
    const auto ts = run(r.graph, r.dist, plan, {1000, {}}, r.traffic_seed);
    slope[i] = growth_slope(ts.n1(), {200, 1000}).slope;
  });
  const double worst = *std::max_element(slope.begin(), slope.end());
  MESSAGE("largest single-run slope: " << worst);
  CHECK(worst <= 1e-4);
}

TEST_CASE("packet census falls as delivery capacity rises") {
  const Ensemble ens = Ensemble::grow({1000, 3, 0.0, 0}, 50, 271);
  std::vector<double> census;
  for (double beta : {0.0, 0.05, 0.1}) {
    std::vector<double> in_flight(ens.size());
    parallel_for(ens.size(), 0, [&](std::size_t i) {
      const auto& r = ens[i];
      const auto plan = RatePlan::make(r.graph, 0.01, beta, Approach::kNormal, {});
      in_flight[i] = static_cast<double>(
          run(r.graph, r.dist, plan, {500, {}}, r.traffic_seed).steps.back().in_flight);
    });
    census.push_back(mean(in_flight));
  }
  CHECK(census[0] > census[1]);
  CHECK(census[1] > census[2]);
}

TEST_CASE("random attachment lowers the top degree and lengthens paths") {
  std::vector<double> kmax, h;
  for (double p : {0.0, 0.5, 1.0}) {
    const Ensemble ens = Ensemble::grow({1000, 3, p, 0}, 20, 161);
    std::vector<double> k, d;
    for (const auto& r : ens) {
      k.push_back(static_cast<double>(k_max(r.graph)));
      d.push_back(mean_path_length(r.graph, r.dist));
    }
    kmax.push_back(mean(k));
    h.push_back(mean(d));
  }
  CHECK(kmax[0] >= kmax[1]);
  CHECK(kmax[1] >= kmax[2]);
  CHECK(h[0] <= h[1]);
  CHECK(h[1] <= h[2]);
}

TEST_CASE("the located threshold separates fresh ensembles") {
  const GrowthConfig base{1000, 3, 1.0, 0};
  const PlanTemplate plan{0.012, Approach::kNormal, {}};
  SearchOptions search;
  search.workers = 0;
  const PhaseResult r = find_beta_c(0.012, Ensemble::grow(base, 20, 577), plan, search);
  MESSAGE("beta_c = " << r.beta_c);

  const double above = r.beta_c + 2 * search.tol;
  const double below = std::max(0.0, r.beta_c - 2 * search.tol);
  int free_above = 0, congested_below = 0;
  const int fresh = 10;
  for (int s = 0; s < fresh; ++s) {
    const Ensemble ens = Ensemble::grow(base, 20, 10000 + s);
    free_above += ensemble_slope(ens, plan, above, search) <= search.epsilon;
    congested_below += ensemble_slope(ens, plan, below, search) > search.epsilon;
  }
  MESSAGE("free above: " << free_above << "/" << fresh
                         << ", congested below: " << congested_below << "/" << fresh);
  CHECK(free_above * 2 > fresh);
  CHECK(congested_below * 2 > fresh);
}
