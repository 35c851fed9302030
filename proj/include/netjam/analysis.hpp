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

// Observables derived from simulation output: per-degree queue profiles,
// growth slopes of the per-node packet count, and the critical delivery
// coefficient beta_c(lambda) located by bisection on the slope.

#ifndef NETJAM_ANALYSIS_HPP_
#define NETJAM_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "netjam/ensemble.hpp"
#include "netjam/traffic.hpp"

namespace netjam {

struct DegreeBin {
  std::size_t k = 0;
  double mean = 0.0;    // mean queue length over (realization, node) pairs
  double stderr_ = 0.0;  // sample standard deviation / sqrt(count)
  std::size_t count = 0;
};

struct DegreeProfile {
  std::uint64_t t = 0;
  std::size_t realizations = 0;
  std::vector<DegreeBin> bins;  // ascending k
};

// <n(k)> over every (realization, node) pair of degree k. Throws
// ContractViolation on an empty ensemble or snapshots taken at different t.
DegreeProfile degree_profile(std::span<const QueueSnapshot> snapshots);

// Degree-range bin whose error bar comes from the spread of per-realization
// bin means.
struct EnsembleBin {
  std::size_t k_lo = 0;  // inclusive
  std::size_t k_hi = 0;  // exclusive
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t realizations = 0;  // realizations with a node in the bin
};

// Bins [edges[j], edges[j+1]). Bins no realization populates are dropped.
std::vector<EnsembleBin> binned_profile(std::span<const QueueSnapshot> snapshots,
                                        std::span<const std::size_t> edges);

// Per realization, the mean queue over its ceil(fraction N) highest-degree
// nodes (ties to the lower id); returns the ensemble mean and standard error.
struct MeanWithError {
  double mean = 0.0;
  double stderr_ = 0.0;
};
MeanWithError top_fraction_mean_queue(std::span<const QueueSnapshot> snapshots,
                                      double fraction);

// "k,mean_n,stderr,count"
void write_profile_csv(std::ostream& out, const DegreeProfile& profile);

// Inclusive range of time steps.
struct FitWindow {
  std::uint64_t first = 200;
  std::uint64_t last = 1000;
};

struct SlopeEstimate {
  double slope = 0.0;  // packets per node per step
  double intercept = 0.0;
  FitWindow window;
  double residual_se = 0.0;
};

// Ordinary least squares of series against t, where series[i] is the value
// after step t = i + 1. The window must lie in [1, series.size()] and span at
// least 50 steps; otherwise ContractViolation.
SlopeEstimate growth_slope(std::span<const double> series, FitWindow window);

// Traffic parameters shared by every beta evaluated for one lambda.
struct PlanTemplate {
  double lambda = 0.01;
  Approach approach = Approach::kNormal;
  HubSelection hubs;
};

struct EnsembleMeans {
  std::vector<double> n1;
  std::vector<double> n2;
};

// Runs every realization for t_max steps at `beta` and averages n1/n2 per
// step, summing in realization order.
EnsembleMeans run_ensemble(const Ensemble& ensemble, const PlanTemplate& plan,
                           double beta, std::size_t t_max,
                           std::size_t workers = 0);

struct SearchOptions {
  double beta_lo = 0.0;
  double beta_hi = 0.4;
  double tol = 0.002;
  double epsilon = 1e-4;  // slope > epsilon means congested
  std::size_t t_max = 1000;
  FitWindow window{200, 1000};
  std::size_t workers = 0;
};

struct SlopePoint {
  double beta = 0.0;
  double slope = 0.0;
};

struct PhaseResult {
  double lambda = 0.0;
  double beta_c = 0.0;
  double beta_lo = 0.0;
  double beta_hi = 0.0;
  double slope_lo = 0.0;
  double slope_hi = 0.0;
  std::size_t ensemble = 0;
  double tol = 0.0;
  // Set when the system was already free-flowing at beta = 0.
  bool free_at_zero = false;
  std::vector<SlopePoint> slopes;  // evaluation order
};

// Slope of the ensemble-mean n1 series at one beta.
double ensemble_slope(const Ensemble& ensemble, const PlanTemplate& plan,
                      double beta, const SearchOptions& search);

// Bisection on beta until beta_hi - beta_lo <= tol; beta_c is the midpoint
// of the final bracket. Throws BracketError (carrying both endpoint slopes)
// if beta_lo is not congested or beta_hi is not free.
PhaseResult find_beta_c(double lambda, const Ensemble& ensemble,
                        PlanTemplate plan, const SearchOptions& search);

// find_beta_c per lambda. When the search starts at beta_lo = 0, a lambda
// that is already free-flowing there records beta_c = 0. Throws
// ContractViolation on an empty list.
std::vector<PhaseResult> beta_c_curve(std::span<const double> lambdas,
                                      const Ensemble& ensemble,
                                      const PlanTemplate& plan,
                                      const SearchOptions& search);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

// Least-squares line of beta_c against lambda over the results with
// beta_c > 0 and lambda in [lambda_lo, lambda_hi].
LineFit fit_beta_c_line(std::span<const PhaseResult> curve, double lambda_lo,
                        double lambda_hi);

// "lambda,beta_c,beta_lo,beta_hi,slope_lo,slope_hi,ensemble,tol"
void write_phase_csv(std::ostream& out, std::span<const PhaseResult> results);

// "lambda,beta,slope"
void write_slope_table_csv(std::ostream& out,
                           std::span<const PhaseResult> results);

}  // namespace netjam

#endif  // NETJAM_ANALYSIS_HPP_
