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

// Mean-field capacity balance for the congestion threshold.
//
// In free flow the network holds h * 2 m lambda N packets. Balancing that
// census against what the nodes can forward, with the passing-traffic
// weights folded into one coefficient alpha1, gives
//
//   beta_c(lambda) = h lambda / alpha1 - 1 / k_max,
//
// which is positive only above lambda_min = alpha1 / (h k_max).

#ifndef NETJAM_THEORY_HPP_
#define NETJAM_THEORY_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "netjam/analysis.hpp"
#include "netjam/traffic.hpp"

namespace netjam {

struct TheoryParams {
  double p = 0.0;
  std::size_t m = 3;
  std::size_t nodes = 1000;
  double h = 0.0;       // measured mean path length
  double k_max = 0.0;   // measured (ensemble mean) top degree
  double alpha1 = 0.0;  // calibrated, in (0, 1]
};

// Degree exponent 3 + p / (m (1 - p)). DomainError at p = 1 (no power law),
// ConfigError for p outside [0, 1) or m < 1.
double gamma_of_p(double p, std::size_t m);

// m N^(1 / (gamma - 1)). DomainError for gamma <= 1.
double kmax_estimate(double nodes, double m, double gamma);

struct AlphaCalibration {
  double alpha1 = 0.0;
  // Empty when alpha1 lies in (0, 1]; otherwise explains the inconsistency.
  std::string warning;
};

// alpha1 = h lambda / (beta_c + 1 / k_max). Throws ContractViolation when
// beta_c + 1 / k_max <= 0.
AlphaCalibration calibrate_alpha1(double beta_c, double lambda, double h,
                                  double k_max);

// max(0, h lambda / alpha1 - 1 / k_max).
double beta_c_predicted(double lambda, double h, double alpha1, double k_max);

// Unclamped line, useful for checking the algebraic inverse.
double beta_c_line(double lambda, double h, double alpha1, double k_max);

// alpha1 / (h k_max).
double lambda_min(double alpha1, double h, double k_max);

struct BalanceResult {
  bool zero_traffic = false;  // lambda = 0: nothing to balance
  double measured = 0.0;      // mean packets queued for delivery per step
  double predicted = 0.0;     // h * 2 m lambda N
  double residual = 0.0;      // |measured - predicted| / predicted
};

// Compares the free-flow packet census with h * 2 m lambda N over `window`.
// The census is the number of packets awaiting forwarding when the delivery
// phase starts, i.e. the load the nodes must handle in that step. Throws
// ContractViolation if n1 grows faster than `epsilon` over the window.
BalanceResult balance_check(const TimeSeries& series, double h, std::size_t m,
                            double lambda, FitWindow window,
                            double epsilon = 1e-4);

// "p,h,k_max,alpha1,lambda_min,slope_pred"
void write_theory_csv(std::ostream& out, std::span<const TheoryParams> rows);

struct PredictionRow {
  double lambda = 0.0;
  double beta_c_measured = 0.0;
  double beta_c_predicted = 0.0;
  double rel_err = 0.0;  // |pred - meas| / meas, NaN when meas = 0
};

// "lambda,beta_c_measured,beta_c_predicted,rel_err"
void write_prediction_csv(std::ostream& out,
                          std::span<const PredictionRow> rows);

}  // namespace netjam

#endif  // NETJAM_THEORY_HPP_
