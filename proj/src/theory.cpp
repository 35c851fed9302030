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

#include "netjam/theory.hpp"

#include <cmath>
#include <ostream>

#include "netjam/error.hpp"
#include "netjam/format.hpp"

namespace netjam {

double gamma_of_p(double p, std::size_t m) {
  if (m < 1) throw ConfigError("m must be >= 1");
  if (p == 1.0) {
    throw DomainError("gamma(p) is undefined at p = 1 (exponential degree tail)");
  }
  if (!(p >= 0.0 && p < 1.0)) throw ConfigError("p outside [0, 1)");
  return 3.0 + p / (static_cast<double>(m) * (1.0 - p));
}

double kmax_estimate(double nodes, double m, double gamma) {
  if (!(gamma > 1.0)) throw DomainError("k_max estimate needs gamma > 1");
  return m * std::pow(nodes, 1.0 / (gamma - 1.0));
}

AlphaCalibration calibrate_alpha1(double beta_c, double lambda, double h,
                                  double k_max) {
  const double denom = beta_c + 1.0 / k_max;
  if (!(denom > 0.0)) {
    throw ContractViolation("beta_c + 1/k_max must be positive");
  }
  AlphaCalibration out;
  out.alpha1 = h * lambda / denom;
  if (!(out.alpha1 > 0.0 && out.alpha1 <= 1.0)) {
    out.warning = "alpha1=" + format_number(out.alpha1) +
                  " outside (0, 1]: inputs inconsistent with the balance model";
  }
  return out;
}

double beta_c_line(double lambda, double h, double alpha1, double k_max) {
  if (!(alpha1 > 0.0)) throw ContractViolation("alpha1 must be > 0");
  if (!(k_max >= 1.0)) throw ContractViolation("k_max must be >= 1");
  return h * lambda / alpha1 - 1.0 / k_max;
}

double beta_c_predicted(double lambda, double h, double alpha1, double k_max) {
  const double b = beta_c_line(lambda, h, alpha1, k_max);
  return b > 0.0 ? b : 0.0;
}

double lambda_min(double alpha1, double h, double k_max) {
  return alpha1 / (h * k_max);
}

BalanceResult balance_check(const TimeSeries& series, double h, std::size_t m,
                            double lambda, FitWindow window, double epsilon) {
  BalanceResult out;
  out.predicted = h * 2.0 * static_cast<double>(m) * lambda *
                  static_cast<double>(series.nodes);
  if (lambda == 0.0) {
    out.zero_traffic = true;
    return out;
  }
  const auto slope = growth_slope(series.n1(), window);
  if (slope.slope > epsilon) {
    throw ContractViolation("balance check needs a free-flow run; n1 slope " +
                            format_number(slope.slope) + " > epsilon");
  }
  double sum = 0;
  for (std::uint64_t t = window.first; t <= window.last; ++t) {
    sum += static_cast<double>(series.steps[t - 1].handled_load);
  }
  out.measured = sum / static_cast<double>(window.last - window.first + 1);
  out.residual = std::abs(out.measured - out.predicted) / out.predicted;
  return out;
}

void write_theory_csv(std::ostream& out, std::span<const TheoryParams> rows) {
  out << "p,h,k_max,alpha1,lambda_min,slope_pred\n";
  for (const auto& r : rows) {
    out << format_number(r.p) << ',' << format_number(r.h) << ','
        << format_number(r.k_max) << ',' << format_number(r.alpha1) << ','
        << format_number(lambda_min(r.alpha1, r.h, r.k_max)) << ','
        << format_number(r.h / r.alpha1) << '\n';
  }
}

void write_prediction_csv(std::ostream& out,
                          std::span<const PredictionRow> rows) {
  out << "lambda,beta_c_measured,beta_c_predicted,rel_err\n";
  for (const auto& r : rows) {
    out << format_number(r.lambda) << ',' << format_number(r.beta_c_measured)
        << ',' << format_number(r.beta_c_predicted) << ','
        << format_number(r.rel_err) << '\n';
  }
}

}  // namespace netjam
