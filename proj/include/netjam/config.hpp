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

// Experiment configuration: flat `key = value` lines, `#` starts a comment,
// lists are comma separated.
//
//   kind          generate | profile | timeseries | betac | curve | theory |
//                 figure                                      (required)
//   figure        1..5                            (required for kind=figure)
//   N, m, p       network size, links per new node, random-attachment prob.
//   p_values      list of p for figure 1 and figure 5
//   lambda        creation coefficient (calibration point for kind=theory)
//   lambdas       list of lambda for curve / theory / figure 4
//   beta          list of delivery coefficients
//   approach      normal | efficient
//   f, k_thr      hub fraction, or a degree threshold that overrides it
//   t_max, realizations, snapshot_times, fit_window (two step indices)
//   beta_lo, beta_hi, tol, epsilon                 beta_c search
//   curves        list of <p>/<approach> series for figure 4
//   output, master_seed, workers

#ifndef NETJAM_CONFIG_HPP_
#define NETJAM_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netjam/analysis.hpp"
#include "netjam/netgen.hpp"
#include "netjam/traffic.hpp"

namespace netjam {

enum class ExperimentKind {
  kGenerate,
  kProfile,
  kTimeseries,
  kBetac,
  kCurve,
  kTheory,
  kFigure,
};

const char* kind_name(ExperimentKind kind);

struct CurveSpec {
  double p = 0.0;
  Approach approach = Approach::kNormal;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kGenerate;
  int figure = 0;

  GrowthConfig network;  // network.seed is unused; seeds derive from master
  std::vector<double> p_values;

  double lambda = 0.01;
  std::vector<double> lambdas;
  std::vector<double> betas;
  Approach approach = Approach::kNormal;
  HubSelection hubs;

  std::size_t t_max = 500;
  std::size_t realizations = 1;
  std::vector<std::uint64_t> snapshot_times;
  FitWindow window;

  SearchOptions search;  // t_max/window/workers mirror the fields above
  std::vector<CurveSpec> curves;

  std::string output = "out";
  std::uint64_t master_seed = 1;
  std::size_t workers = 0;  // 0 = all CPUs

  // Resolved `key = value` pairs in canonical order; values the parser
  // filled in carry the suffix "  # default".
  std::vector<std::pair<std::string, std::string>> manifest;
  // Keys set by the config text or by an override.
  std::vector<std::string> explicit_keys;

  // Re-derives the manifest and the mirrored search fields after a field
  // was changed programmatically (command-line overrides).
  void refresh();
};

// Throws ParseError naming the line and key for unknown keys, malformed
// values and invariant violations.
ExperimentConfig parse_config(std::string_view text);

// Reads and parses a file. IoError if it cannot be read.
ExperimentConfig load_config(const std::string& path);

// Manifest lines joined as "key = value\n".
std::string render_manifest(const ExperimentConfig& config);

}  // namespace netjam

#endif  // NETJAM_CONFIG_HPP_
