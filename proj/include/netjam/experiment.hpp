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

#ifndef NETJAM_EXPERIMENT_HPP_
#define NETJAM_EXPERIMENT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "netjam/config.hpp"

namespace netjam {

// Files produced by one experiment, keyed by name relative to the output
// directory. Everything is computed before anything is written.
struct ExperimentOutput {
  std::vector<std::pair<std::string, std::string>> files;
  std::vector<std::string> notes;  // calibration warnings and the like
};

// Runs the experiment in memory. Module errors propagate with the
// experiment kind prefixed to the message.
ExperimentOutput compute_experiment(const ExperimentConfig& config);

// compute_experiment, then writes every file plus manifest.txt into
// config.output (created if missing). Returns the written paths.
std::vector<std::string> run_experiment(const ExperimentConfig& config);

const char* version_string();

}  // namespace netjam

#endif  // NETJAM_EXPERIMENT_HPP_
