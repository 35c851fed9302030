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

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "netjam/config.hpp"
#include "netjam/error.hpp"
#include "netjam/experiment.hpp"

using namespace netjam;
namespace fs = std::filesystem;

namespace {

std::map<std::string, std::string> compute(const std::string& text,
                                           std::size_t workers = 1) {
  auto cfg = parse_config(text);
  cfg.workers = workers;
  cfg.explicit_keys.push_back("workers");
  cfg.refresh();
  std::map<std::string, std::string> out;
  for (auto& [name, body] : compute_experiment(cfg).files) out[name] = body;
  return out;
}

std::string first_line(const std::string& body) {
  return body.substr(0, body.find('\n'));
}

std::size_t line_count(const std::string& body) {
  return static_cast<std::size_t>(std::count(body.begin(), body.end(), '\n'));
}

}  // namespace

TEST_CASE("generate writes graphs and structure tables") {
  const auto files = compute("kind = generate\nN = 60\nm = 2\nrealizations = 3\n");
  CHECK(files.count("graph_r0.edges"));
  CHECK(files.count("graph_r2.edges"));
  CHECK(first_line(files.at("structure.csv")) == "realization,seed,N,edges,k_max,h");
  CHECK(line_count(files.at("structure.csv")) == 4);
  CHECK(first_line(files.at("degree_histogram.csv")) == "k,count");
  CHECK(first_line(files.at("graph_r1.edges")).rfind("# N=60 m=2 p=0 seed=", 0) == 0);
}

TEST_CASE("timeseries and profile kinds") {
  const auto ts = compute(
      "kind = timeseries\nN = 80\nbeta = 0.05\nt_max = 60\nsnapshot_times = 30\n");
  REQUIRE(ts.count("timeseries_beta0.05_r0.csv"));
  CHECK(line_count(ts.at("timeseries_beta0.05_r0.csv")) == 61);
  CHECK(ts.count("snapshot_beta0.05_r0_t30.csv"));

  const auto prof = compute(
      "kind = profile\nN = 80\nbeta = 0, 0.1\nt_max = 60\nrealizations = 3\n");
  CHECK(prof.count("profile_beta0_t60.csv"));
  CHECK(first_line(prof.at("profile_beta0.1_t60.csv")) == "k,mean_n,stderr,count");
}

TEST_CASE("figure exports carry the plotted columns") {
  const auto f1 = compute(
      "kind = figure\nfigure = 1\nN = 80\np_values = 1, 0\nbeta = 0, 0.05, 0.1\n"
      "t_max = 50\nrealizations = 2\n");
  REQUIRE(f1.size() == 2);
  CHECK(first_line(f1.at("figure1_p0.csv")) == "beta,k,mean_n,stderr");
  CHECK(first_line(f1.at("figure1_p1.csv")) == "beta,k,mean_n,stderr");

  const auto f2 = compute(
      "kind = figure\nfigure = 2\nN = 80\nbeta = 0.05\nt_max = 50\nrealizations = 2\n");
  const std::string& body = f2.at("figure2.csv");
  CHECK(first_line(body) == "approach,beta,k,mean_n,stderr");
  CHECK(body.find("\nefficient,0.05,") != std::string::npos);
  CHECK(body.find("\nnormal,0.05,") != std::string::npos);

  const auto f5 = compute(
      "kind = figure\nfigure = 5\nN = 60\np_values = 0, 0.5, 1\nrealizations = 3\n");
  CHECK(first_line(f5.at("figure5.csv")) == "p,h,h_err,kmax,kmax_err");
  CHECK(line_count(f5.at("figure5.csv")) == 4);
}

TEST_CASE("outputs are byte-identical for any worker count") {
  const std::string text =
      "kind = figure\nfigure = 3\nN = 100\nbeta = 0.05, 0.2\nt_max = 120\n"
      "fit_window = 60, 120\nrealizations = 4\napproach = efficient\n";
  CHECK(compute(text, 1) == compute(text, 3));
}

TEST_CASE("module errors are reported with the experiment kind") {
  const auto cfg = parse_config(
      "kind = betac\nN = 60\nlambda = 0.0001\nt_max = 120\nfit_window = 60, 120\n"
      "realizations = 2\nbeta_lo = 0.01\n");
  try {
    compute_experiment(cfg);
    FAIL("expected a bracket error");
  } catch (const BracketError& e) {
    CHECK(std::string(e.what()).rfind("betac experiment: ", 0) == 0);
  }
}

TEST_CASE("run_experiment writes files and a manifest") {
  const fs::path dir = fs::temp_directory_path() / "netjam_experiment_test";
  fs::remove_all(dir);
  auto cfg = parse_config("kind = generate\nN = 40\nm = 2\nrealizations = 2\n");
  cfg.output = dir.string();
  cfg.explicit_keys.push_back("output");
  cfg.refresh();
  const auto written = run_experiment(cfg);
  CHECK(written.size() == 5);
  std::ifstream in(dir / "manifest.txt");
  std::stringstream text;
  text << in.rdbuf();
  const std::string manifest = text.str();
  CHECK(manifest.rfind("# netjam ", 0) == 0);
  CHECK(manifest.find("\nkind = generate\n") != std::string::npos);
  CHECK(manifest.find("# r1 graph_seed=") != std::string::npos);
  CHECK(manifest.find("# wall_time_seconds = ") != std::string::npos);
  fs::remove_all(dir);
}
