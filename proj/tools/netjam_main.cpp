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

// netjam run <config-file> [--out DIR] [--seed S] [--workers N]
// netjam validate <config-file>
//
// Exit status: 0 success, 1 config/usage error, 2 runtime error.

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include "netjam/netjam.h"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitRuntime = 2;

struct ConfigDeleter {
  void operator()(nj_config* c) const { nj_config_free(c); }
};
using ConfigPtr = std::unique_ptr<nj_config, ConfigDeleter>;

int report(nj_status st) {
  std::fprintf(stderr, "netjam: %s: %s\n", nj_status_name(st), nj_last_error());
  return st == NJ_ERR_PARSE || st == NJ_ERR_CONFIG ? kExitParse : kExitRuntime;
}

std::string manifest_of(const nj_config* cfg) {
  size_t needed = 0;
  nj_config_manifest(cfg, nullptr, 0, &needed);
  std::string text(needed, '\0');
  nj_config_manifest(cfg, text.data(), text.size(), &needed);
  text.resize(needed - 1);
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packet congestion on growing scale-free networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nj_version()));

  std::string run_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  auto* run = app.add_subcommand("run", "run the experiment a config describes");
  run->add_option("config", run_path, "config file")->required();
  run->add_option("--out", out_dir, "output directory (overrides 'output')");
  run->add_option("--seed", seed, "master seed (overrides 'master_seed')");
  run->add_option("--workers", workers, "concurrent realizations (0 = all CPUs)");

  std::string validate_path;
  auto* validate =
      app.add_subcommand("validate", "parse a config and print its resolved values");
  validate->add_option("config", validate_path, "config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  const std::string& path = run->parsed() ? run_path : validate_path;
  nj_config* raw = nullptr;
  if (nj_status st = nj_config_load(path.c_str(), &raw); st != NJ_OK) {
    // An unreadable file is reported like a malformed one.
    if (st == NJ_ERR_IO) {
      std::fprintf(stderr, "netjam: %s\n", nj_last_error());
      return kExitParse;
    }
    return report(st);
  }
  ConfigPtr cfg(raw);

  if (validate->parsed()) {
    std::fputs(manifest_of(cfg.get()).c_str(), stdout);
    return 0;
  }

  if (out_dir) nj_config_set_output(cfg.get(), out_dir->c_str());
  if (seed) nj_config_set_master_seed(cfg.get(), *seed);
  if (workers) nj_config_set_workers(cfg.get(), *workers);

  if (nj_status st = nj_run_experiment(cfg.get()); st != NJ_OK) return report(st);
  return 0;
}
