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

#include "netjam/experiment.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "netjam/analysis.hpp"
#include "netjam/ensemble.hpp"
#include "netjam/error.hpp"
#include "netjam/format.hpp"
#include "netjam/theory.hpp"

namespace netjam {

namespace {

struct Files {
  std::vector<std::pair<std::string, std::string>> items;

  void add(std::string name, const std::ostringstream& body) {
    items.emplace_back(std::move(name), body.str());
  }
};

PlanTemplate plan_template(const ExperimentConfig& c, Approach approach,
                           double lambda) {
  PlanTemplate t;
  t.lambda = lambda;
  t.approach = approach;
  t.hubs = c.hubs;
  return t;
}

Ensemble grow_ensemble(const ExperimentConfig& c, double p) {
  GrowthConfig g = c.network;
  g.random_fraction = p;
  return Ensemble::grow(g, c.realizations, c.master_seed, c.workers);
}

// Full runs (with snapshots) of every realization at one beta.
std::vector<TimeSeries> run_all(const ExperimentConfig& c,
                                const Ensemble& ens, const PlanTemplate& plan,
                                double beta) {
  std::vector<TimeSeries> runs(ens.size());
  parallel_for(ens.size(), c.workers, [&](std::size_t r) {
    const auto& real = ens[r];
    const RatePlan rp =
        RatePlan::make(real.graph, plan.lambda, beta, plan.approach, plan.hubs);
    RunOptions opts;
    opts.t_max = c.t_max;
    opts.snapshot_times = c.snapshot_times;
    runs[r] = run(real.graph, real.dist, rp, opts, real.traffic_seed);
  });
  return runs;
}

std::vector<QueueSnapshot> snapshots_at(const std::vector<TimeSeries>& runs,
                                        std::size_t index) {
  std::vector<QueueSnapshot> out;
  out.reserve(runs.size());
  for (const auto& ts : runs) out.push_back(ts.snapshots[index]);
  return out;
}

std::vector<QueueSnapshot> final_snapshots(const ExperimentConfig& c,
                                           const Ensemble& ens,
                                           const PlanTemplate& plan,
                                           double beta) {
  ExperimentConfig only_end = c;
  only_end.snapshot_times = {c.t_max};
  return snapshots_at(run_all(only_end, ens, plan, beta), 0);
}

struct Structure {
  MeanWithError h;
  MeanWithError k_max;
};

MeanWithError mean_err(const std::vector<double>& xs) {
  MeanWithError out;
  const double n = static_cast<double>(xs.size());
  for (double x : xs) out.mean += x;
  out.mean /= n;
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.stderr_ = std::sqrt(ss / (n - 1) / n);
  }
  return out;
}

Structure measure_structure(const Ensemble& ens) {
  std::vector<double> hs, ks;
  for (const auto& real : ens) {
    hs.push_back(mean_path_length(real.graph, real.dist));
    ks.push_back(static_cast<double>(k_max(real.graph)));
  }
  return {mean_err(hs), mean_err(ks)};
}

std::string tag(double x) { return format_number(x); }

void run_generate(const ExperimentConfig& c, Files& files) {
  const Ensemble ens = grow_ensemble(c, c.network.random_fraction);
  std::ostringstream structure, hist;
  structure << "realization,seed,N,edges,k_max,h\n";
  std::map<std::size_t, std::size_t> counts;
  for (const auto& real : ens) {
    structure << real.index << ',' << real.growth.seed << ','
              << real.graph.node_count() << ',' << real.graph.edge_count()
              << ',' << k_max(real.graph) << ','
              << format_number(mean_path_length(real.graph, real.dist)) << '\n';
    for (const auto& [k, n] : degree_histogram(real.graph).counts) counts[k] += n;
    std::ostringstream edges;
    write_edge_list(edges, real.graph, real.growth);
    files.add("graph_r" + std::to_string(real.index) + ".edges", edges);
  }
  hist << "k,count\n";
  for (const auto& [k, n] : counts) hist << k << ',' << n << '\n';
  files.add("structure.csv", structure);
  files.add("degree_histogram.csv", hist);
}

void run_profile(const ExperimentConfig& c, Files& files) {
  const Ensemble ens = grow_ensemble(c, c.network.random_fraction);
  const PlanTemplate plan = plan_template(c, c.approach, c.lambda);
  for (double beta : c.betas) {
    const auto runs = run_all(c, ens, plan, beta);
    for (std::size_t s = 0; s < c.snapshot_times.size(); ++s) {
      std::ostringstream out;
      write_profile_csv(out, degree_profile(snapshots_at(runs, s)));
      files.add("profile_beta" + tag(beta) + "_t" +
                    std::to_string(c.snapshot_times[s]) + ".csv",
                out);
    }
  }
}

void run_timeseries(const ExperimentConfig& c, Files& files) {
  const Ensemble ens = grow_ensemble(c, c.network.random_fraction);
  const PlanTemplate plan = plan_template(c, c.approach, c.lambda);
  for (double beta : c.betas) {
    const auto runs = run_all(c, ens, plan, beta);
    for (std::size_t r = 0; r < runs.size(); ++r) {
      const std::string stem = "beta" + tag(beta) + "_r" + std::to_string(r);
      std::ostringstream ts;
      write_timeseries_csv(ts, runs[r]);
      files.add("timeseries_" + stem + ".csv", ts);
      for (const auto& snap : runs[r].snapshots) {
        std::ostringstream out;
        write_snapshot_csv(out, snap);
        files.add("snapshot_" + stem + "_t" + std::to_string(snap.t) + ".csv",
                  out);
      }
    }
  }
}

void add_phase_files(const std::vector<PhaseResult>& results, Files& files) {
  std::ostringstream phase, slopes;
  write_phase_csv(phase, results);
  write_slope_table_csv(slopes, results);
  files.add("phase.csv", phase);
  files.add("slopes.csv", slopes);
}

void run_betac(const ExperimentConfig& c, Files& files) {
  const Ensemble ens = grow_ensemble(c, c.network.random_fraction);
  const PlanTemplate plan = plan_template(c, c.approach, c.lambda);
  const double lambdas[] = {c.lambda};
  add_phase_files(beta_c_curve(lambdas, ens, plan, c.search), files);
}

void run_curve(const ExperimentConfig& c, Files& files) {
  const Ensemble ens = grow_ensemble(c, c.network.random_fraction);
  const PlanTemplate plan = plan_template(c, c.approach, c.lambda);
  add_phase_files(beta_c_curve(c.lambdas, ens, plan, c.search), files);
}

void run_theory(const ExperimentConfig& c, Files& files,
                std::vector<std::string>& notes) {
  const double p = c.network.random_fraction;
  const Ensemble ens = grow_ensemble(c, p);
  const Structure st = measure_structure(ens);
  const PlanTemplate plan = plan_template(c, c.approach, c.lambda);

  const double calib_lambda[] = {c.lambda};
  const auto calib = beta_c_curve(calib_lambda, ens, plan, c.search);
  const auto alpha = calibrate_alpha1(calib.front().beta_c, c.lambda,
                                      st.h.mean, st.k_max.mean);
  if (!alpha.warning.empty()) notes.push_back("calibration: " + alpha.warning);

  TheoryParams params;
  params.p = p;
  params.m = c.network.links_per_node;
  params.nodes = c.network.nodes;
  params.h = st.h.mean;
  params.k_max = st.k_max.mean;
  params.alpha1 = alpha.alpha1;
  std::ostringstream theory;
  write_theory_csv(theory, std::span(&params, 1));
  files.add("theory.csv", theory);

  const auto curve = beta_c_curve(c.lambdas, ens, plan, c.search);
  std::vector<PredictionRow> rows;
  for (const auto& r : curve) {
    PredictionRow row;
    row.lambda = r.lambda;
    row.beta_c_measured = r.beta_c;
    row.beta_c_predicted =
        beta_c_predicted(r.lambda, params.h, params.alpha1, params.k_max);
    row.rel_err = r.beta_c > 0.0
                      ? std::abs(row.beta_c_predicted - r.beta_c) / r.beta_c
                      : std::nan("");
    rows.push_back(row);
  }
  std::ostringstream pred;
  write_prediction_csv(pred, rows);
  files.add("prediction.csv", pred);
  add_phase_files(curve, files);
}

void profile_rows(std::ostringstream& out, const std::string& prefix,
                  const DegreeProfile& prof) {
  for (const auto& b : prof.bins) {
    out << prefix << b.k << ',' << format_number(b.mean) << ','
        << format_number(b.stderr_) << '\n';
  }
}

void run_figure(const ExperimentConfig& c, Files& files) {
  switch (c.figure) {
    case 1: {
      for (double p : c.p_values) {
        const Ensemble ens = grow_ensemble(c, p);
        const PlanTemplate plan = plan_template(c, c.approach, c.lambda);
        std::ostringstream out;
        out << "beta,k,mean_n,stderr\n";
        for (double beta : c.betas) {
          profile_rows(out, tag(beta) + ",",
                       degree_profile(final_snapshots(c, ens, plan, beta)));
        }
        files.add("figure1_p" + tag(p) + ".csv", out);
      }
      break;
    }
    case 2: {
      const Ensemble ens = grow_ensemble(c, c.network.random_fraction);
      std::ostringstream out;
      out << "approach,beta,k,mean_n,stderr\n";
      for (Approach a : {Approach::kEfficient, Approach::kNormal}) {
        const PlanTemplate plan = plan_template(c, a, c.lambda);
        for (double beta : c.betas) {
          profile_rows(out,
                       std::string(approach_name(a)) + "," + tag(beta) + ",",
                       degree_profile(final_snapshots(c, ens, plan, beta)));
        }
      }
      files.add("figure2.csv", out);
      break;
    }
    case 3: {
      const Ensemble ens = grow_ensemble(c, c.network.random_fraction);
      const PlanTemplate plan = plan_template(c, c.approach, c.lambda);
      std::ostringstream out, slopes;
      out << "beta,t,n1,n2\n";
      slopes << "beta,slope_n1,slope_n2\n";
      for (double beta : c.betas) {
        const auto means = run_ensemble(ens, plan, beta, c.t_max, c.workers);
        for (std::size_t i = 0; i < means.n1.size(); ++i) {
          out << tag(beta) << ',' << i + 1 << ',' << format_number(means.n1[i])
              << ',' << format_number(means.n2[i]) << '\n';
        }
        slopes << tag(beta) << ','
               << format_number(growth_slope(means.n1, c.window).slope) << ','
               << format_number(growth_slope(means.n2, c.window).slope) << '\n';
      }
      files.add("figure3.csv", out);
      files.add("figure3_slopes.csv", slopes);
      break;
    }
    case 4: {
      std::ostringstream out;
      out << "p,approach,lambda,beta_c,beta_lo,beta_hi\n";
      std::map<double, Ensemble> ensembles;
      std::vector<PhaseResult> all;
      for (const auto& cs : c.curves) {
        auto it = ensembles.find(cs.p);
        if (it == ensembles.end()) {
          it = ensembles.emplace(cs.p, grow_ensemble(c, cs.p)).first;
        }
        const PlanTemplate plan = plan_template(c, cs.approach, c.lambda);
        const auto curve = beta_c_curve(c.lambdas, it->second, plan, c.search);
        for (const auto& r : curve) {
          out << tag(cs.p) << ',' << approach_name(cs.approach) << ','
              << tag(r.lambda) << ',' << format_number(r.beta_c) << ','
              << format_number(r.beta_lo) << ',' << format_number(r.beta_hi)
              << '\n';
        }
      }
      files.add("figure4.csv", out);
      break;
    }
    case 5: {
      std::ostringstream out;
      out << "p,h,h_err,kmax,kmax_err\n";
      for (double p : c.p_values) {
        const Structure st = measure_structure(grow_ensemble(c, p));
        out << tag(p) << ',' << format_number(st.h.mean) << ','
            << format_number(st.h.stderr_) << ','
            << format_number(st.k_max.mean) << ','
            << format_number(st.k_max.stderr_) << '\n';
      }
      files.add("figure5.csv", out);
      break;
    }
    default:
      throw ConfigError("unknown figure " + std::to_string(c.figure));
  }
}

[[noreturn]] void rethrow_with_context(const std::string& ctx) {
  try {
    throw;
  } catch (const ParseError& e) {
    throw;
  } catch (const BracketError& e) {
    throw BracketError(ctx + e.what(), e.slope_lo(), e.slope_hi());
  } catch (const ConfigError& e) {
    throw ConfigError(ctx + e.what());
  } catch (const StructuralError& e) {
    throw StructuralError(ctx + e.what());
  } catch (const ContractViolation& e) {
    throw ContractViolation(ctx + e.what());
  } catch (const DomainError& e) {
    throw DomainError(ctx + e.what());
  } catch (const IoError& e) {
    throw IoError(ctx + e.what());
  }
}

}  // namespace

const char* version_string() { return "netjam 0.1.0"; }

ExperimentOutput compute_experiment(const ExperimentConfig& config) {
  Files files;
  ExperimentOutput out;
  try {
    switch (config.kind) {
      case ExperimentKind::kGenerate: run_generate(config, files); break;
      case ExperimentKind::kProfile: run_profile(config, files); break;
      case ExperimentKind::kTimeseries: run_timeseries(config, files); break;
      case ExperimentKind::kBetac: run_betac(config, files); break;
      case ExperimentKind::kCurve: run_curve(config, files); break;
      case ExperimentKind::kTheory: run_theory(config, files, out.notes); break;
      case ExperimentKind::kFigure: run_figure(config, files); break;
    }
  } catch (const Error&) {
    std::string ctx = std::string(kind_name(config.kind));
    if (config.kind == ExperimentKind::kFigure) {
      ctx += " " + std::to_string(config.figure);
    }
    rethrow_with_context(ctx + " experiment: ");
  }
  out.files = std::move(files.items);
  return out;
}

std::vector<std::string> run_experiment(const ExperimentConfig& config) {
  namespace fs = std::filesystem;
  const auto start = std::chrono::steady_clock::now();
  const ExperimentOutput result = compute_experiment(config);
  const double wall = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();

  const fs::path dir(config.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + config.output +
                  "': " + ec.message());
  }
  std::vector<std::string> written;
  auto write = [&](const std::string& name, const std::string& body) {
    const fs::path path = dir / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << body;
    f.close();
    if (!f) throw IoError("cannot write '" + path.string() + "'");
    written.push_back(path.string());
  };
  for (const auto& [name, body] : result.files) write(name, body);

  std::ostringstream manifest;
  manifest << "# " << version_string() << "\n";
  manifest << render_manifest(config);
  manifest << "# realization seeds (graph, traffic) derive from master_seed\n";
  for (std::size_t r = 0; r < config.realizations; ++r) {
    manifest << "# r" << r << " graph_seed="
             << derive_seed(config.master_seed, r, StreamPurpose::kGraph)
             << " traffic_seed="
             << derive_seed(config.master_seed, r, StreamPurpose::kTraffic)
             << "\n";
  }
  for (const auto& note : result.notes) manifest << "# note: " << note << "\n";
  manifest << "# wall_time_seconds = " << format_number(wall) << "\n";
  write("manifest.txt", manifest.str());
  return written;
}

}  // namespace netjam
