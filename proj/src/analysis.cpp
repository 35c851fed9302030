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

#include "netjam/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <string>

#include "netjam/error.hpp"
#include "netjam/format.hpp"

namespace netjam {

namespace {

MeanWithError mean_and_stderr(const std::vector<double>& xs) {
  MeanWithError out;
  if (xs.empty()) return out;
  const double n = static_cast<double>(xs.size());
  double sum = 0;
  for (double x : xs) sum += x;
  out.mean = sum / n;
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.stderr_ = std::sqrt(ss / (n - 1)) / std::sqrt(n);
  }
  return out;
}

void check_snapshots(std::span<const QueueSnapshot> snapshots) {
  if (snapshots.empty()) throw ContractViolation("empty snapshot ensemble");
  for (const auto& s : snapshots) {
    if (s.t != snapshots.front().t) {
      throw ContractViolation("snapshots taken at different times");
    }
    if (s.degrees.size() != s.queue_lengths.size()) {
      throw ContractViolation("snapshot degree and queue sizes differ");
    }
  }
}

}  // namespace

DegreeProfile degree_profile(std::span<const QueueSnapshot> snapshots) {
  check_snapshots(snapshots);
  struct Acc {
    double sum = 0, sum_sq = 0;
    std::size_t count = 0;
  };
  std::map<std::size_t, Acc> acc;
  for (const auto& s : snapshots) {
    for (std::size_t i = 0; i < s.degrees.size(); ++i) {
      auto& a = acc[s.degrees[i]];
      const auto q = static_cast<double>(s.queue_lengths[i]);
      a.sum += q;
      a.sum_sq += q * q;
      ++a.count;
    }
  }
  DegreeProfile out;
  out.t = snapshots.front().t;
  out.realizations = snapshots.size();
  for (const auto& [k, a] : acc) {
    DegreeBin b;
    b.k = k;
    b.count = a.count;
    const double n = static_cast<double>(a.count);
    b.mean = a.sum / n;
    if (a.count > 1) {
      const double var = std::max(0.0, (a.sum_sq - n * b.mean * b.mean) / (n - 1));
      b.stderr_ = std::sqrt(var / n);
    }
    out.bins.push_back(b);
  }
  return out;
}

std::vector<EnsembleBin> binned_profile(std::span<const QueueSnapshot> snapshots,
                                        std::span<const std::size_t> edges) {
  check_snapshots(snapshots);
  if (edges.size() < 2 || !std::is_sorted(edges.begin(), edges.end())) {
    throw ContractViolation("bin edges must be ascending with at least two");
  }
  const std::size_t nbins = edges.size() - 1;
  std::vector<std::vector<double>> per_bin(nbins);
  for (const auto& s : snapshots) {
    std::vector<double> sum(nbins, 0.0);
    std::vector<std::size_t> cnt(nbins, 0);
    for (std::size_t i = 0; i < s.degrees.size(); ++i) {
      const std::size_t k = s.degrees[i];
      auto it = std::upper_bound(edges.begin(), edges.end(), k);
      if (it == edges.begin() || it == edges.end()) continue;
      const auto j = static_cast<std::size_t>(it - edges.begin()) - 1;
      sum[j] += static_cast<double>(s.queue_lengths[i]);
      ++cnt[j];
    }
    for (std::size_t j = 0; j < nbins; ++j) {
      if (cnt[j] > 0) per_bin[j].push_back(sum[j] / static_cast<double>(cnt[j]));
    }
  }
  std::vector<EnsembleBin> out;
  for (std::size_t j = 0; j < nbins; ++j) {
    if (per_bin[j].empty()) continue;
    const auto me = mean_and_stderr(per_bin[j]);
    out.push_back({edges[j], edges[j + 1], me.mean, me.stderr_, per_bin[j].size()});
  }
  return out;
}

MeanWithError top_fraction_mean_queue(std::span<const QueueSnapshot> snapshots,
                                      double fraction) {
  check_snapshots(snapshots);
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw ContractViolation("fraction outside (0, 1]");
  }
  std::vector<double> per_real;
  for (const auto& s : snapshots) {
    const std::size_t n = s.degrees.size();
    auto count = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(n) - 1e-9));
    count = std::min(std::max<std::size_t>(count, 1), n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return s.degrees[a] > s.degrees[b];
    });
    double sum = 0;
    for (std::size_t j = 0; j < count; ++j) {
      sum += static_cast<double>(s.queue_lengths[order[j]]);
    }
    per_real.push_back(sum / static_cast<double>(count));
  }
  return mean_and_stderr(per_real);
}

void write_profile_csv(std::ostream& out, const DegreeProfile& profile) {
  out << "k,mean_n,stderr,count\n";
  for (const auto& b : profile.bins) {
    out << b.k << ',' << format_number(b.mean) << ','
        << format_number(b.stderr_) << ',' << b.count << '\n';
  }
}

SlopeEstimate growth_slope(std::span<const double> series, FitWindow window) {
  if (window.first < 1 || window.first >= window.last ||
      window.last > series.size()) {
    throw ContractViolation("fit window [" + std::to_string(window.first) +
                            ", " + std::to_string(window.last) +
                            "] outside series of length " +
                            std::to_string(series.size()));
  }
  if (window.last - window.first + 1 < 50) {
    throw ContractViolation("fit window shorter than 50 steps");
  }
  const std::size_t n = window.last - window.first + 1;
  const double nd = static_cast<double>(n);
  // Centre t to keep the normal equations well conditioned.
  const double t_mean =
      0.5 * static_cast<double>(window.first + window.last);
  double y_sum = 0;
  for (std::size_t t = window.first; t <= window.last; ++t) y_sum += series[t - 1];
  const double y_mean = y_sum / nd;
  double stt = 0, sty = 0;
  for (std::size_t t = window.first; t <= window.last; ++t) {
    const double dt = static_cast<double>(t) - t_mean;
    stt += dt * dt;
    sty += dt * (series[t - 1] - y_mean);
  }
  SlopeEstimate est;
  est.window = window;
  est.slope = sty / stt;
  est.intercept = y_mean - est.slope * t_mean;
  double ssr = 0;
  for (std::size_t t = window.first; t <= window.last; ++t) {
    const double r =
        series[t - 1] - (est.intercept + est.slope * static_cast<double>(t));
    ssr += r * r;
  }
  est.residual_se = std::sqrt(ssr / (nd - 2));
  return est;
}

EnsembleMeans run_ensemble(const Ensemble& ensemble, const PlanTemplate& plan,
                           double beta, std::size_t t_max,
                           std::size_t workers) {
  if (ensemble.size() == 0) throw ContractViolation("empty ensemble");
  std::vector<TimeSeries> runs(ensemble.size());
  parallel_for(ensemble.size(), workers, [&](std::size_t r) {
    const auto& real = ensemble[r];
    const RatePlan rp =
        RatePlan::make(real.graph, plan.lambda, beta, plan.approach, plan.hubs);
    RunOptions opts;
    opts.t_max = t_max;
    runs[r] = run(real.graph, real.dist, rp, opts, real.traffic_seed);
  });
  EnsembleMeans out;
  out.n1.assign(t_max, 0.0);
  out.n2.assign(t_max, 0.0);
  for (const auto& ts : runs) {
    for (std::size_t i = 0; i < t_max; ++i) {
      out.n1[i] += ts.steps[i].n1;
      out.n2[i] += ts.steps[i].n2;
    }
  }
  const double r = static_cast<double>(runs.size());
  for (std::size_t i = 0; i < t_max; ++i) {
    out.n1[i] /= r;
    out.n2[i] /= r;
  }
  return out;
}

double ensemble_slope(const Ensemble& ensemble, const PlanTemplate& plan,
                      double beta, const SearchOptions& search) {
  const auto means =
      run_ensemble(ensemble, plan, beta, search.t_max, search.workers);
  return growth_slope(means.n1, search.window).slope;
}

PhaseResult find_beta_c(double lambda, const Ensemble& ensemble,
                        PlanTemplate plan, const SearchOptions& search) {
  if (!(search.tol > 0.0)) throw ContractViolation("tolerance must be > 0");
  if (!(search.beta_lo >= 0.0 && search.beta_lo < search.beta_hi)) {
    throw ContractViolation("need 0 <= beta_lo < beta_hi");
  }
  plan.lambda = lambda;
  PhaseResult res;
  res.lambda = lambda;
  res.ensemble = ensemble.size();
  res.tol = search.tol;
  auto probe = [&](double beta) {
    const double s = ensemble_slope(ensemble, plan, beta, search);
    res.slopes.push_back({beta, s});
    return s;
  };

  double lo = search.beta_lo, hi = search.beta_hi;
  double s_lo = probe(lo);
  if (!(s_lo > search.epsilon)) {
    throw BracketError(
        "free flow already at beta_lo=" + format_number(lo) + " (slope " +
            format_number(s_lo) + " <= epsilon " +
            format_number(search.epsilon) +
            "); lambda is below the congestion onset for this bracket",
        s_lo, std::numeric_limits<double>::quiet_NaN());
  }
  double s_hi = probe(hi);
  if (s_hi > search.epsilon) {
    throw BracketError("still congested at beta_hi=" + format_number(hi) +
                           " (slope " + format_number(s_hi) + ")",
                       s_lo, s_hi);
  }
  while (hi - lo > search.tol) {
    const double mid = 0.5 * (lo + hi);
    const double s = probe(mid);
    if (s > search.epsilon) {
      lo = mid;
      s_lo = s;
    } else {
      hi = mid;
      s_hi = s;
    }
  }
  res.beta_lo = lo;
  res.beta_hi = hi;
  res.slope_lo = s_lo;
  res.slope_hi = s_hi;
  res.beta_c = 0.5 * (lo + hi);
  return res;
}

std::vector<PhaseResult> beta_c_curve(std::span<const double> lambdas,
                                      const Ensemble& ensemble,
                                      const PlanTemplate& plan,
                                      const SearchOptions& search) {
  if (lambdas.empty()) throw ContractViolation("empty lambda list");
  std::vector<PhaseResult> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    try {
      out.push_back(find_beta_c(lambda, ensemble, plan, search));
    } catch (const BracketError& e) {
      if (search.beta_lo != 0.0 || !(e.slope_lo() <= search.epsilon)) throw;
      PhaseResult zero;
      zero.lambda = lambda;
      zero.ensemble = ensemble.size();
      zero.tol = search.tol;
      zero.free_at_zero = true;
      zero.slope_lo = zero.slope_hi = e.slope_lo();
      zero.slopes.push_back({0.0, e.slope_lo()});
      out.push_back(zero);
    }
  }
  return out;
}

LineFit fit_beta_c_line(std::span<const PhaseResult> curve, double lambda_lo,
                        double lambda_hi) {
  std::vector<double> x, y;
  for (const auto& r : curve) {
    if (r.beta_c > 0.0 && r.lambda >= lambda_lo && r.lambda <= lambda_hi) {
      x.push_back(r.lambda);
      y.push_back(r.beta_c);
    }
  }
  if (x.size() < 2) throw ContractViolation("fewer than two points with beta_c > 0");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = x.size();
  return fit;
}

void write_phase_csv(std::ostream& out, std::span<const PhaseResult> results) {
  out << "lambda,beta_c,beta_lo,beta_hi,slope_lo,slope_hi,ensemble,tol\n";
  for (const auto& r : results) {
    out << format_number(r.lambda) << ',' << format_number(r.beta_c) << ','
        << format_number(r.beta_lo) << ',' << format_number(r.beta_hi) << ','
        << format_number(r.slope_lo) << ',' << format_number(r.slope_hi) << ','
        << r.ensemble << ',' << format_number(r.tol) << '\n';
  }
}

void write_slope_table_csv(std::ostream& out,
                           std::span<const PhaseResult> results) {
  out << "lambda,beta,slope\n";
  for (const auto& r : results) {
    for (const auto& s : r.slopes) {
      out << format_number(r.lambda) << ',' << format_number(s.beta) << ','
          << format_number(s.slope) << '\n';
    }
  }
}

}  // namespace netjam
