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

#include "netjam/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "netjam/error.hpp"
#include "netjam/format.hpp"

namespace netjam {

namespace {

// Canonical key order; also the set of accepted keys.
constexpr const char* kKeys[] = {
    "kind",     "figure",    "N",       "m",        "p",
    "p_values", "lambda",    "lambdas", "beta",     "approach",
    "f",        "k_thr",     "t_max",   "realizations", "snapshot_times",
    "fit_window", "beta_lo", "beta_hi", "tol",      "epsilon",
    "curves",   "output",    "master_seed", "workers",
};

struct Entry {
  int line = 0;
  std::string value;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Entry> entries)
      : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  int line(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }
  const std::string& raw(const std::string& key) const {
    return entries_.at(key).value;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ParseError(line(key), key, what);
  }

  double number(const std::string& key, const std::string& text) const {
    double v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || text.empty()) {
      fail(key, "expected a number, got '" + text + "'");
    }
    return v;
  }

  std::uint64_t integer(const std::string& key, const std::string& text) const {
    std::uint64_t v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || text.empty()) {
      fail(key, "expected a non-negative integer, got '" + text + "'");
    }
    return v;
  }

  std::vector<std::string> list(const std::string& key) const {
    std::vector<std::string> out;
    std::stringstream ss(raw(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) fail(key, "empty list element");
      out.push_back(item);
    }
    if (out.empty()) fail(key, "empty list");
    return out;
  }

  double get_number(const std::string& key, double fallback) const {
    return has(key) ? number(key, raw(key)) : fallback;
  }
  std::uint64_t get_integer(const std::string& key, std::uint64_t fallback) const {
    return has(key) ? integer(key, raw(key)) : fallback;
  }
  std::vector<double> get_numbers(const std::string& key,
                                  std::vector<double> fallback) const {
    if (!has(key)) return fallback;
    std::vector<double> out;
    for (const auto& item : list(key)) out.push_back(number(key, item));
    return out;
  }
  std::vector<std::uint64_t> get_integers(const std::string& key,
                                          std::vector<std::uint64_t> fallback) const {
    if (!has(key)) return fallback;
    std::vector<std::uint64_t> out;
    for (const auto& item : list(key)) out.push_back(integer(key, item));
    return out;
  }

 private:
  std::map<std::string, Entry> entries_;
};

Approach parse_approach(const Reader& r, const std::string& key,
                        const std::string& text) {
  if (text == "normal") return Approach::kNormal;
  if (text == "efficient") return Approach::kEfficient;
  r.fail(key, "expected 'normal' or 'efficient', got '" + text + "'");
}

ExperimentKind parse_kind(const Reader& r, const std::string& text) {
  static const std::pair<const char*, ExperimentKind> kinds[] = {
      {"generate", ExperimentKind::kGenerate},
      {"profile", ExperimentKind::kProfile},
      {"timeseries", ExperimentKind::kTimeseries},
      {"betac", ExperimentKind::kBetac},
      {"curve", ExperimentKind::kCurve},
      {"theory", ExperimentKind::kTheory},
      {"figure", ExperimentKind::kFigure},
  };
  for (const auto& [name, kind] : kinds) {
    if (text == name) return kind;
  }
  r.fail("kind", "unknown experiment kind '" + text + "'");
}

bool uses_slopes(const ExperimentConfig& c) {
  switch (c.kind) {
    case ExperimentKind::kBetac:
    case ExperimentKind::kCurve:
    case ExperimentKind::kTheory:
      return true;
    case ExperimentKind::kFigure:
      return c.figure == 3 || c.figure == 4;
    default:
      return false;
  }
}

std::string join_numbers(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_number(xs[i]);
  }
  return out;
}

template <typename T>
std::string join_integers(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

const char* kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kGenerate: return "generate";
    case ExperimentKind::kProfile: return "profile";
    case ExperimentKind::kTimeseries: return "timeseries";
    case ExperimentKind::kBetac: return "betac";
    case ExperimentKind::kCurve: return "curve";
    case ExperimentKind::kTheory: return "theory";
    case ExperimentKind::kFigure: return "figure";
  }
  return "?";
}

ExperimentConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_no, "", "expected 'key = value', got '" + body + "'");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "", "missing key before '='");
    if (std::find_if(std::begin(kKeys), std::end(kKeys), [&](const char* k) {
          return key == k;
        }) == std::end(kKeys)) {
      throw ParseError(line_no, key, "unknown key");
    }
    if (entries.count(key)) {
      throw ParseError(line_no, key,
                       "duplicate key (first set on line " +
                           std::to_string(entries[key].line) + ")");
    }
    entries[key] = {line_no, value};
  }

  const Reader r(entries);
  ExperimentConfig c;
  for (const auto& [key, _] : entries) c.explicit_keys.push_back(key);

  if (!r.has("kind")) throw ParseError(0, "kind", "required key missing");
  c.kind = parse_kind(r, r.raw("kind"));

  if (c.kind == ExperimentKind::kFigure) {
    if (!r.has("figure")) {
      throw ParseError(r.line("kind"), "figure", "required for kind = figure");
    }
    const auto fig = r.integer("figure", r.raw("figure"));
    if (fig < 1 || fig > 5) r.fail("figure", "figure must be 1..5");
    c.figure = static_cast<int>(fig);
  } else if (r.has("figure")) {
    r.fail("figure", "only valid with kind = figure");
  }

  c.network.nodes = r.get_integer("N", 1000);
  c.network.links_per_node = r.get_integer("m", 3);
  if (c.network.links_per_node < 1) r.fail("m", "m must be >= 1");
  if (c.network.nodes < c.network.links_per_node + 1) {
    r.fail("N", "N must be >= m + 1");
  }
  c.network.random_fraction = r.get_number("p", 0.0);
  if (!(c.network.random_fraction >= 0.0 && c.network.random_fraction <= 1.0)) {
    r.fail("p", "p=" + format_number(c.network.random_fraction) +
                    " outside [0, 1]");
  }
  c.p_values = r.get_numbers("p_values", {c.network.random_fraction});
  for (double p : c.p_values) {
    if (!(p >= 0.0 && p <= 1.0)) r.fail("p_values", "p outside [0, 1]");
  }

  c.lambda = r.get_number("lambda", 0.01);
  if (!(c.lambda >= 0.0)) r.fail("lambda", "lambda must be >= 0");
  const bool needs_lambdas =
      c.kind == ExperimentKind::kCurve ||
      (c.kind == ExperimentKind::kFigure && c.figure == 4);
  if (needs_lambdas && !r.has("lambdas")) {
    throw ParseError(r.line("kind"), "lambdas",
                     "required (non-empty list) for this experiment");
  }
  c.lambdas = r.get_numbers("lambdas", {c.lambda});
  for (double l : c.lambdas) {
    if (!(l >= 0.0)) r.fail("lambdas", "lambda must be >= 0");
  }

  c.betas = r.get_numbers("beta", {0.0});
  for (double b : c.betas) {
    if (!(b >= 0.0)) r.fail("beta", "beta must be >= 0");
  }
  c.approach = r.has("approach") ? parse_approach(r, "approach", r.raw("approach"))
                                 : Approach::kNormal;
  c.hubs.fraction = r.get_number("f", 0.03);
  if (!(c.hubs.fraction > 0.0 && c.hubs.fraction <= 1.0)) {
    r.fail("f", "f must lie in (0, 1]");
  }
  if (r.has("k_thr")) {
    const auto thr = r.integer("k_thr", r.raw("k_thr"));
    if (thr < 1) r.fail("k_thr", "k_thr must be >= 1");
    c.hubs.degree_threshold = thr;
  }

  const bool long_run = c.kind == ExperimentKind::kBetac ||
                        c.kind == ExperimentKind::kCurve ||
                        c.kind == ExperimentKind::kTheory ||
                        (c.kind == ExperimentKind::kFigure &&
                         (c.figure == 3 || c.figure == 4));
  c.t_max = r.get_integer("t_max", long_run ? 1000 : 500);
  if (c.t_max < 1) r.fail("t_max", "t_max must be >= 1");

  std::size_t default_r = 20;
  if (c.kind == ExperimentKind::kGenerate ||
      c.kind == ExperimentKind::kTimeseries) {
    default_r = 1;
  } else if (c.kind == ExperimentKind::kProfile ||
             (c.kind == ExperimentKind::kFigure &&
              (c.figure == 1 || c.figure == 2))) {
    default_r = 100;
  }
  c.realizations = r.get_integer("realizations", default_r);
  if (c.realizations < 1) r.fail("realizations", "realizations must be >= 1");

  c.snapshot_times = r.get_integers("snapshot_times", {c.t_max});
  for (auto t : c.snapshot_times) {
    if (t < 1 || t > c.t_max) {
      r.fail("snapshot_times", "snapshot time outside [1, t_max]");
    }
  }

  const auto window = r.get_integers("fit_window", {std::min<std::uint64_t>(200, c.t_max), c.t_max});
  if (window.size() != 2) r.fail("fit_window", "expected two step indices");
  c.window = {window[0], window[1]};
  if (uses_slopes(c) || r.has("fit_window")) {
    if (c.window.first < 1 || c.window.first >= c.window.last ||
        c.window.last > c.t_max) {
      r.fail("fit_window", "window must satisfy 1 <= t1 < t2 <= t_max");
    }
    if (c.window.last - c.window.first + 1 < 50) {
      r.fail("fit_window", "window must span at least 50 steps");
    }
  }

  c.search.beta_lo = r.get_number("beta_lo", 0.0);
  c.search.beta_hi = r.get_number("beta_hi", 0.4);
  if (!(c.search.beta_lo >= 0.0)) r.fail("beta_lo", "beta_lo must be >= 0");
  if (!(c.search.beta_hi > c.search.beta_lo)) {
    r.fail("beta_hi", "beta_hi must exceed beta_lo");
  }
  c.search.tol = r.get_number("tol", 0.002);
  if (!(c.search.tol > 0.0)) r.fail("tol", "tol must be > 0");
  c.search.epsilon = r.get_number("epsilon", 1e-4);
  if (!(c.search.epsilon >= 0.0)) r.fail("epsilon", "epsilon must be >= 0");

  if (r.has("curves")) {
    for (const auto& item : r.list("curves")) {
      const auto slash = item.find('/');
      if (slash == std::string::npos) {
        r.fail("curves", "expected <p>/<approach>, got '" + item + "'");
      }
      CurveSpec cs;
      cs.p = r.number("curves", trim(item.substr(0, slash)));
      if (!(cs.p >= 0.0 && cs.p <= 1.0)) r.fail("curves", "p outside [0, 1]");
      cs.approach = parse_approach(r, "curves", trim(item.substr(slash + 1)));
      c.curves.push_back(cs);
    }
  } else {
    c.curves.push_back({c.network.random_fraction, c.approach});
  }

  c.output = r.has("output") ? r.raw("output") : "out";
  if (c.output.empty()) r.fail("output", "empty output directory");
  c.master_seed = r.get_integer("master_seed", 1);
  c.workers = r.get_integer("workers", 0);

  c.refresh();
  return c;
}

void ExperimentConfig::refresh() {
  search.t_max = t_max;
  search.window = window;
  search.workers = workers;

  auto is_explicit = [&](const std::string& key) {
    return std::find(explicit_keys.begin(), explicit_keys.end(), key) !=
           explicit_keys.end();
  };
  std::vector<std::pair<std::string, std::string>> values = {
      {"kind", kind_name(kind)},
      {"figure", std::to_string(figure)},
      {"N", std::to_string(network.nodes)},
      {"m", std::to_string(network.links_per_node)},
      {"p", format_number(network.random_fraction)},
      {"p_values", join_numbers(p_values)},
      {"lambda", format_number(lambda)},
      {"lambdas", join_numbers(lambdas)},
      {"beta", join_numbers(betas)},
      {"approach", approach_name(approach)},
      {"f", format_number(hubs.fraction)},
      {"k_thr", hubs.degree_threshold ? std::to_string(*hubs.degree_threshold)
                                      : std::string("none")},
      {"t_max", std::to_string(t_max)},
      {"realizations", std::to_string(realizations)},
      {"snapshot_times", join_integers(snapshot_times)},
      {"fit_window", std::to_string(window.first) + ", " +
                         std::to_string(window.last)},
      {"beta_lo", format_number(search.beta_lo)},
      {"beta_hi", format_number(search.beta_hi)},
      {"tol", format_number(search.tol)},
      {"epsilon", format_number(search.epsilon)},
      {"curves", [&] {
         std::string out;
         for (std::size_t i = 0; i < curves.size(); ++i) {
           if (i) out += ", ";
           out += format_number(curves[i].p) + "/" +
                  approach_name(curves[i].approach);
         }
         return out;
       }()},
      {"output", output},
      {"master_seed", std::to_string(master_seed)},
      {"workers", std::to_string(workers)},
  };
  manifest.clear();
  for (auto& [key, value] : values) {
    if (key == "figure" && kind != ExperimentKind::kFigure) continue;
    manifest.emplace_back(key, is_explicit(key) ? value : value + "  # default");
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string render_manifest(const ExperimentConfig& config) {
  std::string out;
  for (const auto& [key, value] : config.manifest) {
    out += key + " = " + value + "\n";
  }
  return out;
}

}  // namespace netjam
