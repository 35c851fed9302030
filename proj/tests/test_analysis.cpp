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

#include <cmath>
#include <sstream>

#include "netjam/analysis.hpp"
#include "netjam/error.hpp"
#include "netjam/rng.hpp"

using namespace netjam;

namespace {

std::vector<double> line(std::size_t n, double slope, double intercept) {
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = intercept + slope * double(i + 1);
  return s;
}

// Small, cheap ensemble shared by the search tests.
const Ensemble& small_ensemble() {
  static const Ensemble ens = Ensemble::grow({200, 3, 1.0, 0}, 4, 99, 1);
  return ens;
}

SearchOptions small_search() {
  SearchOptions s;
  s.beta_lo = 0.0;
  s.beta_hi = 1.0;
  s.tol = 0.01;
  s.t_max = 400;
  s.window = {100, 400};
  s.workers = 1;
  return s;
}

}  // namespace

TEST_CASE("profile of hand-built snapshots") {
  std::vector<QueueSnapshot> snaps{
      {10, {1, 2, 2, 3}, {0, 2, 4, 9}},
      {10, {1, 1, 2, 3}, {2, 0, 6, 3}},
  };
  const auto prof = degree_profile(snaps);
  CHECK(prof.t == 10);
  CHECK(prof.realizations == 2);
  REQUIRE(prof.bins.size() == 3);
  CHECK(prof.bins[0].k == 1);
  CHECK(prof.bins[0].count == 3);
  CHECK(prof.bins[0].mean == doctest::Approx(2.0 / 3.0));
  CHECK(prof.bins[1].mean == doctest::Approx(4.0));
  CHECK(prof.bins[1].stderr_ == doctest::Approx(std::sqrt(4.0 / 3.0)));
  CHECK(prof.bins[2].mean == doctest::Approx(6.0));

  std::ostringstream out;
  write_profile_csv(out, prof);
  CHECK(out.str().rfind("k,mean_n,stderr,count\n1,", 0) == 0);

  snaps[1].t = 11;
  CHECK_THROWS_AS(degree_profile(snaps), ContractViolation);
  CHECK_THROWS_AS(degree_profile({}), ContractViolation);
}

TEST_CASE("binned and top-fraction profiles") {
  const std::vector<QueueSnapshot> snaps{
      {5, {1, 2, 3, 4}, {1, 1, 5, 7}},
      {5, {1, 2, 3, 4}, {3, 1, 1, 9}},
  };
  const std::vector<std::size_t> edges{1, 3, 10, 20};
  const auto bins = binned_profile(snaps, edges);
  REQUIRE(bins.size() == 2);
  CHECK(bins[0].k_lo == 1);
  CHECK(bins[0].k_hi == 3);
  CHECK(bins[0].mean == doctest::Approx(1.5));   // realization means 1 and 2
  CHECK(bins[0].stderr_ == doctest::Approx(0.5));
  CHECK(bins[1].mean == doctest::Approx(5.5));   // realization means 6 and 5

  const auto top = top_fraction_mean_queue(snaps, 0.25);
  CHECK(top.mean == doctest::Approx(8.0));
  CHECK(top.stderr_ == doctest::Approx(1.0));
}

TEST_CASE("growth slope") {
  SUBCASE("exact line") {
    const auto s = growth_slope(line(1000, 0.01, 0.5), {200, 1000});
    CHECK(s.slope == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(s.intercept == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(s.residual_se < 1e-9);
  }
  SUBCASE("constant series") {
    const auto s = growth_slope(std::vector<double>(1000, 3.0), {200, 1000});
    CHECK(s.slope == 0.0);
    CHECK(s.residual_se == 0.0);
  }
  SUBCASE("noise around a plateau stays below epsilon") {
    Rng rng(3);
    std::vector<double> s(1000);
    for (double& x : s) x = 2.0 + 0.1 * (rng.uniform01() - 0.5);
    CHECK(std::abs(growth_slope(s, {200, 1000}).slope) < 1e-4);
  }
  SUBCASE("window errors") {
    const auto s = line(300, 1.0, 0.0);
    CHECK_THROWS_AS(growth_slope(s, {0, 300}), ContractViolation);
    CHECK_THROWS_AS(growth_slope(s, {100, 301}), ContractViolation);
    CHECK_THROWS_AS(growth_slope(s, {200, 200}), ContractViolation);
    CHECK_THROWS_AS(growth_slope(s, {200, 240}), ContractViolation);
  }
}

TEST_CASE("bisection brackets the transition") {
  const PlanTemplate plan{0.03, Approach::kNormal, {}};
  const auto search = small_search();
  const auto r = find_beta_c(0.03, small_ensemble(), plan, search);
  CHECK(r.beta_hi - r.beta_lo <= search.tol);
  CHECK(r.beta_c == doctest::Approx((r.beta_lo + r.beta_hi) / 2));
  CHECK(r.slope_lo > search.epsilon);
  CHECK(r.slope_hi <= search.epsilon);
  CHECK(r.ensemble == 4);
  CHECK(r.slopes.size() >= 3);
  CHECK(r.slopes[0].beta == 0.0);
  CHECK(r.slopes[1].beta == 1.0);

  // Same seeds, same answer.
  const auto again = find_beta_c(0.03, small_ensemble(), plan, search);
  CHECK(again.beta_c == r.beta_c);
}

TEST_CASE("negligible traffic cannot be bracketed from below") {
  const PlanTemplate plan{0.0005, Approach::kNormal, {}};
  try {
    find_beta_c(0.0005, small_ensemble(), plan, small_search());
    FAIL("expected a bracket error");
  } catch (const BracketError& e) {
    CHECK(e.slope_lo() <= 1e-4);
  }
  const std::vector<double> lambdas{0.0005};
  const auto curve = beta_c_curve(lambdas, small_ensemble(), plan, small_search());
  REQUIRE(curve.size() == 1);
  CHECK(curve[0].beta_c == 0.0);
  CHECK(curve[0].free_at_zero);
}

TEST_CASE("an upper bound that is still congested is a bracket error") {
  const PlanTemplate plan{0.05, Approach::kNormal, {}};
  auto search = small_search();
  search.beta_hi = 0.001;
  CHECK_THROWS_AS(find_beta_c(0.05, small_ensemble(), plan, search), BracketError);
  search.beta_lo = 0.0005;
  const std::vector<double> lambdas{0.0005};
  CHECK_THROWS_AS(beta_c_curve(lambdas, small_ensemble(), plan, search), BracketError);
  CHECK_THROWS_AS(beta_c_curve({}, small_ensemble(), plan, small_search()),
                  ContractViolation);
}

TEST_CASE("threshold grows with the creation rate") {
  const PlanTemplate plan{0.0, Approach::kNormal, {}};
  const std::vector<double> lambdas{0.02, 0.04, 0.06};
  const auto curve = beta_c_curve(lambdas, small_ensemble(), plan, small_search());
  REQUIRE(curve.size() == 3);
  CHECK(curve[0].beta_c <= curve[1].beta_c);
  CHECK(curve[1].beta_c <= curve[2].beta_c);

  const auto fit = fit_beta_c_line(curve, 0.0, 1.0);
  CHECK(fit.points == 3);
  CHECK(fit.slope > 0.0);

  std::ostringstream phase, slopes;
  write_phase_csv(phase, curve);
  write_slope_table_csv(slopes, curve);
  CHECK(phase.str().rfind("lambda,beta_c,beta_lo,beta_hi,slope_lo,slope_hi,ensemble,tol\n0.02,", 0) == 0);
  CHECK(slopes.str().rfind("lambda,beta,slope\n0.02,0,", 0) == 0);
}

TEST_CASE("line fit needs two positive thresholds") {
  std::vector<PhaseResult> curve(3);
  curve[0].lambda = 0.001;
  curve[1].lambda = 0.01;
  curve[1].beta_c = 0.05;
  curve[2].lambda = 0.02;
  curve[2].beta_c = 0.12;
  const auto fit = fit_beta_c_line(curve, 0.0, 1.0);
  CHECK(fit.points == 2);
  CHECK(fit.slope == doctest::Approx(7.0));
  CHECK(fit.intercept == doctest::Approx(-0.02));
  CHECK_THROWS_AS(fit_beta_c_line(curve, 0.015, 1.0), ContractViolation);
}

TEST_CASE("n1 and n2 classify a run the same way") {
  // Normal approach at p = 1: hubs and the network as a whole congest together.
  const auto& ens = small_ensemble();
  const PlanTemplate plan{0.03, Approach::kNormal, {}};
  for (double beta : {0.0, 1.0}) {
    const auto means = run_ensemble(ens, plan, beta, 400, 1);
    const double s1 = growth_slope(means.n1, {100, 400}).slope;
    const double s2 = growth_slope(means.n2, {100, 400}).slope;
    CAPTURE(beta);
    CHECK((s1 > 1e-4) == (s2 > 1e-4));
  }
}

TEST_CASE("ensemble results do not depend on the worker count") {
  const PlanTemplate plan{0.03, Approach::kEfficient, {}};
  const auto one = run_ensemble(small_ensemble(), plan, 0.05, 200, 1);
  const auto three = run_ensemble(small_ensemble(), plan, 0.05, 200, 3);
  CHECK(one.n1 == three.n1);
  CHECK(one.n2 == three.n2);
}
