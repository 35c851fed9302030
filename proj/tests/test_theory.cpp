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

#include "netjam/error.hpp"
#include "netjam/netgen.hpp"
#include "netjam/routing.hpp"
#include "netjam/theory.hpp"
#include "netjam/traffic.hpp"

using namespace netjam;

TEST_CASE("degree exponent") {
  CHECK(gamma_of_p(0.0, 3) == 3.0);
  CHECK(gamma_of_p(0.0, 1) == 3.0);
  CHECK(gamma_of_p(0.5, 3) == doctest::Approx(3.0 + 1.0 / 3.0));
  CHECK(gamma_of_p(0.9, 1) == doctest::Approx(12.0));
  CHECK_THROWS_AS(gamma_of_p(1.0, 3), DomainError);
  CHECK_THROWS_AS(gamma_of_p(-0.1, 3), ConfigError);
  CHECK_THROWS_AS(gamma_of_p(0.5, 0), ConfigError);
}

TEST_CASE("top degree estimate") {
  CHECK(kmax_estimate(1000, 3, 3) == doctest::Approx(94.868).epsilon(1e-4));
  CHECK(kmax_estimate(1e4, 3, 3) == doctest::Approx(300.0));
  CHECK(kmax_estimate(1, 4, 2.5) == doctest::Approx(4.0));
  CHECK_THROWS_AS(kmax_estimate(1000, 3, 1.0), DomainError);
}

TEST_CASE("alpha1 calibration") {
  // Random limit: the published figures are mutually consistent.
  const auto rnd = calibrate_alpha1(0.027, 0.012, 3.82, 25);
  CHECK(rnd.alpha1 == doctest::Approx(0.6842).epsilon(1e-3));
  CHECK(rnd.warning.empty());

  // Preferential limit: the published 0.4522 corresponds to h = 3.2; with
  // h = 3.32 the same inversion gives 0.469.
  const auto pref = calibrate_alpha1(0.059, 0.01, 3.32, 85);
  CHECK(pref.alpha1 == doctest::Approx(0.0332 / (0.059 + 1.0 / 85)));
  CHECK(pref.alpha1 == doctest::Approx(0.4522).epsilon(0.05));
  CHECK(calibrate_alpha1(0.059, 0.01, 3.2, 85).alpha1 ==
        doctest::Approx(0.4522).epsilon(1e-3));

  CHECK_FALSE(calibrate_alpha1(0.0, 0.5, 3.0, 10).warning.empty());
  CHECK_THROWS_AS(calibrate_alpha1(-0.2, 0.01, 3.3, 10), ContractViolation);
}

TEST_CASE("predicted threshold") {
  CHECK(beta_c_predicted(0.01, 3.32, 0.4522, 85) == doctest::Approx(0.059).epsilon(0.05));
  CHECK(beta_c_predicted(0.001, 3.32, 0.4522, 85) == 0.0);
  CHECK(beta_c_line(0.001, 3.32, 0.4522, 85) < 0.0);
  const double slope = (beta_c_line(0.02, 3.32, 0.4522, 85) -
                        beta_c_line(0.01, 3.32, 0.4522, 85)) / 0.01;
  CHECK(slope == doctest::Approx(7.34).epsilon(1e-3));
  CHECK_THROWS_AS(beta_c_predicted(0.01, 3.3, 0.0, 85), ContractViolation);
  CHECK_THROWS_AS(beta_c_predicted(0.01, 3.3, 0.5, 0.5), ContractViolation);
}

TEST_CASE("calibration and prediction are inverse") {
  for (double beta_c : {0.0, 0.01, 0.059, 0.2, 0.35}) {
    for (double lambda : {0.002, 0.01, 0.05}) {
      for (double h : {2.5, 3.32, 4.1}) {
        for (double k : {10.0, 25.0, 85.0, 300.0}) {
          const double a = calibrate_alpha1(beta_c, lambda, h, k).alpha1;
          CHECK(beta_c_predicted(lambda, h, a, k) ==
                doctest::Approx(beta_c).epsilon(1e-12).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("clamped line is non-decreasing with its kink at lambda_min") {
  const double lmin = lambda_min(0.4522, 3.32, 85);
  double prev = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double lambda = i * 1e-4;
    const double b = beta_c_predicted(lambda, 3.32, 0.4522, 85);
    CHECK(b >= prev);
    if (lambda <= lmin) CHECK(b == 0.0);
    else CHECK(b > 0.0);
    prev = b;
  }
  CHECK(std::abs(beta_c_line(lmin, 3.32, 0.4522, 85)) < 1e-15);
}

TEST_CASE("minimum creation rate") {
  CHECK(lambda_min(0.4522, 3.32, 85) == doctest::Approx(0.0016).epsilon(0.01));
  CHECK(lambda_min(0.6842, 3.82, 25) == doctest::Approx(0.0072).epsilon(0.01));
  CHECK(lambda_min(1e-300, 3.0, 10) == doctest::Approx(0.0));
}

TEST_CASE("balance census in free flow") {
  const FitWindow window{200, 600};
  SUBCASE("zero traffic") {
    const Graph g = generate_network({200, 3, 0.0, 1});
    const auto d = compute_distances(g);
    const auto plan = RatePlan::make(g, 0.0, 0.1, Approach::kNormal, {});
    const auto ts = run(g, d, plan, {600, {}}, 1);
    const auto r = balance_check(ts, 3.0, 3, 0.0, window);
    CHECK(r.zero_traffic);
  }
  struct Case { double p, lambda; };
  for (Case c : {Case{0.0, 0.01}, Case{1.0, 0.005}}) {
    CAPTURE(c.p);
    const Graph g = generate_network({1000, 3, c.p, 17});
    const auto d = compute_distances(g);
    const double h = mean_path_length(g, d);
    const auto plan = RatePlan::make(g, c.lambda, 0.1, Approach::kNormal, {});
    const auto ts = run(g, d, plan, {600, {}}, 5);
    const auto r = balance_check(ts, h, 3, c.lambda, window);
    CHECK_FALSE(r.zero_traffic);
    CHECK(r.predicted == doctest::Approx(h * 2 * 3 * c.lambda * 1000));
    CHECK(r.residual < 0.15);
  }
  SUBCASE("congested input is refused") {
    const Graph g = generate_network({1000, 3, 0.0, 17});
    const auto d = compute_distances(g);
    const auto plan = RatePlan::make(g, 0.02, 0.0, Approach::kNormal, {});
    const auto ts = run(g, d, plan, {600, {}}, 5);
    CHECK_THROWS_AS(balance_check(ts, 3.5, 3, 0.02, window), ContractViolation);
  }
}

TEST_CASE("theory exports") {
  std::ostringstream a, b;
  const TheoryParams row{0.0, 3, 1000, 3.32, 85, 0.4522};
  write_theory_csv(a, std::span(&row, 1));
  CHECK(a.str().rfind("p,h,k_max,alpha1,lambda_min,slope_pred\n0,3.32,85,0.4522,", 0) == 0);
  const PredictionRow pr{0.01, 0.059, 0.06, 0.06 / 0.059 - 1};
  write_prediction_csv(b, std::span(&pr, 1));
  CHECK(b.str().rfind("lambda,beta_c_measured,beta_c_predicted,rel_err\n0.01,0.059,0.06,", 0) == 0);
}
