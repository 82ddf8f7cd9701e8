// Copyright (C) 2026 The iasec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "iasec/error.hpp"
#include "iasec/secrecy.hpp"

using namespace iasec;

namespace {

SecrecyModel model(double pa_db, double pk_db, double sigma2 = 16.0, int L = 16, double eps = 0.1) {
  return make_secrecy_model(make_config(12, 2, 4, 4, 9, 4, 2, L), sigma2, db_to_linear(pa_db),
                            {db_to_linear(pk_db)}, eps);
}

// Composite Simpson rule on [a, b].
template <typename F>
double simpson(F f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// E[exp(-s T)] for T ~ Gamma(shape, rate) by quadrature of the density.
double gamma_laplace_quadrature(int shape, double rate, double s) {
  const double mean = shape / rate;
  const double upper = mean + 60.0 * std::sqrt(static_cast<double>(shape)) / rate + 60.0 / rate;
  auto density = [&](double t) {
    if (t <= 0.0) return shape == 1 ? rate : 0.0;
    return std::exp(shape * std::log(rate) + (shape - 1) * std::log(t) - rate * t - std::lgamma(shape)) *
           std::exp(-s * t);
  };
  return simpson(density, 0.0, upper, 200000);
}

}  // namespace

TEST_CASE("db conversion and outage constant") {
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(db_to_linear(20.0) == doctest::Approx(100.0));
  CHECK(db_to_linear(-10.0) == doctest::Approx(0.1));
  const SecrecyModel m = model(20, 10);
  CHECK(m.c() == doctest::Approx(-std::log(1.0 - std::pow(0.9, 1.0 / 16.0))).epsilon(1e-14));
  CHECK(m.g(2) == doctest::Approx(100.0 * 2 / 10.0));
  CHECK(m.gamma_B() == doctest::Approx(1600.0));
  CHECK(m.K() == 4);
}

TEST_CASE("model validation") {
  const NetworkConfig c = make_config(12, 2, 4, 4, 9, 4, 2, 16);
  CHECK_THROWS_AS(make_secrecy_model(c, 0.0, 1.0, {1.0}, 0.1), ConfigError);
  CHECK_THROWS_AS(make_secrecy_model(c, 1.0, -1.0, {1.0}, 0.1), ConfigError);
  CHECK_THROWS_AS(make_secrecy_model(c, 1.0, 1.0, {1.0, 2.0}, 0.1), ConfigError);
  CHECK_THROWS_AS(make_secrecy_model(c, 1.0, 1.0, {1.0}, 1.0), ConfigError);
  CHECK_THROWS_AS(make_secrecy_model(c, 1.0, 1.0, {0.0}, 0.1), ConfigError);
  CHECK(make_secrecy_model(c, 1.0, 1.0, {1.0, 2.0, 3.0, 4.0}, 0.1).Pk[3] == 4.0);
  PowerProfile p;
  p.theta = 1.5;
  CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("eavesdropper statistics") {
  const SecrecyModel m = model(20, 10);
  const EveStatistics s = eve_statistics(m, 0.25);
  CHECK(s.lambda == doctest::Approx(1.0 / 25.0));
  CHECK(s.alpha_a == 4.0);
  CHECK(s.lambda_a == doctest::Approx(4.0 / 75.0));
  CHECK(s.lambda_k[1] == doctest::Approx(0.2));
  CHECK(std::isinf(eve_statistics(m, 1.0).lambda_a));
  CHECK_THROWS_AS(eve_statistics(m, 0.0), DomainError);
}

TEST_CASE("closed-form CCDF matches quadrature of the Laplace integral") {
  for (double theta : {0.2, 0.5, 0.9, 1.0})
    for (double r : {0.0, 0.01, 0.1, 0.5, 2.0, 8.0}) {
      const SecrecyModel m = model(10, 5);
      const EveStatistics st = eve_statistics(m, theta);
      // P(X > r (Y + sum Z + 1)) = exp(-lambda r) E[exp(-lambda r Y)] prod E[exp(-lambda r Z_k)].
      const double s = st.lambda * r;
      double expect = std::exp(-s);
      if (theta < 1.0) expect *= gamma_laplace_quadrature(m.da, st.lambda_a, s);
      for (int k = 0; k < m.K(); ++k) expect *= gamma_laplace_quadrature(m.dk[k], st.lambda_k[k], s);
      CHECK(eve_sinr_ccdf(m, theta, r) == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("outage grows with the secrecy rate") {
  const SecrecyModel m = model(20, 10);
  for (double theta : {0.1, 0.5, 1.0}) {
    double prev = -1.0;
    for (double rs = 0.0; rs <= 10.0; rs += 0.25) {
      const double eps = sop_closed_form(m, theta, 10.0, rs);
      CHECK(eps >= prev);
      CHECK(eps >= 0.0);
      CHECK(eps <= 1.0);
      prev = eps;
    }
    CHECK(sop_closed_form(m, theta, 10.0, 10.0) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(sop_closed_form(m, 0.5, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(sop_from_redundancy(m, 0.5, -0.1), DomainError);
}

TEST_CASE("outage across L independent eavesdroppers") {
  SecrecyModel m = model(15, 10);
  const double p1 = eve_sinr_ccdf(m, 0.4, 3.0);
  CHECK(sop_from_redundancy(m, 0.4, 2.0) == doctest::Approx(1.0 - std::pow(1.0 - p1, 16)).epsilon(1e-12));
  m.L = 1;
  CHECK(sop_from_redundancy(m, 0.4, 2.0) == doctest::Approx(p1).epsilon(1e-12));
}

TEST_CASE("w solves the outage-equality constraint") {
  const SecrecyModel m = model(20, 10);
  for (double theta = 0.0; theta <= 1.0; theta += 0.05) {
    const double w = solve_w(theta, m);
    double f = w / m.Pa + m.da * std::log1p((1.0 - theta) * w / m.da) - m.c();
    for (int k = 0; k < m.K(); ++k) f += m.dk[k] * std::log1p(w / m.g(k));
    CHECK(std::abs(f) < 1e-11);
    // Equivalent statement: the outage at redundancy log2(1 + theta w) equals eps_th.
    if (theta > 0.0)
      CHECK(sop_from_redundancy(m, theta, std::log2(1.0 + theta * w)) == doctest::Approx(0.1).epsilon(1e-9));
  }
  CHECK(positive_rate_threshold(m) == solve_w(0.0, m));
  CHECK_THROWS_AS(solve_w(1.5, m), DomainError);
}

TEST_CASE("derivatives match finite differences") {
  for (const SecrecyModel& m : {model(20, 10), model(40, 0), model(0, 20), model(10, 10, 1.0, 1, 0.3)}) {
    for (double theta = 0.02; theta < 0.99; theta += 0.03) {
      const double h = 1e-6;
      const double fd_w = (solve_w(theta + h, m) - solve_w(theta - h, m)) / (2 * h);
      const double w = solve_w(theta, m);
      CHECK(w_prime(theta, w, m) == doctest::Approx(fd_w).epsilon(1e-5));
      const double fd_rs = (rs_of_theta(theta + h, m) - rs_of_theta(theta - h, m)) / (2 * h);
      CHECK(rs_prime(theta, m) == doctest::Approx(fd_rs).epsilon(1e-5).scale(1e-3));
    }
    // Right limit at zero.
    const double h = 1e-5 / (1.0 + m.gamma_B());
    CHECK(rs_prime(0.0, m) == doctest::Approx(rs_of_theta(h, m) / h).epsilon(1e-4));
  }
}

TEST_CASE("structure in theta: monotone w, concave rate") {
  for (const SecrecyModel& m : {model(20, 10), model(60, 10), model(5, 30)}) {
    double prev_w = -1.0, prev_aw = 1e300, prev_ratio = -1e300, prev_d = 1e300, prev_rs = 0.0, prev_slope = 1e300;
    const int n = 200;
    for (int i = 1; i <= n; ++i) {
      const double theta = static_cast<double>(i) / n;
      const double w = solve_w(theta, m);
      const double ratio = w_prime(theta, w, m) / w;
      const double d = rs_prime(theta, m);
      const double rs = rs_of_theta(theta, m);
      CHECK(w > prev_w - 1e-9);
      CHECK((1.0 - theta) * w < prev_aw + 1e-9);
      CHECK(ratio > prev_ratio - 1e-9);
      CHECK(d < prev_d + 1e-9);
      if (i > 1) {
        const double slope = (rs - prev_rs) * n;
        CHECK(slope < prev_slope + 1e-9);
        prev_slope = slope;
      }
      prev_w = w;
      prev_aw = (1.0 - theta) * w;
      prev_ratio = ratio;
      prev_d = d;
      prev_rs = rs;
    }
  }
}

TEST_CASE("optimal power split matches a grid search") {
  for (const SecrecyModel& m : {model(20, 10), model(60, 10), model(30, 30), model(0, 20), model(10, 0, 0.05)}) {
    const SrmSolution s = srm_solve(m);
    double best_theta = 0.0, best_rs = 0.0;
    for (int i = 0; i <= 10000; ++i) {
      const double theta = i / 10000.0;
      const double rs = std::max(0.0, rs_of_theta(theta, m));
      if (rs > best_rs) {
        best_rs = rs;
        best_theta = theta;
      }
    }
    CHECK(std::abs(s.theta_star - best_theta) < 1e-3);
    CHECK(s.Rs_star >= best_rs - 1e-10);
    CHECK(s.w_star == doctest::Approx(solve_w(s.theta_star, m)));
  }
}

TEST_CASE("the three branches") {
  const SrmSolution suspend = srm_solve(model(0, 20, 0.01));
  CHECK(suspend.branch == SrmBranch::kSuspend);
  CHECK(suspend.theta_star == 0.0);
  CHECK(suspend.Rs_star == 0.0);
  CHECK(suspend.rs_prime_at_0 <= 0.0);

  const SrmSolution full = srm_solve(model(10, 30));
  CHECK(full.branch == SrmBranch::kFullPower);
  CHECK(full.theta_star == 1.0);
  CHECK(full.rs_prime_at_1 >= 0.0);

  const SrmSolution interior = srm_solve(model(40, 10));
  CHECK(interior.branch == SrmBranch::kInterior);
  CHECK(interior.theta_star > 0.0);
  CHECK(interior.theta_star < 1.0);
  CHECK(std::abs(rs_prime(interior.theta_star, model(40, 10))) < 1e-9);
  CHECK(to_string(SrmBranch::kInterior) == "interior");
}

TEST_CASE("positive rate iff gamma_B exceeds w(0+)") {
  for (double sigma2 : {0.01, 0.1, 1.0, 10.0}) {
    const SecrecyModel m = model(0, 10, sigma2);
    const bool positive = m.gamma_B() > positive_rate_threshold(m);
    CHECK((srm_solve(m).Rs_star > 0.0) == positive);
  }
}

TEST_CASE("high-SNR power split") {
  CHECK(theta_high_snr(4, 16, 0.1) == doctest::Approx(0.2397684055703633).epsilon(1e-12));
  CHECK(theta_high_snr(1, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
  const SrmSolution s = srm_solve(model(80, 10));
  CHECK(std::abs(s.theta_star - theta_high_snr(4, 16, 0.1)) < 2e-3);
  CHECK_THROWS_AS(theta_high_snr(0, 16, 0.1), DomainError);
}

TEST_CASE("optimal split dominates the isotropic split") {
  for (double pa = 0.0; pa <= 40.0; pa += 2.0) {
    const SecrecyModel m = model(pa, 10);
    CHECK(isotropic_theta(m) == doctest::Approx(0.2));
    const double iso = std::max(0.0, rs_of_theta(isotropic_theta(m), m));
    const SrmSolution s = srm_solve(m);
    CHECK(s.Rs_star >= iso - 1e-12);
    CHECK(s.Rs_star < std::log2(1.0 + m.gamma_B()));
  }
}

TEST_CASE("cancelled designs are refused") {
  const NetworkConfig c = make_config(12, 2, 4, 4, 9, 4, 2, 16);
  const ChannelSet ch = generate_channels(c, 0);
  SolverSettings s;
  s.convergence_tol = 1e-12;
  CHECK_THROWS_AS(main_channel_gain(ch, lm_ia_solve(ch, c, s)), DomainError);
  const TransceiverSolution meb = meb_ia_solve(ch, c, s);
  CHECK(main_channel_gain(ch, meb) == doctest::Approx(linalg::top_singular_pair(ch.Hba).value *
                                                      linalg::top_singular_pair(ch.Hba).value).epsilon(1e-10));
}

TEST_CASE("eavesdropper SINR decomposition") {
  const NetworkConfig c = make_config(12, 2, 3, 4, 9, 4, 2, 16);
  const ChannelSet ch = generate_channels(c, 2);
  const TransceiverSolution sol = meb_ia_solve(ch, c);
  const SecrecyModel m = make_secrecy_model(c, 16.0, 100.0, {10.0}, 0.1);
  RandomStream rng(3);
  const EveChannels eve = draw_eve_channels(rng, sol);
  const EveTerms t = eve_terms(m, 0.3, eve, sol);
  CHECK(t.X == doctest::Approx(0.3 * 100.0 * std::norm(sol.va.dot(eve.h_a))));
  CHECK(t.Y == doctest::Approx(0.7 * 100.0 / 3.0 * (eve.h_a.adjoint() * sol.Wa).squaredNorm()));
  double z = 0.0;
  for (int k = 0; k < 4; ++k) z += 10.0 / 2.0 * (eve.h_k[k].adjoint() * sol.Vk[k]).squaredNorm();
  CHECK(t.Z.size() == 4);
  CHECK(t.sinr() == doctest::Approx(t.X / (t.Y + z + 1.0)));
  CHECK(sinr_eve_sample(m, 0.3, eve, sol) == t.sinr());
  CHECK(sinr_eve_sample(m, 0.0, eve, sol) == 0.0);
  EveChannels wrong = eve;
  wrong.h_k.pop_back();
  CHECK_THROWS_AS(eve_terms(m, 0.3, wrong, sol), ShapeError);
}
