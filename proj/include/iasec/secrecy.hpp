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
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iasec/alignment.hpp"

namespace iasec {

// Powers are linear, with unit receiver noise.
double db_to_linear(double db);

struct PowerProfile {
  double Pa = 1.0;
  std::vector<double> Pk;
  double theta = 0.5;  // share of Pa on the confidential signal

  void validate() const;
};

/// Everything the secrecy analysis needs that does not depend on theta: the
/// main-channel gain sigma^2 of an aligned max-eigenmode design, powers, stream
/// counts (the gamma shapes), eavesdropper count and the outage target.
struct SecrecyModel {
  double sigma2 = 1.0;
  double Pa = 1.0;
  std::vector<double> Pk;
  int da = 1;
  std::vector<int> dk;
  int L = 1;
  double eps_th = 0.1;

  int K() const { return static_cast<int>(dk.size()); }
  double gamma_B() const { return Pa * sigma2; }
  // g_k = Pa * dk / Pk
  double g(int k) const;
  // -ln(1 - (1 - eps_th)^(1/L))
  double c() const;

  // Throws ConfigError.
  void validate() const;
};

// Builds the model from a network layout: shapes from config, powers and
// outage target from the arguments.
SecrecyModel make_secrecy_model(const NetworkConfig& config, double sigma2, double Pa,
                                const std::vector<double>& Pk, double eps_th);

// sigma^2 = |ub^H Hba va|^2 of an aligned solution. Throws DomainError if the
// confidential signal is cancelled.
double main_channel_gain(const ChannelSet& channels, const TransceiverSolution& sol);

/// Rates of the eavesdropper SINR decomposition at a given theta:
/// X ~ Exp(lambda), Y ~ Gamma(alpha_a, lambda_a), Z_k ~ Gamma(alpha_k, lambda_k).
/// lambda_a is +inf at theta = 1 (no AN power).
struct EveStatistics {
  double lambda = 0.0;
  double alpha_a = 0.0;
  double lambda_a = 0.0;
  std::vector<double> alpha_k;
  std::vector<double> lambda_k;
};

EveStatistics eve_statistics(const SecrecyModel& model, double theta);

/// Single-antenna eavesdropper channels toward Alice (Ma) and each Tx k (Mk).
struct EveChannels {
  CVector h_a;
  std::vector<CVector> h_k;
};

EveChannels draw_eve_channels(RandomStream& rng, const TransceiverSolution& sol);

struct EveTerms {
  double X = 0.0;              // confidential power
  double Y = 0.0;              // AN power
  std::vector<double> Z;       // per-pair interference power
  double sinr() const;         // X / (Y + sum Z + 1)
};

EveTerms eve_terms(const SecrecyModel& model, double theta, const EveChannels& eve,
                   const TransceiverSolution& filters);

double sinr_eve_sample(const SecrecyModel& model, double theta, const EveChannels& eve,
                       const TransceiverSolution& filters);

// Closed-form CCDF of one eavesdropper's SINR at r >= 0.
double eve_sinr_ccdf(const SecrecyModel& model, double theta, double r);

// Outage probability for redundancy Rb - Rs >= 0 (bits per channel use).
double sop_from_redundancy(const SecrecyModel& model, double theta, double redundancy);

// Throws DomainError if Rs > Rb or theta is outside (0, 1].
double sop_closed_form(const SecrecyModel& model, double theta, double Rb, double Rs);

struct SopEstimate {
  double eps = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

struct MonteCarloOptions {
  int workers = 0;          // 0: hardware concurrency
  bool all_eves = false;    // simulate all L eavesdroppers per sample
};

// Estimate of the outage probability by drawing eavesdropper channels
// and evaluating the exact SINR against the given filters. The default path
// draws one eavesdropper per sample and uses independence across the L of
// them; `all_eves` draws all L and takes the max. Throws DomainError for
// n_samples < 100.
SopEstimate sop_monte_carlo(const SecrecyModel& model, const TransceiverSolution& filters,
                            double theta, double redundancy, std::int64_t n_samples,
                            std::uint64_t seed, const MonteCarloOptions& options = {});

/// Root w(theta) > 0 of
///   c = w / Pa + da ln(1 + (1 - theta) w / da) + sum_k dk ln(1 + w / g_k),
/// the outage-equality constraint in the variable w = mu / theta. Valid for
/// theta in [0, 1]; theta = 0 gives the positive-rate threshold w(0+).
double solve_w(double theta, const SecrecyModel& model);

// dw/dtheta by implicit differentiation of the constraint.
double w_prime(double theta, double w, const SecrecyModel& model);

// log2((1 + theta gamma_B) / (1 + theta w(theta))), unclamped. 0 at theta = 0.
double rs_of_theta(double theta, const SecrecyModel& model);

// d Rs / d theta; at theta = 0 the right limit (gamma_B - w(0+)) / ln 2.
double rs_prime(double theta, const SecrecyModel& model);

// w(0+): a positive secrecy rate is achievable iff gamma_B exceeds it.
double positive_rate_threshold(const SecrecyModel& model);

enum class SrmBranch { kFullPower, kSuspend, kInterior };

std::string to_string(SrmBranch branch);

struct SrmSolution {
  double theta_star = 0.0;
  double Rs_star = 0.0;  // clamped at zero
  SrmBranch branch = SrmBranch::kSuspend;
  double w_star = 0.0;
  double rs_prime_at_1 = 0.0;
  double rs_prime_at_0 = 0.0;
};

// Maximizes Rs(theta) over [0, 1] subject to outage = eps_th, using strict
// concavity: full power if Rs'(1) >= 0, suspend if Rs'(0+) <= 0, otherwise
// bisection on Rs'.
SrmSolution srm_solve(const SecrecyModel& model);

// Large-Pa limit of the optimal power split; depends on (da, L, eps_th) only.
double theta_high_snr(int alpha_a, int L, double eps_th);

// theta = 1 / (1 + da): equal power per transmitted dimension.
double isotropic_theta(const SecrecyModel& model);

}  // namespace iasec
