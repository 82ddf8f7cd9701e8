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

#include "iasec/secrecy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "iasec/error.hpp"

namespace iasec {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

void PowerProfile::validate() const {
  if (!(Pa > 0.0)) throw ConfigError("Pa must be positive");
  for (double p : Pk)
    if (!(p > 0.0)) throw ConfigError("every Pk must be positive");
  if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in [0, 1]");
}

double SecrecyModel::g(int k) const {
  const auto i = static_cast<std::size_t>(k);
  return Pa * dk[i] / Pk[i];
}

double SecrecyModel::c() const {
  // 1 - (1 - eps)^(1/L), evaluated without cancellation.
  const double per_eve = -std::expm1(std::log1p(-eps_th) / L);
  return -std::log(per_eve);
}

void SecrecyModel::validate() const {
  if (!(sigma2 > 0.0)) throw ConfigError("sigma2 must be positive");
  if (!(Pa > 0.0)) throw ConfigError("Pa must be positive");
  if (Pk.size() != dk.size())
    throw ConfigError("Pk has " + std::to_string(Pk.size()) + " entries for " + std::to_string(dk.size()) + " pairs");
  for (double p : Pk)
    if (!(p > 0.0)) throw ConfigError("every Pk must be positive");
  if (da < 1) throw ConfigError("da must be >= 1");
  for (int d : dk)
    if (d < 1) throw ConfigError("every dk must be >= 1");
  if (L < 1) throw ConfigError("L must be >= 1");
  if (!(eps_th > 0.0 && eps_th < 1.0)) throw ConfigError("eps_th must lie in (0, 1)");
}

SecrecyModel make_secrecy_model(const NetworkConfig& config, double sigma2, double Pa,
                                const std::vector<double>& Pk, double eps_th) {
  SecrecyModel m;
  m.sigma2 = sigma2;
  m.Pa = Pa;
  m.da = config.da;
  m.L = config.L;
  m.eps_th = eps_th;
  for (const auto& p : config.pairs) m.dk.push_back(p.d);
  if (Pk.size() == 1)
    m.Pk.assign(m.dk.size(), Pk.front());
  else
    m.Pk = Pk;
  m.validate();
  return m;
}

double main_channel_gain(const ChannelSet& channels, const TransceiverSolution& sol) {
  const CancellationCheck check = detect_cancellation(channels, sol);
  if (check.cancelled || sol.va_cancelled) {
    std::ostringstream msg;
    msg << "confidential signal is cancelled (|ub^H Hba va|^2 = " << check.gain
        << "); the secrecy analysis needs a non-cancelled design";
    throw DomainError(msg.str());
  }
  return check.gain;
}

EveStatistics eve_statistics(const SecrecyModel& model, double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("theta must lie in (0, 1]");
  EveStatistics s;
  s.lambda = 1.0 / (theta * model.Pa);
  s.alpha_a = model.da;
  s.lambda_a = theta == 1.0 ? std::numeric_limits<double>::infinity()
                            : model.da / ((1.0 - theta) * model.Pa);
  for (int k = 0; k < model.K(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    s.alpha_k.push_back(model.dk[i]);
    s.lambda_k.push_back(model.dk[i] / model.Pk[i]);
  }
  return s;
}

double EveTerms::sinr() const {
  double t = Y + 1.0;
  for (double z : Z) t += z;
  return X / t;
}

EveChannels draw_eve_channels(RandomStream& rng, const TransceiverSolution& sol) {
  EveChannels e;
  e.h_a = rng.complex_normal(sol.Wa.rows());
  for (const auto& v : sol.Vk) e.h_k.push_back(rng.complex_normal(v.rows()));
  return e;
}

EveTerms eve_terms(const SecrecyModel& model, double theta, const EveChannels& eve,
                   const TransceiverSolution& filters) {
  if (eve.h_k.size() != filters.Vk.size() || static_cast<int>(filters.Vk.size()) != model.K())
    throw ShapeError("eavesdropper channels do not match the number of pairs");
  EveTerms t;
  t.X = theta * model.Pa * std::norm(eve.h_a.dot(filters.va));
  t.Y = (1.0 - theta) * model.Pa / model.da * (filters.Wa.adjoint() * eve.h_a).squaredNorm();
  for (int k = 0; k < model.K(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    t.Z.push_back(model.Pk[i] / model.dk[i] * (filters.Vk[i].adjoint() * eve.h_k[i]).squaredNorm());
  }
  return t;
}

double sinr_eve_sample(const SecrecyModel& model, double theta, const EveChannels& eve,
                       const TransceiverSolution& filters) {
  if (theta == 0.0) return 0.0;
  return eve_terms(model, theta, eve, filters).sinr();
}

double eve_sinr_ccdf(const SecrecyModel& model, double theta, double r) {
  if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("theta must lie in (0, 1]");
  if (!(r >= 0.0)) throw DomainError("CCDF argument must be nonnegative");
  if (std::isinf(r)) return 0.0;
  // Laplace-transform form: exp(-lambda r) prod (lambda_i / (lambda_i + lambda r))^alpha_i,
  // with each ratio written as 1 / (1 + lambda r / lambda_i).
  const double lr = r / (theta * model.Pa);
  double log_ccdf = -lr;
  log_ccdf -= model.da * std::log1p(r * (1.0 - theta) / (theta * model.da));
  for (int k = 0; k < model.K(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    log_ccdf -= model.dk[i] * std::log1p(lr * model.Pk[i] / model.dk[i]);
  }
  return std::exp(log_ccdf);
}

double sop_from_redundancy(const SecrecyModel& model, double theta, double redundancy) {
  if (!(redundancy >= 0.0))
    throw DomainError("redundancy Rb - Rs must be nonnegative (Rs > Rb leaves no secrecy margin)");
  const double mu = std::expm1(redundancy * std::numbers::ln2);
  const double ccdf = eve_sinr_ccdf(model, theta, mu);
  if (ccdf >= 1.0) return 1.0;
  return -std::expm1(model.L * std::log1p(-ccdf));
}

double sop_closed_form(const SecrecyModel& model, double theta, double Rb, double Rs) {
  if (Rs > Rb) throw DomainError("Rs > Rb: negative redundancy");
  return sop_from_redundancy(model, theta, Rb - Rs);
}

namespace {

// Right-hand side of the outage-equality constraint minus c; strictly increasing in w.
double w_residual(double w, double theta, const SecrecyModel& m, double c) {
  double f = w / m.Pa + m.da * std::log1p((1.0 - theta) * w / m.da) - c;
  for (int k = 0; k < m.K(); ++k) f += m.dk[static_cast<std::size_t>(k)] * std::log1p(w / m.g(k));
  return f;
}

}  // namespace

double solve_w(double theta, const SecrecyModel& model) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("theta must lie in [0, 1]");
  const double c = model.c();
  if (!(c > 0.0)) throw NumericError("outage constant c must be positive");

  double lo = 0.0;
  double hi = c * model.Pa;  // the linear term alone already reaches c here
  int expansions = 0;
  while (w_residual(hi, theta, model, c) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++expansions > 200 || !std::isfinite(hi)) {
      std::ostringstream msg;
      msg << "solve_w: cannot bracket root (theta=" << theta << ", c=" << c << ", Pa=" << model.Pa << ")";
      throw NumericError(msg.str());
    }
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (w_residual(mid, theta, model, c) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double flo = w_residual(lo, theta, model, c);
  const double fhi = w_residual(hi, theta, model, c);
  const double w = std::abs(flo) <= std::abs(fhi) ? lo : hi;
  const double residual = std::min(std::abs(flo), std::abs(fhi));
  if (residual > 1e-12 * c) {
    std::ostringstream msg;
    msg << "solve_w: residual " << residual << " exceeds tolerance (theta=" << theta << ", w=" << w << ")";
    throw NumericError(msg.str());
  }
  return w;
}

double w_prime(double theta, double w, const SecrecyModel& model) {
  const double a = model.da;
  const double denom = a + (1.0 - theta) * w;
  double bracket = 1.0 / model.Pa + (1.0 - theta) * a / denom;
  for (int k = 0; k < model.K(); ++k) bracket += model.dk[static_cast<std::size_t>(k)] / (model.g(k) + w);
  return a * w / denom / bracket;
}

double rs_of_theta(double theta, const SecrecyModel& model) {
  if (theta == 0.0) return 0.0;
  const double w = solve_w(theta, model);
  return (std::log1p(theta * model.gamma_B()) - std::log1p(theta * w)) / std::numbers::ln2;
}

double rs_prime(double theta, const SecrecyModel& model) {
  const double gB = model.gamma_B();
  if (theta == 0.0) return (gB - solve_w(0.0, model)) / std::numbers::ln2;
  const double w = solve_w(theta, model);
  const double wp = w_prime(theta, w, model);
  return (gB / (1.0 + theta * gB) - (w + theta * wp) / (1.0 + theta * w)) / std::numbers::ln2;
}

double positive_rate_threshold(const SecrecyModel& model) { return solve_w(0.0, model); }

std::string to_string(SrmBranch branch) {
  switch (branch) {
    case SrmBranch::kFullPower: return "full_power";
    case SrmBranch::kSuspend: return "suspend";
    case SrmBranch::kInterior: return "interior";
  }
  return "unknown";
}

SrmSolution srm_solve(const SecrecyModel& model) {
  model.validate();
  SrmSolution s;
  s.rs_prime_at_1 = rs_prime(1.0, model);
  s.rs_prime_at_0 = rs_prime(0.0, model);
  if (s.rs_prime_at_1 >= 0.0) {
    s.branch = SrmBranch::kFullPower;
    s.theta_star = 1.0;
  } else if (s.rs_prime_at_0 <= 0.0) {
    s.branch = SrmBranch::kSuspend;
    s.theta_star = 0.0;
  } else {
    s.branch = SrmBranch::kInterior;
    // Rs' is strictly decreasing, positive at 0+ and negative at 1.
    double lo = 0.0, hi = 1.0;
    double best = 0.5, best_abs = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double d = rs_prime(mid, model);
      if (std::abs(d) < best_abs) {
        best_abs = std::abs(d);
        best = mid;
      }
      if (d > 0.0)
        lo = mid;
      else
        hi = mid;
      if (best_abs < 1e-13) break;
    }
    s.theta_star = best;
  }
  s.w_star = solve_w(s.theta_star, model);
  s.Rs_star = std::max(0.0, rs_of_theta(s.theta_star, model));
  return s;
}

double theta_high_snr(int alpha_a, int L, double eps_th) {
  if (alpha_a < 1 || L < 1 || !(eps_th > 0.0 && eps_th < 1.0))
    throw DomainError("theta_high_snr needs alpha_a >= 1, L >= 1, eps_th in (0, 1)");
  const double a = alpha_a;
  const double per_eve = -std::expm1(std::log1p(-eps_th) / L);
  const double bracket = std::pow(per_eve, -1.0 / a);
  return 1.0 / (1.0 + std::sqrt(a * bracket - a));
}

double isotropic_theta(const SecrecyModel& model) { return 1.0 / (1.0 + model.da); }

}  // namespace iasec
