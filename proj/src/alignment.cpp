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

#include "iasec/alignment.hpp"

#include <cmath>
#include <limits>

#include "iasec/error.hpp"

namespace iasec {

std::string to_string(Scheme scheme) {
  return scheme == Scheme::kLeakageMin ? "lm" : "meb";
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "lm" || name == "LM") return Scheme::kLeakageMin;
  if (name == "meb" || name == "MEB") return Scheme::kMaxEigenmode;
  throw ConfigError("unknown scheme '" + name + "' (expected lm or meb)");
}

void SolverSettings::validate() const {
  if (max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
  if (!(convergence_tol > 0.0)) throw ConfigError("convergence_tol must be > 0");
  if (!(feasibility_tol > 0.0)) throw ConfigError("feasibility_tol must be > 0");
  if (restarts < 1) throw ConfigError("restarts must be >= 1");
}

void check_solution_shapes(const ChannelSet& ch, const TransceiverSolution& sol) {
  const Eigen::Index Ma = ch.Hba.cols();
  const auto K = static_cast<std::size_t>(ch.K());
  auto fail = [](const std::string& what) { throw ShapeError("solution shape mismatch: " + what); };
  if (sol.ub.size() != ch.Hba.rows()) fail("ub length");
  if (sol.Wa.rows() != Ma) fail("Wa rows");
  if (sol.va.size() != 0 && sol.va.size() != Ma) fail("va length");
  if (sol.Uk.size() != K) fail("number of Uk");
  if (!sol.Vk.empty() && sol.Vk.size() != K) fail("number of Vk");
  for (std::size_t k = 0; k < K; ++k) {
    if (sol.Uk[k].rows() != ch.Hka[k].rows()) fail("U" + std::to_string(k + 1) + " rows");
    if (!sol.Vk.empty() && sol.Vk[k].rows() != ch.Hbk[k].cols()) fail("V" + std::to_string(k + 1) + " rows");
  }
}

AlignmentMatrices build_alignment_matrices(const ChannelSet& channels, const TransceiverSolution& sol) {
  return build_alignment_matrices(channels, sol.ub, sol.Uk);
}

namespace {

double lm_objective(const ChannelSet& ch, const CMatrix& Wa, const CVector& ub,
                    const std::vector<CMatrix>& Uk) {
  double total = (ub.adjoint() * ch.Hba * Wa).squaredNorm();
  for (std::size_t k = 0; k < Uk.size(); ++k) total += (Uk[k].adjoint() * ch.Hka[k] * Wa).squaredNorm();
  return total;
}

double meb_objective(const ChannelSet& ch, const CMatrix& Wa, const CVector& va, const CVector& ub,
                     const std::vector<CMatrix>& Uk) {
  double total = lm_objective(ch, Wa, ub, Uk);
  for (std::size_t k = 0; k < Uk.size(); ++k) total += (Uk[k].adjoint() * ch.Hka[k] * va).squaredNorm();
  return total;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

// Random unit ub (LM only) and orthonormal Uk.
void initialize_receivers(const ChannelSet& ch, const NetworkConfig& config, RandomStream& rng,
                          TransceiverSolution& sol, bool random_ub) {
  if (random_ub) sol.ub = linalg::random_orthonormal(rng, ch.Hba.rows(), 1).col(0);
  sol.Uk.clear();
  for (int k = 0; k < config.K(); ++k) {
    const auto& p = config.pairs[static_cast<std::size_t>(k)];
    sol.Uk.push_back(linalg::random_orthonormal(rng, p.N, p.d));
  }
}

// Transmit zero-forcing: Vk spans dk directions of null(Mk).
void zero_force_pairs(const ChannelSet& ch, const NetworkConfig& config, TransceiverSolution& sol) {
  const AlignmentMatrices am = build_alignment_matrices(ch, sol);
  sol.Vk.clear();
  for (int k = 0; k < config.K(); ++k) {
    const int dk = config.pairs[static_cast<std::size_t>(k)].d;
    const CMatrix N = linalg::null_space(am.Mk[static_cast<std::size_t>(k)]);
    if (N.cols() < dk)
      throw InfeasibleError("null(M" + std::to_string(k + 1) + ") has dimension " + std::to_string(N.cols()) +
                            " < d" + std::to_string(k + 1) + "=" + std::to_string(dk));
    sol.Vk.push_back(N.leftCols(dk));
  }
}

void record_singular_values(const ChannelSet& ch, TransceiverSolution& sol) {
  const AlignmentMatrices am = build_alignment_matrices(ch, sol.ub, sol.Uk);
  sol.singular_value_trace.push_back(to_std(linalg::singular_values(am.M)));
}

bool stalled(const std::vector<double>& trace, double tol) {
  const std::size_t n = trace.size();
  return n >= 2 && std::abs(trace[n - 1] - trace[n - 2]) < tol;
}

TransceiverSolution lm_single_run(const ChannelSet& ch, const NetworkConfig& config,
                                  const SolverSettings& settings, int restart) {
  TransceiverSolution sol;
  sol.scheme = Scheme::kLeakageMin;
  sol.restart_index = restart;
  sol.seed = derive_seed(settings.seed, StreamTag::kSolverInit, static_cast<std::uint64_t>(restart));
  RandomStream rng(sol.seed);
  initialize_receivers(ch, config, rng, sol, true);

  const int da = config.da;
  const int s_d = config.total_streams();

  if (config.Ma >= 1 + da + s_d) {
    const AlignmentMatrices am = build_alignment_matrices(ch, sol.ub, sol.Uk);
    const CMatrix N = linalg::null_space(am.M);
    if (N.cols() < da)
      throw InfeasibleError("null(M) has dimension " + std::to_string(N.cols()) + " < da=" + std::to_string(da));
    sol.Wa = N.leftCols(da);
    sol.zero_forcing = true;
    sol.converged = true;
    sol.iterations = 1;
    sol.leakage_trace.push_back(lm_objective(ch, sol.Wa, sol.ub, sol.Uk));
    if (settings.record_history) {
      sol.gain_trace.push_back(refine_va(ch, sol).gain);
      record_singular_values(ch, sol);
    }
  } else {
    for (int it = 1; it <= settings.max_iterations; ++it) {
      const AlignmentMatrices am = build_alignment_matrices(ch, sol.ub, sol.Uk);
      auto wa = linalg::least_eigenvectors(am.M.adjoint() * am.M, da);
      sol.Wa = std::move(wa.vectors);
      sol.degenerate = sol.degenerate || wa.degenerate;

      const CMatrix gb = ch.Hba * sol.Wa;
      auto ub = linalg::least_eigenvectors(gb * gb.adjoint(), 1);
      sol.ub = ub.vectors.col(0);
      sol.degenerate = sol.degenerate || ub.degenerate;
      for (int k = 0; k < config.K(); ++k) {
        const auto ks = static_cast<std::size_t>(k);
        const CMatrix gk = ch.Hka[ks] * sol.Wa;
        auto uk = linalg::least_eigenvectors(gk * gk.adjoint(), config.pairs[ks].d);
        sol.Uk[ks] = std::move(uk.vectors);
        sol.degenerate = sol.degenerate || uk.degenerate;
      }

      sol.leakage_trace.push_back(lm_objective(ch, sol.Wa, sol.ub, sol.Uk));
      sol.iterations = it;
      if (settings.record_history) {
        sol.gain_trace.push_back(refine_va(ch, sol).gain);
        record_singular_values(ch, sol);
      }
      if (stalled(sol.leakage_trace, settings.convergence_tol)) {
        sol.converged = true;
        break;
      }
    }
  }

  if (settings.refine_va) {
    const RefinedBeam beam = refine_va(ch, sol);
    sol.va = beam.va;
    sol.va_cancelled = beam.cancelled;
  } else {
    const AlignmentMatrices am = build_alignment_matrices(ch, sol.ub, sol.Uk);
    const CMatrix N = linalg::null_space(am.Mbar);
    if (N.cols() < 1) throw InfeasibleError("null(Mbar) is empty");
    sol.va = N.col(0);
  }
  zero_force_pairs(ch, config, sol);
  return sol;
}

TransceiverSolution meb_single_run(const ChannelSet& ch, const NetworkConfig& config,
                                   const SolverSettings& settings, int restart) {
  TransceiverSolution sol;
  sol.scheme = Scheme::kMaxEigenmode;
  sol.restart_index = restart;
  sol.seed = derive_seed(settings.seed, StreamTag::kSolverInit, static_cast<std::uint64_t>(restart));
  RandomStream rng(sol.seed);

  const linalg::SingularPair top = linalg::top_singular_pair(ch.Hba);
  sol.ub = top.left;
  sol.va = top.right;
  initialize_receivers(ch, config, rng, sol, false);
  const double gain = std::norm(sol.ub.dot(ch.Hba * sol.va));

  const int da = config.da;
  for (int it = 1; it <= settings.max_iterations; ++it) {
    const AlignmentMatrices am = build_alignment_matrices(ch, sol.ub, sol.Uk);
    auto wa = linalg::least_eigenvectors(am.M.adjoint() * am.M, da);
    sol.Wa = std::move(wa.vectors);
    sol.degenerate = sol.degenerate || wa.degenerate;

    CMatrix beams(sol.Wa.rows(), da + 1);
    beams << sol.Wa, sol.va;
    for (int k = 0; k < config.K(); ++k) {
      const auto ks = static_cast<std::size_t>(k);
      const CMatrix gk = ch.Hka[ks] * beams;
      auto uk = linalg::least_eigenvectors(gk * gk.adjoint(), config.pairs[ks].d);
      sol.Uk[ks] = std::move(uk.vectors);
      sol.degenerate = sol.degenerate || uk.degenerate;
    }

    sol.leakage_trace.push_back(meb_objective(ch, sol.Wa, sol.va, sol.ub, sol.Uk));
    sol.iterations = it;
    if (settings.record_history) {
      sol.gain_trace.push_back(gain);
      record_singular_values(ch, sol);
    }
    if (stalled(sol.leakage_trace, settings.convergence_tol)) {
      sol.converged = true;
      break;
    }
  }
  zero_force_pairs(ch, config, sol);
  return sol;
}

template <typename Run>
TransceiverSolution best_of_restarts(const ChannelSet& ch, const NetworkConfig& config,
                                     const SolverSettings& settings, Run run) {
  settings.validate();
  config.validate();
  check_channel_shapes(ch, config);
  TransceiverSolution best;
  double best_leakage = std::numeric_limits<double>::infinity();
  for (int r = 0; r < settings.restarts; ++r) {
    TransceiverSolution sol = run(ch, config, settings, r);
    if (sol.final_leakage() < best_leakage) {
      best_leakage = sol.final_leakage();
      best = std::move(sol);
    }
  }
  return best;
}

}  // namespace

double leakage_lm(const ChannelSet& channels, const TransceiverSolution& sol) {
  check_solution_shapes(channels, sol);
  return lm_objective(channels, sol.Wa, sol.ub, sol.Uk);
}

double leakage_meb(const ChannelSet& channels, const TransceiverSolution& sol) {
  check_solution_shapes(channels, sol);
  if (sol.va.size() != channels.Hba.cols()) throw ShapeError("solution shape mismatch: va length");
  return meb_objective(channels, sol.Wa, sol.va, sol.ub, sol.Uk);
}

double leakage(const ChannelSet& channels, const TransceiverSolution& sol) {
  return sol.scheme == Scheme::kLeakageMin ? leakage_lm(channels, sol) : leakage_meb(channels, sol);
}

TransceiverSolution lm_ia_solve(const ChannelSet& channels, const NetworkConfig& config,
                                const SolverSettings& settings) {
  return best_of_restarts(channels, config, settings, lm_single_run);
}

TransceiverSolution meb_ia_solve(const ChannelSet& channels, const NetworkConfig& config,
                                 const SolverSettings& settings) {
  return best_of_restarts(channels, config, settings, meb_single_run);
}

TransceiverSolution solve(Scheme scheme, const ChannelSet& channels, const NetworkConfig& config,
                          const SolverSettings& settings) {
  return scheme == Scheme::kLeakageMin ? lm_ia_solve(channels, config, settings)
                                       : meb_ia_solve(channels, config, settings);
}

RefinedBeam refine_va(const ChannelSet& channels, const TransceiverSolution& sol) {
  const AlignmentMatrices am = build_alignment_matrices(channels, sol.ub, sol.Uk);
  const CMatrix N = linalg::null_space(am.Mbar);
  if (N.cols() == 0) throw InfeasibleError("null(Mbar) is empty; va cannot be zero-forced");
  const CVector target = channels.Hba.adjoint() * sol.ub;  // Hba^H ub
  const CVector g = N.adjoint() * target;
  RefinedBeam beam;
  const double gnorm = g.norm();
  if (gnorm <= 1e-14 * std::max(target.norm(), std::numeric_limits<double>::min())) {
    beam.va = N.col(0);
    beam.cancelled = true;
    beam.gain = std::norm(target.dot(beam.va));
    return beam;
  }
  beam.va = N * g / gnorm;
  beam.gain = gnorm * gnorm;
  return beam;
}

CancellationCheck detect_cancellation(const ChannelSet& channels, const TransceiverSolution& sol,
                                      double threshold) {
  if (sol.va.size() != channels.Hba.cols() || sol.ub.size() != channels.Hba.rows())
    throw ShapeError("solution shape mismatch: va/ub do not match Hba");
  CancellationCheck c;
  c.gain = std::norm(sol.ub.dot(channels.Hba * sol.va));
  c.cancelled = c.gain < threshold;
  return c;
}

double unitarity_error(const TransceiverSolution& sol) {
  double err = std::max(std::abs(sol.va.norm() - 1.0), std::abs(sol.ub.norm() - 1.0));
  err = std::max(err, linalg::orthonormality_error(sol.Wa));
  for (const auto& v : sol.Vk) err = std::max(err, linalg::orthonormality_error(v));
  for (const auto& u : sol.Uk) err = std::max(err, linalg::orthonormality_error(u));
  return err;
}

}  // namespace iasec
