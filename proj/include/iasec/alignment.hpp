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

#include "iasec/channel.hpp"

namespace iasec {

enum class Scheme { kLeakageMin, kMaxEigenmode };

std::string to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);

struct SolverSettings {
  int max_iterations = 2000;
  double convergence_tol = 1e-10;  // absolute change of the objective
  double feasibility_tol = 1e-6;   // objective below this counts as aligned
  bool refine_va = true;           // closed-form main-channel refinement (LM)
  int restarts = 1;                // independent random initializations
  std::uint64_t seed = 0;          // master seed of the initializations
  bool record_history = false;     // per-iteration gain and singular values of M

  // Throws ConfigError.
  void validate() const;
};

/// Transmit and receive filters plus the solver's iteration record.
struct TransceiverSolution {
  Scheme scheme = Scheme::kLeakageMin;
  CVector va;                 // Ma, unit norm
  CMatrix Wa;                 // Ma x da, orthonormal columns
  CVector ub;                 // Nb, unit norm
  std::vector<CMatrix> Vk;    // Mk x dk
  std::vector<CMatrix> Uk;    // Nk x dk

  std::vector<double> leakage_trace;  // objective after each iteration
  int iterations = 0;
  bool converged = false;     // stopping rule met before max_iterations
  bool zero_forcing = false;  // one-shot branch, Ma >= 1 + da + s_d
  bool degenerate = false;    // an eigenvalue tie was hit at a selection cut
  bool va_cancelled = false;  // refinement found ub^H Hba N = 0
  int restart_index = 0;      // which restart produced this solution
  std::uint64_t seed = 0;     // init seed of that restart

  // Filled when SolverSettings::record_history is set.
  std::vector<double> gain_trace;
  std::vector<std::vector<double>> singular_value_trace;

  double final_leakage() const { return leakage_trace.empty() ? 0.0 : leakage_trace.back(); }
};

// Throws ShapeError if the filter sizes do not match `channels`.
void check_solution_shapes(const ChannelSet& channels, const TransceiverSolution& sol);

AlignmentMatrices build_alignment_matrices(const ChannelSet& channels,
                                           const TransceiverSolution& sol);

// |ub^H Hba Wa|^2 + sum_k ||Uk^H Hka Wa||_F^2
double leakage_lm(const ChannelSet& channels, const TransceiverSolution& sol);

// ||M Wa||_F^2 + ||Mbar va||^2
double leakage_meb(const ChannelSet& channels, const TransceiverSolution& sol);

double leakage(const ChannelSet& channels, const TransceiverSolution& sol);

/// Alternating leakage minimization over (Wa) and (ub, Uk), followed by
/// zero-forcing va in null(Mbar) and Vk in null(Mk). When
/// Ma >= 1 + da + s_d the AN precoder is read off null(M) directly.
TransceiverSolution lm_ia_solve(const ChannelSet& channels, const NetworkConfig& config,
                                const SolverSettings& settings = {});

/// Max-eigenmode variant: ub and va are pinned to the dominant singular pair
/// of Hba, then Wa and Uk alternate on ||M Wa||^2 + ||Mbar va||^2.
TransceiverSolution meb_ia_solve(const ChannelSet& channels, const NetworkConfig& config,
                                 const SolverSettings& settings = {});

TransceiverSolution solve(Scheme scheme, const ChannelSet& channels,
                          const NetworkConfig& config, const SolverSettings& settings = {});

struct RefinedBeam {
  CVector va;
  double gain = 0.0;
  bool cancelled = false;  // ub^H Hba N vanished; va is an arbitrary null vector
};

// Maximizes |ub^H Hba va|^2 over unit va in null(Mbar):
// va = N N^H Hba^H ub / ||N N^H Hba^H ub||. Throws InfeasibleError if the null
// space is empty.
RefinedBeam refine_va(const ChannelSet& channels, const TransceiverSolution& sol);

struct CancellationCheck {
  double gain = 0.0;  // |ub^H Hba va|^2
  bool cancelled = false;
};

inline constexpr double kDefaultCancellationThreshold = 1e-8;

CancellationCheck detect_cancellation(const ChannelSet& channels,
                                      const TransceiverSolution& sol,
                                      double threshold = kDefaultCancellationThreshold);

// Worst deviation from the unitarity constraints over Wa, Vk, Uk, and
// | ||va|| - 1 |, | ||ub|| - 1 |.
double unitarity_error(const TransceiverSolution& sol);

}  // namespace iasec
