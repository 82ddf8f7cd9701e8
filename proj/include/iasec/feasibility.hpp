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
#include <vector>

#include "iasec/alignment.hpp"

namespace iasec {

// Equation/variable counts for the alignment system at the config's da, the
// quadratic necessary condition in da, and the largest admissible da.
struct FeasibilityReport {
  Scheme scheme = Scheme::kLeakageMin;
  int da = 0;
  std::int64_t s_d = 0;   // sum dk
  std::int64_t s_N = 0;   // sum (Nk - dk) dk
  std::int64_t s_Ma = 0;  // (Ma - da) da
  std::int64_t N_E = 0;   // (1 + s_d) da
  std::int64_t N_V = 0;   // Nb - 1 + s_Ma + s_N
  std::int64_t quadratic = 0;  // da^2 - da (Ma - 1 - s_d) - constant; <= 0 required
  double discriminant = 0.0;
  int da_max = 0;
  bool satisfied = false;
};

// Counting condition for the leakage-minimization system (N_V >= N_E).
FeasibilityReport lm_necessary_condition(const NetworkConfig& config);

// Counting condition for the max-eigenmode system (AN and va equations jointly).
FeasibilityReport meb_necessary_condition(const NetworkConfig& config);

FeasibilityReport necessary_condition(const NetworkConfig& config, Scheme scheme);

// Reports for da = 1 .. Ma - 1.
std::vector<FeasibilityReport> necessary_condition_sweep(const NetworkConfig& config,
                                                         Scheme scheme);

// True iff da >= Ma - s_d, where a feasible LM solution cancels the
// confidential signal almost surely.
bool predict_cancellation(const NetworkConfig& config);

struct FlopEstimate {
  Scheme scheme = Scheme::kLeakageMin;
  std::int64_t Wa = 0;
  std::int64_t ub = 0;              // zero for the max-eigenmode scheme
  std::vector<std::int64_t> Uk;
  std::int64_t per_iteration_total = 0;
  int S = 0;  // max over pairs of max(Mk, Nk)
  int T = 0;  // max(Ma, Nb)
};

// Real-flop polynomials of the per-iteration updates. The building blocks
// take raw sizes so they can be evaluated outside a valid network.
std::int64_t flops_wa(int Ma, int Nb, const std::vector<PairLayout>& pairs);
std::int64_t flops_ub(int Nb, int da, int Ma);
std::int64_t flops_uk_lm(int Nk, int da, int Ma);
std::int64_t flops_uk_meb(int Nk, int da, int Ma);

FlopEstimate estimate_flops(const NetworkConfig& config, Scheme scheme);

}  // namespace iasec
