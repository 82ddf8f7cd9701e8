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

#include "iasec/feasibility.hpp"

#include <algorithm>
#include <cmath>

namespace iasec {

namespace {

struct Counts {
  std::int64_t s_d = 0;
  std::int64_t s_N = 0;
};

Counts count_pairs(const NetworkConfig& config) {
  Counts c;
  for (const auto& p : config.pairs) {
    c.s_d += p.d;
    c.s_N += static_cast<std::int64_t>(p.N - p.d) * p.d;
  }
  return c;
}

// Shared form of both conditions: da^2 - da * b - constant <= 0 with
// b = Ma - 1 - s_d. The lower root is never positive, so the admissible range
// is 1 <= da <= min(Ma - 1, floor((b + sqrt(b^2 + 4 constant)) / 2)).
FeasibilityReport quadratic_report(const NetworkConfig& config, Scheme scheme, std::int64_t constant) {
  config.validate();
  const Counts counts = count_pairs(config);
  FeasibilityReport r;
  r.scheme = scheme;
  r.da = config.da;
  r.s_d = counts.s_d;
  r.s_N = counts.s_N;
  const std::int64_t da = config.da;
  const std::int64_t b = config.Ma - 1 - counts.s_d;
  r.s_Ma = (config.Ma - da) * da;
  r.N_E = (1 + counts.s_d) * da;
  r.N_V = config.Nb - 1 + r.s_Ma + counts.s_N;
  r.quadratic = da * da - da * b - constant;
  r.discriminant = static_cast<double>(b * b + 4 * constant);
  const double upper = (static_cast<double>(b) + std::sqrt(r.discriminant)) / 2.0;
  r.da_max = static_cast<int>(std::min<std::int64_t>(config.Ma - 1, static_cast<std::int64_t>(std::floor(upper + 1e-9))));
  r.satisfied = r.quadratic <= 0;
  return r;
}

}  // namespace

FeasibilityReport lm_necessary_condition(const NetworkConfig& config) {
  const Counts c = count_pairs(config);
  return quadratic_report(config, Scheme::kLeakageMin, config.Nb - 1 + c.s_N);
}

FeasibilityReport meb_necessary_condition(const NetworkConfig& config) {
  const Counts c = count_pairs(config);
  return quadratic_report(config, Scheme::kMaxEigenmode, c.s_N - c.s_d);
}

FeasibilityReport necessary_condition(const NetworkConfig& config, Scheme scheme) {
  return scheme == Scheme::kLeakageMin ? lm_necessary_condition(config) : meb_necessary_condition(config);
}

std::vector<FeasibilityReport> necessary_condition_sweep(const NetworkConfig& config, Scheme scheme) {
  std::vector<FeasibilityReport> out;
  for (int da = 1; da <= config.Ma - 1; ++da) out.push_back(necessary_condition(config.with_da(da), scheme));
  return out;
}

bool predict_cancellation(const NetworkConfig& config) {
  config.validate();
  return config.da >= config.Ma - config.total_streams();
}

std::int64_t flops_wa(int Ma, int Nb, const std::vector<PairLayout>& pairs) {
  std::int64_t s_d = 0;
  std::int64_t weighted = 0;
  for (const auto& p : pairs) {
    s_d += p.d;
    weighted += static_cast<std::int64_t>(8 * p.N - 2) * p.d;
  }
  const std::int64_t m = Ma;
  return 126 * m * m * m + m * m * (4 * s_d + 3) + m * (weighted + 8 * Nb - 2);
}

std::int64_t flops_ub(int Nb, int da, int Ma) {
  const std::int64_t n = Nb;
  return 126 * n * n * n + n * n * (4 * da - 1) + n * da * (8 * static_cast<std::int64_t>(Ma) - 2);
}

std::int64_t flops_uk_lm(int Nk, int da, int Ma) { return flops_ub(Nk, da, Ma); }

std::int64_t flops_uk_meb(int Nk, int da, int Ma) {
  const std::int64_t n = Nk;
  return 126 * n * n * n + n * n * (4 * da + 3) + n * (1 + da) * (8 * static_cast<std::int64_t>(Ma) - 2);
}

FlopEstimate estimate_flops(const NetworkConfig& config, Scheme scheme) {
  config.validate();
  FlopEstimate f;
  f.scheme = scheme;
  f.Wa = flops_wa(config.Ma, config.Nb, config.pairs);
  f.ub = scheme == Scheme::kLeakageMin ? flops_ub(config.Nb, config.da, config.Ma) : 0;
  f.per_iteration_total = f.Wa + f.ub;
  for (const auto& p : config.pairs) {
    const std::int64_t uk = scheme == Scheme::kLeakageMin ? flops_uk_lm(p.N, config.da, config.Ma)
                                                          : flops_uk_meb(p.N, config.da, config.Ma);
    f.Uk.push_back(uk);
    f.per_iteration_total += uk;
    f.S = std::max({f.S, p.M, p.N});
  }
  f.T = std::max(config.Ma, config.Nb);
  return f;
}

}  // namespace iasec
