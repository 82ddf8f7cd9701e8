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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "iasec/error.hpp"
#include "iasec/secrecy.hpp"

namespace iasec {

namespace {

// Precomputed filter blocks and power scalings for the SINR of one eavesdropper.
class EveSinr {
 public:
  EveSinr(const SecrecyModel& model, const TransceiverSolution& f, double theta)
      : va_(f.va), Wa_(f.Wa), Vk_(f.Vk) {
    x_scale_ = theta * model.Pa;
    y_scale_ = (1.0 - theta) * model.Pa / model.da;
    for (int k = 0; k < model.K(); ++k) {
      const auto i = static_cast<std::size_t>(k);
      z_scale_.push_back(model.Pk[i] / model.dk[i]);
      h_k_.emplace_back(Vk_[i].rows());
    }
    h_a_.resize(Wa_.rows());
  }

  double draw(RandomStream& rng) {
    for (Eigen::Index i = 0; i < h_a_.size(); ++i) h_a_(i) = rng.complex_normal();
    double denom = 1.0 + y_scale_ * (Wa_.adjoint() * h_a_).squaredNorm();
    for (std::size_t k = 0; k < Vk_.size(); ++k) {
      CVector& h = h_k_[k];
      for (Eigen::Index i = 0; i < h.size(); ++i) h(i) = rng.complex_normal();
      denom += z_scale_[k] * (Vk_[k].adjoint() * h).squaredNorm();
    }
    return x_scale_ * std::norm(h_a_.dot(va_)) / denom;
  }

 private:
  const CVector& va_;
  const CMatrix& Wa_;
  const std::vector<CMatrix>& Vk_;
  double x_scale_ = 0.0;
  double y_scale_ = 0.0;
  std::vector<double> z_scale_;
  CVector h_a_;
  std::vector<CVector> h_k_;
};

}  // namespace

SopEstimate sop_monte_carlo(const SecrecyModel& model, const TransceiverSolution& filters,
                            double theta, double redundancy, std::int64_t n_samples,
                            std::uint64_t seed, const MonteCarloOptions& options) {
  model.validate();
  if (n_samples < 100) throw DomainError("sop_monte_carlo needs at least 100 samples");
  if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("theta must lie in (0, 1]");
  if (!(redundancy >= 0.0)) throw DomainError("redundancy Rb - Rs must be nonnegative");
  if (static_cast<int>(filters.Vk.size()) != model.K() || filters.Wa.cols() != model.da ||
      filters.va.size() != filters.Wa.rows())
    throw ShapeError("filters do not match the secrecy model");

  const double mu = std::expm1(redundancy * std::numbers::ln2);
  int workers = options.workers > 0 ? options.workers : static_cast<int>(std::thread::hardware_concurrency());
  workers = static_cast<int>(std::clamp<std::int64_t>(workers, 1, n_samples));
  const int eves_per_sample = options.all_eves ? model.L : 1;

  std::vector<std::int64_t> hits(static_cast<std::size_t>(workers), 0);
  auto work = [&](int w) {
    const std::int64_t share = n_samples / workers + (w < n_samples % workers ? 1 : 0);
    RandomStream rng(seed, StreamTag::kEavesdropper, static_cast<std::uint64_t>(w));
    EveSinr sinr(model, filters, theta);
    std::int64_t count = 0;
    for (std::int64_t s = 0; s < share; ++s) {
      bool outage = false;
      for (int l = 0; l < eves_per_sample; ++l) outage = (sinr.draw(rng) > mu) || outage;
      count += outage ? 1 : 0;
    }
    hits[static_cast<std::size_t>(w)] = count;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::int64_t total = 0;
  for (auto h : hits) total += h;
  const double n = static_cast<double>(n_samples);
  const double p = static_cast<double>(total) / n;

  SopEstimate est;
  est.samples = n_samples;
  if (options.all_eves || model.L == 1) {
    est.eps = p;
    est.std_error = std::sqrt(p * (1.0 - p) / n);
  } else {
    // eps = 1 - (1 - p)^L with the delta-method standard error.
    est.eps = -std::expm1(model.L * std::log1p(-p));
    est.std_error = model.L * std::pow(1.0 - p, model.L - 1) * std::sqrt(p * (1.0 - p) / n);
  }
  return est;
}

}  // namespace iasec
