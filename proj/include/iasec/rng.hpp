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

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace iasec {

// Independent streams derived from one master seed. Each consumer asks for
// its own tag so that, e.g., adding restarts never perturbs channel draws.
enum class StreamTag : std::uint64_t {
  kChannels = 1,
  kSolverInit = 2,
  kEavesdropper = 3,
  kExperiment = 4,
};

std::uint64_t splitmix64(std::uint64_t x);

// Seed for sub-stream (tag, index) of the master seed.
std::uint64_t derive_seed(std::uint64_t master, StreamTag tag, std::uint64_t index = 0);

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
  RandomStream(std::uint64_t master, StreamTag tag, std::uint64_t index = 0)
      : engine_(derive_seed(master, tag, index)) {}

  // CN(0,1): real and imaginary parts each N(0, 1/2).
  std::complex<double> complex_normal();

  Eigen::MatrixXcd complex_normal(Eigen::Index rows, Eigen::Index cols);
  Eigen::VectorXcd complex_normal(Eigen::Index n);

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 0.70710678118654752440};
};

}  // namespace iasec
