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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iasec/linalg.hpp"

namespace iasec {

// Antennas and streams of one legitimate transmitter/receiver pair.
struct PairLayout {
  int M = 1;  // transmit antennas
  int N = 2;  // receive antennas
  int d = 1;  // data streams

  bool operator==(const PairLayout&) const = default;
};

/// Network layout (Ma x Nb, [1, da]) prod_k (Mk x Nk, dk) with L single-antenna
/// eavesdroppers.
struct NetworkConfig {
  int Ma = 2;
  int Nb = 1;
  int da = 1;
  std::vector<PairLayout> pairs;
  int L = 1;

  int K() const { return static_cast<int>(pairs.size()); }

  // Sum of the pairs' stream counts.
  int total_streams() const;

  // Streams of every pair except `k`.
  int streams_excluding(int k) const;

  // Throws ConfigError naming the first violated constraint:
  //   1 <= da <= Ma - 1, 1 <= dk <= min(Mk, Nk - 1), L >= 1,
  //   Ma >= 1 + sum dk and Mk >= 1 + sum dk.
  void validate() const;

  // Same network with another AN dimension (not validated).
  NetworkConfig with_da(int new_da) const;

  bool operator==(const NetworkConfig&) const = default;
};

// Homogeneous layout (Ma x Nb, [1, da]) (Mk x Nk, dk)^K.
NetworkConfig make_config(int Ma, int Nb, int da, int K, int Mk, int Nk, int dk, int L = 1);

// Key-value text form, e.g. "Ma=12 Nb=2 da=3 K=4 Mk=9 Nk=4 dk=2 L=16 seed=7".
// Per-pair values may be comma lists of length K; a scalar is broadcast.
struct ParsedConfig {
  NetworkConfig config;
  std::optional<std::uint64_t> seed;
};

ParsedConfig parse_config(std::string_view text);

// Canonical text (scalars when homogeneous). Round-trips through parse_config.
std::string format_config(const NetworkConfig& config,
                          std::optional<std::uint64_t> seed = std::nullopt);

/// One realization of all legitimate channels. Entries are i.i.d. CN(0,1).
struct ChannelSet {
  CMatrix Hba;                           // Nb x Ma
  std::vector<CMatrix> Hka;              // Nk x Ma
  std::vector<CMatrix> Hbk;              // Nb x Mk
  std::vector<std::vector<CMatrix>> Hkj; // [k][j]: Nk x Mj (receiver k, transmitter j)
  std::uint64_t seed = 0;

  int K() const { return static_cast<int>(Hka.size()); }
};

ChannelSet generate_channels(const NetworkConfig& config, std::uint64_t seed);

// Throws ShapeError when `channels` was not drawn for `config`.
void check_channel_shapes(const ChannelSet& channels, const NetworkConfig& config);

/// Stacked interference matrices of the alignment conditions.
struct AlignmentMatrices {
  CMatrix M;               // (1 + s_d) x Ma: [ub^H Hba; U1^H H1a; ...; UK^H HKa]
  CMatrix Mbar;            // M without its first row
  std::vector<CMatrix> Mk; // (1 + sum_{j != k} dj) x Mk: [ub^H Hbk; Uj^H Hjk, j != k]
  int s_d = 0;
};

// Builds M, Mbar and Mk from the receive filters ub (Nb) and Uk (Nk x dk).
AlignmentMatrices build_alignment_matrices(const ChannelSet& channels, const CVector& ub,
                                           const std::vector<CMatrix>& Uk);

}  // namespace iasec
