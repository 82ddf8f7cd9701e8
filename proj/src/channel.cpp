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

#include "iasec/channel.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "iasec/error.hpp"

namespace iasec {

int NetworkConfig::total_streams() const {
  int s = 0;
  for (const auto& p : pairs) s += p.d;
  return s;
}

int NetworkConfig::streams_excluding(int k) const {
  return total_streams() - pairs.at(static_cast<std::size_t>(k)).d;
}

void NetworkConfig::validate() const {
  auto fail = [](const std::string& what) { throw ConfigError("invalid network config: " + what); };
  if (Ma < 2) fail("Ma must be >= 2 (got " + std::to_string(Ma) + ")");
  if (Nb < 1) fail("Nb must be >= 1 (got " + std::to_string(Nb) + ")");
  if (L < 1) fail("L must be >= 1 (got " + std::to_string(L) + ")");
  if (da < 1 || da > Ma - 1)
    fail("1 <= da <= Ma - 1 violated (da=" + std::to_string(da) + ", Ma=" + std::to_string(Ma) + ")");
  const int sd = total_streams();
  for (int k = 0; k < K(); ++k) {
    const auto& p = pairs[static_cast<std::size_t>(k)];
    const std::string tag = " for pair " + std::to_string(k + 1);
    if (p.M < 1 || p.N < 1) fail("antenna counts must be positive" + tag);
    if (p.d < 1 || p.d > std::min(p.M, p.N - 1))
      fail("1 <= dk <= min(Mk, Nk - 1) violated" + tag + " (dk=" + std::to_string(p.d) +
           ", Mk=" + std::to_string(p.M) + ", Nk=" + std::to_string(p.N) + ")");
  }
  if (Ma < 1 + sd)
    fail("Ma >= 1 + sum dk violated (Ma=" + std::to_string(Ma) + ", sum dk=" + std::to_string(sd) + ")");
  for (int k = 0; k < K(); ++k) {
    const auto& p = pairs[static_cast<std::size_t>(k)];
    if (p.M < 1 + sd)
      fail("Mk >= 1 + sum dk violated for pair " + std::to_string(k + 1) + " (Mk=" +
           std::to_string(p.M) + ", sum dk=" + std::to_string(sd) + ")");
  }
}

NetworkConfig NetworkConfig::with_da(int new_da) const {
  NetworkConfig c = *this;
  c.da = new_da;
  return c;
}

NetworkConfig make_config(int Ma, int Nb, int da, int K, int Mk, int Nk, int dk, int L) {
  NetworkConfig c;
  c.Ma = Ma;
  c.Nb = Nb;
  c.da = da;
  c.L = L;
  c.pairs.assign(static_cast<std::size_t>(K), PairLayout{Mk, Nk, dk});
  return c;
}

namespace {

long long parse_integer(std::string_view key, std::string_view text) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ConfigError("config key '" + std::string(key) + "': not an integer: '" + std::string(text) + "'");
  return value;
}

std::vector<int> parse_list(std::string_view key, std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    out.push_back(static_cast<int>(parse_integer(key, item)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& values) {
  bool uniform = true;
  for (int v : values) uniform = uniform && v == values.front();
  if (uniform) return std::to_string(values.front());
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

}  // namespace

ParsedConfig parse_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError("config token '" + token + "' is not key=value");
    const std::string key = token.substr(0, eq);
    if (kv.count(key)) throw ConfigError("config key '" + key + "' given twice");
    kv[key] = token.substr(eq + 1);
  }
  static const char* known[] = {"Ma", "Nb", "da", "K", "Mk", "Nk", "dk", "L", "seed"};
  for (const auto& [key, value] : kv) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError("unknown config key '" + key + "'");
  }
  auto require = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError(std::string("config key '") + key + "' is missing");
    return it->second;
  };

  ParsedConfig out;
  NetworkConfig& c = out.config;
  c.Ma = static_cast<int>(parse_integer("Ma", require("Ma")));
  c.Nb = static_cast<int>(parse_integer("Nb", require("Nb")));
  c.da = static_cast<int>(parse_integer("da", require("da")));
  if (kv.count("L")) c.L = static_cast<int>(parse_integer("L", kv["L"]));

  std::vector<int> Mk, Nk, dk;
  if (kv.count("Mk")) Mk = parse_list("Mk", kv["Mk"]);
  if (kv.count("Nk")) Nk = parse_list("Nk", kv["Nk"]);
  if (kv.count("dk")) dk = parse_list("dk", kv["dk"]);

  int K = 0;
  if (kv.count("K")) {
    K = static_cast<int>(parse_integer("K", kv["K"]));
    if (K < 0) throw ConfigError("config key 'K' must be nonnegative");
  } else {
    K = static_cast<int>(std::max({Mk.size(), Nk.size(), dk.size()}));
  }
  auto expand = [K](const char* key, std::vector<int>& v) {
    if (K == 0) return;
    if (v.empty()) throw ConfigError(std::string("config key '") + key + "' is missing (K > 0)");
    if (v.size() == 1) v.assign(static_cast<std::size_t>(K), v.front());
    if (static_cast<int>(v.size()) != K)
      throw ConfigError(std::string("config key '") + key + "' has " + std::to_string(v.size()) +
                        " entries, expected K=" + std::to_string(K));
  };
  expand("Mk", Mk);
  expand("Nk", Nk);
  expand("dk", dk);
  for (int k = 0; k < K; ++k) {
    const auto i = static_cast<std::size_t>(k);
    c.pairs.push_back(PairLayout{Mk[i], Nk[i], dk[i]});
  }
  if (kv.count("seed")) {
    const long long s = parse_integer("seed", kv["seed"]);
    if (s < 0) throw ConfigError("config key 'seed' must be nonnegative");
    out.seed = static_cast<std::uint64_t>(s);
  }
  return out;
}

std::string format_config(const NetworkConfig& config, std::optional<std::uint64_t> seed) {
  std::ostringstream out;
  out << "Ma=" << config.Ma << " Nb=" << config.Nb << " da=" << config.da << " K=" << config.K();
  if (config.K() > 0) {
    std::vector<int> Mk, Nk, dk;
    for (const auto& p : config.pairs) {
      Mk.push_back(p.M);
      Nk.push_back(p.N);
      dk.push_back(p.d);
    }
    out << " Mk=" << join(Mk) << " Nk=" << join(Nk) << " dk=" << join(dk);
  }
  out << " L=" << config.L;
  if (seed) out << " seed=" << *seed;
  return out.str();
}

ChannelSet generate_channels(const NetworkConfig& config, std::uint64_t seed) {
  config.validate();
  RandomStream rng(seed, StreamTag::kChannels);
  ChannelSet ch;
  ch.seed = seed;
  const auto K = static_cast<std::size_t>(config.K());
  ch.Hba = rng.complex_normal(config.Nb, config.Ma);
  for (std::size_t k = 0; k < K; ++k) ch.Hka.push_back(rng.complex_normal(config.pairs[k].N, config.Ma));
  for (std::size_t k = 0; k < K; ++k) ch.Hbk.push_back(rng.complex_normal(config.Nb, config.pairs[k].M));
  ch.Hkj.resize(K);
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t j = 0; j < K; ++j)
      ch.Hkj[k].push_back(rng.complex_normal(config.pairs[k].N, config.pairs[j].M));
  return ch;
}

void check_channel_shapes(const ChannelSet& ch, const NetworkConfig& config) {
  auto expect = [](const CMatrix& m, int rows, int cols, const std::string& name) {
    if (m.rows() != rows || m.cols() != cols)
      throw ShapeError(name + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  };
  const auto K = static_cast<std::size_t>(config.K());
  if (ch.Hka.size() != K || ch.Hbk.size() != K || ch.Hkj.size() != K)
    throw ShapeError("channel set holds " + std::to_string(ch.Hka.size()) + " pairs, config has " +
                     std::to_string(K));
  expect(ch.Hba, config.Nb, config.Ma, "Hba");
  for (std::size_t k = 0; k < K; ++k) {
    const auto& p = config.pairs[k];
    const std::string idx = std::to_string(k + 1);
    expect(ch.Hka[k], p.N, config.Ma, "H" + idx + "a");
    expect(ch.Hbk[k], config.Nb, p.M, "Hb" + idx);
    if (ch.Hkj[k].size() != K) throw ShapeError("Hkj row " + idx + " has wrong length");
    for (std::size_t j = 0; j < K; ++j)
      expect(ch.Hkj[k][j], p.N, config.pairs[j].M, "H" + idx + "," + std::to_string(j + 1));
  }
}

AlignmentMatrices build_alignment_matrices(const ChannelSet& ch, const CVector& ub,
                                           const std::vector<CMatrix>& Uk) {
  const auto K = static_cast<std::size_t>(ch.K());
  if (Uk.size() != K)
    throw ShapeError("got " + std::to_string(Uk.size()) + " receive filters for " + std::to_string(K) + " pairs");
  if (ub.size() != ch.Hba.rows())
    throw ShapeError("ub has length " + std::to_string(ub.size()) + ", expected Nb=" + std::to_string(ch.Hba.rows()));
  int s_d = 0;
  for (std::size_t k = 0; k < K; ++k) {
    if (Uk[k].rows() != ch.Hka[k].rows())
      throw ShapeError("U" + std::to_string(k + 1) + " has " + std::to_string(Uk[k].rows()) +
                       " rows, expected Nk=" + std::to_string(ch.Hka[k].rows()));
    s_d += static_cast<int>(Uk[k].cols());
  }
  const Eigen::Index Ma = ch.Hba.cols();

  AlignmentMatrices am;
  am.s_d = s_d;
  am.M.resize(1 + s_d, Ma);
  am.M.row(0) = ub.adjoint() * ch.Hba;
  Eigen::Index row = 1;
  for (std::size_t k = 0; k < K; ++k) {
    am.M.middleRows(row, Uk[k].cols()) = Uk[k].adjoint() * ch.Hka[k];
    row += Uk[k].cols();
  }
  am.Mbar = am.M.bottomRows(s_d);

  for (std::size_t k = 0; k < K; ++k) {
    const Eigen::Index Mk = ch.Hbk[k].cols();
    const Eigen::Index rows = 1 + s_d - Uk[k].cols();
    CMatrix mk(rows, Mk);
    mk.row(0) = ub.adjoint() * ch.Hbk[k];
    Eigen::Index r = 1;
    for (std::size_t j = 0; j < K; ++j) {
      if (j == k) continue;
      mk.middleRows(r, Uk[j].cols()) = Uk[j].adjoint() * ch.Hkj[j][k];
      r += Uk[j].cols();
    }
    am.Mk.push_back(std::move(mk));
  }
  return am;
}

}  // namespace iasec
