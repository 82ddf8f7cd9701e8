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
#include <utility>
#include <vector>

#include <json.hpp>

#include "iasec/secrecy.hpp"

namespace iasec {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct SecrecySettings {
  int L = 16;
  double eps_th = 0.1;
  // Main-channel gain used by the rate recipes; <= 0 means "measure it from a
  // max-eigenmode solution of configs[0] for every seed".
  double sigma2 = 16.0;
  std::vector<double> pa_db;
  std::vector<double> pk_db;
  bool pk_follows_pa = false;  // Pk = Pa at every sweep point
  int theta_points = 201;
};

/// A named sweep. `recipe` selects the runner: fig3, fig4, fig5, fig6 (alignment)
/// or fig8, fig9, fig10, fig11 (secrecy rate).
struct ExperimentSpec {
  std::string name;
  std::string recipe;
  std::vector<NetworkConfig> configs;
  std::vector<int> da_values;  // applied to every config; empty = the config's own da
  std::vector<Scheme> schemes{Scheme::kLeakageMin, Scheme::kMaxEigenmode};
  SolverSettings settings;
  SecrecySettings secrecy;
  std::vector<std::uint64_t> seeds;
  std::string csv_path;
  std::string json_path;

  // Throws ConfigError (empty seeds, unknown recipe, invalid config at any da).
  void validate() const;
};

// Built-in recipe with the default sweep. Throws ConfigError for unknown names.
ExperimentSpec recipe(const std::string& name);
std::vector<std::string> recipe_names();

// JSON spec file; missing fields fall back to the named recipe's defaults.
ExperimentSpec spec_from_json(const nlohmann::json& j);
ExperimentSpec load_spec(const std::string& path);

/// One series table: every series has one entry per sweep point.
struct ResultRecord {
  std::string experiment;
  std::string label;
  std::string config;       // canonical config text
  std::int64_t seed = -1;   // -1 marks an aggregate over seeds
  std::vector<std::pair<std::string, std::vector<double>>> series;
  std::string created_utc;
  std::string library_version = kLibraryVersion;

  std::size_t rows() const;
  const std::vector<double>& at(const std::string& name) const;
  bool has(const std::string& name) const;
  void add(std::string name, std::vector<double> values);
};

// Runs the sweep and, when paths are set, writes CSV and JSON. Deterministic
// for fixed seeds (timestamps live in JSON only).
std::vector<ResultRecord> run_experiment(const ExperimentSpec& spec);

// Optimal power split against theta = 1 / (1 + da) over the experiment's Pa sweep.
ResultRecord compare_isotropic(const ExperimentSpec& spec);

// One row per sweep point: experiment,label,config,seed,<series...>.
std::string to_csv(const std::vector<ResultRecord>& records);
nlohmann::json to_json(const std::vector<ResultRecord>& records);
std::vector<ResultRecord> records_from_json(const nlohmann::json& j);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace iasec
