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

#include <json.hpp>

#include "iasec/feasibility.hpp"
#include "iasec/secrecy.hpp"

namespace iasec {

// Complex matrices are arrays of rows, each row an array of [re, im] pairs;
// complex vectors are flat arrays of [re, im] pairs.
nlohmann::json to_json(const CMatrix& m);
nlohmann::json to_json(const CVector& v);
CMatrix matrix_from_json(const nlohmann::json& j);
CVector vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NetworkConfig& config);
nlohmann::json to_json(const SolverSettings& settings);
SolverSettings settings_from_json(const nlohmann::json& j);

// Filters, leakage trace and metadata.
nlohmann::json to_json(const TransceiverSolution& sol);
TransceiverSolution solution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FeasibilityReport& report);
nlohmann::json to_json(const FlopEstimate& flops);
nlohmann::json to_json(const SecrecyModel& model);
nlohmann::json to_json(const SrmSolution& srm);

}  // namespace iasec
