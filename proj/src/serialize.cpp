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

#include "iasec/serialize.hpp"

#include "iasec/error.hpp"

namespace iasec {

using nlohmann::json;

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

namespace {

std::complex<double> complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ShapeError("complex value must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ShapeError("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ShapeError("ragged matrix row " + std::to_string(r));
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

CVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ShapeError("vector must be an array of [re, im] pairs");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

json to_json(const NetworkConfig& config) {
  json pairs = json::array();
  for (const auto& p : config.pairs) pairs.push_back({{"M", p.M}, {"N", p.N}, {"d", p.d}});
  return {{"Ma", config.Ma}, {"Nb", config.Nb}, {"da", config.da}, {"K", config.K()},
          {"L", config.L},   {"pairs", pairs},  {"text", format_config(config)}};
}

json to_json(const SolverSettings& s) {
  return {{"max_iterations", s.max_iterations}, {"convergence_tol", s.convergence_tol},
          {"feasibility_tol", s.feasibility_tol}, {"refine_va", s.refine_va},
          {"restarts", s.restarts},             {"seed", s.seed},
          {"record_history", s.record_history}};
}

SolverSettings settings_from_json(const json& j) {
  SolverSettings s;
  s.max_iterations = j.value("max_iterations", s.max_iterations);
  s.convergence_tol = j.value("convergence_tol", s.convergence_tol);
  s.feasibility_tol = j.value("feasibility_tol", s.feasibility_tol);
  s.refine_va = j.value("refine_va", s.refine_va);
  s.restarts = j.value("restarts", s.restarts);
  s.seed = j.value("seed", s.seed);
  s.record_history = j.value("record_history", s.record_history);
  s.validate();
  return s;
}

json to_json(const TransceiverSolution& sol) {
  json Vk = json::array(), Uk = json::array();
  for (const auto& v : sol.Vk) Vk.push_back(to_json(v));
  for (const auto& u : sol.Uk) Uk.push_back(to_json(u));
  json j = {{"scheme", to_string(sol.scheme)},
            {"va", to_json(sol.va)},
            {"Wa", to_json(sol.Wa)},
            {"ub", to_json(sol.ub)},
            {"Vk", Vk},
            {"Uk", Uk},
            {"leakage_trace", sol.leakage_trace},
            {"iterations", sol.iterations},
            {"converged", sol.converged},
            {"zero_forcing", sol.zero_forcing},
            {"degenerate", sol.degenerate},
            {"va_cancelled", sol.va_cancelled},
            {"restart_index", sol.restart_index},
            {"seed", sol.seed}};
  if (!sol.gain_trace.empty()) j["gain_trace"] = sol.gain_trace;
  if (!sol.singular_value_trace.empty()) j["singular_value_trace"] = sol.singular_value_trace;
  return j;
}

TransceiverSolution solution_from_json(const json& j) {
  TransceiverSolution s;
  s.scheme = scheme_from_string(j.at("scheme").get<std::string>());
  s.va = vector_from_json(j.at("va"));
  s.Wa = matrix_from_json(j.at("Wa"));
  s.ub = vector_from_json(j.at("ub"));
  for (const auto& v : j.at("Vk")) s.Vk.push_back(matrix_from_json(v));
  for (const auto& u : j.at("Uk")) s.Uk.push_back(matrix_from_json(u));
  s.leakage_trace = j.at("leakage_trace").get<std::vector<double>>();
  s.iterations = j.value("iterations", 0);
  s.converged = j.value("converged", false);
  s.zero_forcing = j.value("zero_forcing", false);
  s.degenerate = j.value("degenerate", false);
  s.va_cancelled = j.value("va_cancelled", false);
  s.restart_index = j.value("restart_index", 0);
  s.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("gain_trace")) s.gain_trace = j["gain_trace"].get<std::vector<double>>();
  if (j.contains("singular_value_trace"))
    s.singular_value_trace = j["singular_value_trace"].get<std::vector<std::vector<double>>>();
  return s;
}

json to_json(const FeasibilityReport& r) {
  return {{"scheme", to_string(r.scheme)}, {"da", r.da},
          {"s_d", r.s_d},                  {"s_N", r.s_N},
          {"s_Ma", r.s_Ma},                {"N_E", r.N_E},
          {"N_V", r.N_V},                  {"quadratic", r.quadratic},
          {"discriminant", r.discriminant}, {"da_max", r.da_max},
          {"satisfied", r.satisfied}};
}

json to_json(const FlopEstimate& f) {
  return {{"scheme", to_string(f.scheme)}, {"Wa", f.Wa}, {"ub", f.ub}, {"Uk", f.Uk},
          {"per_iteration_total", f.per_iteration_total}, {"S", f.S}, {"T", f.T}};
}

json to_json(const SecrecyModel& m) {
  return {{"sigma2", m.sigma2}, {"Pa", m.Pa}, {"Pk", m.Pk}, {"da", m.da},
          {"dk", m.dk},         {"L", m.L},   {"eps_th", m.eps_th}, {"gamma_B", m.gamma_B()},
          {"c", m.c()}};
}

json to_json(const SrmSolution& s) {
  return {{"theta", s.theta_star},
          {"Rs", s.Rs_star},
          {"w", s.w_star},
          {"branch", to_string(s.branch)},
          {"rs_prime_at_1", s.rs_prime_at_1},
          {"rs_prime_at_0", s.rs_prime_at_0}};
}

}  // namespace iasec
