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

#include <doctest.h>

#include "iasec/error.hpp"
#include "iasec/serialize.hpp"

using namespace iasec;
using nlohmann::json;

TEST_CASE("complex matrices round-trip bit-exactly through text") {
  RandomStream rng(1);
  const CMatrix m = rng.complex_normal(3, 5);
  const CMatrix back = matrix_from_json(json::parse(to_json(m).dump()));
  CHECK((back - m).norm() == 0.0);
  const CVector v = rng.complex_normal(4);
  CHECK((vector_from_json(json::parse(to_json(v).dump())) - v).norm() == 0.0);
  CHECK(to_json(m).size() == 3);
  CHECK(to_json(m)[0].size() == 5);
  CHECK(to_json(m)[1][2][0].get<double>() == m(1, 2).real());
  CHECK(to_json(m)[1][2][1].get<double>() == m(1, 2).imag());
  CHECK(matrix_from_json(json::array()).size() == 0);
}

TEST_CASE("malformed matrices are rejected") {
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1,0]],[[1,0],[2,0]]]")), ShapeError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("{}")), ShapeError);
  CHECK_THROWS_AS(vector_from_json(json::parse("[[1,2,3]]")), ShapeError);
  CHECK_THROWS_AS(vector_from_json(json::parse("3")), ShapeError);
}

TEST_CASE("solutions round-trip") {
  const NetworkConfig c = make_config(12, 2, 4, 4, 9, 4, 2, 16);
  const ChannelSet ch = generate_channels(c, 2);
  SolverSettings s;
  s.record_history = true;
  s.max_iterations = 30;
  const TransceiverSolution sol = meb_ia_solve(ch, c, s);
  const TransceiverSolution back = solution_from_json(json::parse(to_json(sol).dump()));
  CHECK(back.scheme == sol.scheme);
  CHECK((back.Wa - sol.Wa).norm() == 0.0);
  CHECK((back.va - sol.va).norm() == 0.0);
  CHECK((back.ub - sol.ub).norm() == 0.0);
  REQUIRE(back.Vk.size() == 4);
  CHECK((back.Vk[3] - sol.Vk[3]).norm() == 0.0);
  CHECK((back.Uk[1] - sol.Uk[1]).norm() == 0.0);
  CHECK(back.leakage_trace == sol.leakage_trace);
  CHECK(back.gain_trace == sol.gain_trace);
  CHECK(back.singular_value_trace == sol.singular_value_trace);
  CHECK(back.iterations == sol.iterations);
  CHECK(back.converged == sol.converged);
  CHECK(back.seed == sol.seed);
  // A reloaded solution evaluates to the same objective.
  CHECK(leakage(ch, back) == leakage(ch, sol));
}

TEST_CASE("settings round-trip and are validated on load") {
  SolverSettings s;
  s.max_iterations = 17;
  s.convergence_tol = 1e-13;
  s.restarts = 3;
  s.seed = 1234567890123ULL;
  s.refine_va = false;
  const SolverSettings back = settings_from_json(json::parse(to_json(s).dump()));
  CHECK(back.max_iterations == 17);
  CHECK(back.convergence_tol == 1e-13);
  CHECK(back.restarts == 3);
  CHECK(back.seed == 1234567890123ULL);
  CHECK_FALSE(back.refine_va);
  CHECK(settings_from_json(json::object()).max_iterations == 2000);
  CHECK_THROWS_AS(settings_from_json(json{{"restarts", 0}}), ConfigError);
}

TEST_CASE("reports carry their fields") {
  const NetworkConfig c = make_config(12, 2, 4, 4, 9, 4, 2, 16);
  const json cfg = to_json(c);
  CHECK(cfg["Ma"] == 12);
  CHECK(cfg["pairs"].size() == 4);
  CHECK(parse_config(cfg["text"].get<std::string>()).config == c);

  const json rep = to_json(lm_necessary_condition(c));
  CHECK(rep["da_max"] == 5);
  CHECK(rep["scheme"] == "lm");
  CHECK(rep["satisfied"] == true);

  const json flops = to_json(estimate_flops(c.with_da(3), Scheme::kLeakageMin));
  CHECK(flops["ub"] == 1616);

  const SecrecyModel m = make_secrecy_model(c, 16.0, 100.0, {10.0}, 0.1);
  const json mj = to_json(m);
  CHECK(mj["gamma_B"].get<double>() == 1600.0);
  CHECK(mj["dk"].size() == 4);

  const json srm = to_json(srm_solve(m));
  for (const char* key : {"theta", "Rs", "w", "branch"}) CHECK(srm.contains(key));
}
