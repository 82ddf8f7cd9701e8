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

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "iasec/error.hpp"
#include "iasec/feasibility.hpp"
#include "iasec/harness.hpp"
#include "iasec/serialize.hpp"

using namespace iasec;
using nlohmann::json;

namespace {

const char* kDefaultConfig = "Ma=12 Nb=2 da=4 K=4 Mk=9 Nk=4 dk=2 L=16";

struct Common {
  std::string config = kDefaultConfig;
  std::optional<std::uint64_t> seed;
  int restarts = 1;
  std::int64_t samples = 100000;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-c,--config", c.config, "network, e.g. \"Ma=12 Nb=2 da=4 K=4 Mk=9 Nk=4 dk=2 L=16\"")
      ->capture_default_str();
  cmd->add_option("-s,--seed", c.seed, "master seed (overrides seed= in the config)");
  cmd->add_option("--restarts", c.restarts, "random initializations per solve")->capture_default_str();
  cmd->add_option("--samples", c.samples, "Monte Carlo samples")->capture_default_str();
  cmd->add_option("-o,--out", c.out, "output file (stdout when omitted)");
}

struct Resolved {
  NetworkConfig config;
  std::uint64_t seed = 0;
};

Resolved resolve(const Common& c) {
  ParsedConfig p = parse_config(c.config);
  p.config.validate();
  return {p.config, c.seed ? *c.seed : p.seed.value_or(0)};
}

void emit(const Common& c, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (c.out.empty())
    std::cout << text;
  else
    write_text_file(c.out, text);
}

SolverSettings solver_settings(const Common& c, std::uint64_t seed, int max_iterations) {
  SolverSettings s;
  s.restarts = c.restarts;
  s.seed = seed;
  s.max_iterations = max_iterations;
  s.validate();
  return s;
}

// Main-channel gain from an aligned max-eigenmode design of the configured network.
struct MebDesign {
  ChannelSet channels;
  TransceiverSolution solution;
  double sigma2 = 0.0;
};

MebDesign meb_design(const Resolved& r, const Common& c) {
  MebDesign d;
  d.channels = generate_channels(r.config, r.seed);
  d.solution = meb_ia_solve(d.channels, r.config, solver_settings(c, r.seed, 2000));
  if (d.solution.final_leakage() >= 1e-6)
    throw InfeasibleError("max-eigenmode alignment did not converge for " + format_config(r.config, r.seed) +
                          " (leakage " + std::to_string(d.solution.final_leakage()) + ")");
  d.sigma2 = main_channel_gain(d.channels, d.solution);
  return d;
}

void print_feasibility(const NetworkConfig& config) {
  std::printf("%s\n", format_config(config).c_str());
  std::printf("%4s  %6s %6s  %8s %6s %6s  %8s %6s %6s  %s\n", "da", "N_E", "N_V", "q_lm", "max_lm", "lm", "q_meb",
              "max_meb", "meb", "cancel");
  for (int da = 1; da <= config.Ma - 1; ++da) {
    const NetworkConfig c = config.with_da(da);
    const FeasibilityReport lm = lm_necessary_condition(c);
    const FeasibilityReport meb = meb_necessary_condition(c);
    std::printf("%4d  %6lld %6lld  %8lld %6d %6s  %8lld %6d %6s  %s\n", da, static_cast<long long>(lm.N_E),
                static_cast<long long>(lm.N_V), static_cast<long long>(lm.quadratic), lm.da_max,
                lm.satisfied ? "yes" : "no", static_cast<long long>(meb.quadratic), meb.da_max,
                meb.satisfied ? "yes" : "no", predict_cancellation(c) ? "yes" : "no");
  }
  for (Scheme s : {Scheme::kLeakageMin, Scheme::kMaxEigenmode}) {
    const FlopEstimate f = estimate_flops(config, s);
    std::printf("flops/iteration %-3s at da=%d: %lld (S=%d, T=%d)\n", to_string(s).c_str(), config.da,
                static_cast<long long>(f.per_iteration_total), f.S, f.T);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artificial-noise interference alignment and secrecy-rate tools"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kLibraryVersion);

  Common common;

  auto* feas = app.add_subcommand("feasibility", "necessary-condition table per da and flop counts");
  bool feas_json = false;
  add_common(feas, common);
  feas->add_flag("--json", feas_json, "emit JSON reports instead of the table");

  int max_iterations = 2000;
  bool with_history = false;
  auto* solve_lm = app.add_subcommand("solve-lm", "leakage-minimization alignment");
  auto* solve_meb = app.add_subcommand("solve-meb", "max-eigenmode alignment");
  for (auto* cmd : {solve_lm, solve_meb}) {
    add_common(cmd, common);
    cmd->add_option("--max-iterations", max_iterations)->capture_default_str();
    cmd->add_flag("--history", with_history, "record per-iteration gain and singular values");
  }

  double sigma2 = 0.0;
  std::vector<double> pa_db{20.0};
  std::vector<double> pk_db{10.0};
  double eps_th = 0.1;
  std::optional<int> eves;

  auto* sop = app.add_subcommand("sop", "secrecy outage at the target rate: closed form vs Monte Carlo");
  std::vector<double> thetas{0.25, 0.5, 0.75, 1.0};
  std::vector<double> redundancy;
  bool all_eves = false;
  add_common(sop, common);
  sop->add_option("--theta", thetas, "power split values")->capture_default_str();
  sop->add_option("--redundancy", redundancy, "Rb - Rs in bits; default: the value meeting --eps-th");
  sop->add_flag("--all-eves", all_eves, "simulate all L eavesdroppers per sample");

  auto* srm = app.add_subcommand("srm", "optimal power split under the outage constraint");
  add_common(srm, common);

  for (auto* cmd : {sop, srm}) {
    cmd->add_option("--sigma2", sigma2, "main-channel gain; default: measured from a max-eigenmode design");
    cmd->add_option("--pa-db", pa_db, "Alice power(s) in dB")->capture_default_str();
    cmd->add_option("--pk-db", pk_db, "legitimate transmitter power(s) in dB")->capture_default_str();
    cmd->add_option("--eps-th", eps_th, "outage target")->capture_default_str();
    cmd->add_option("-L,--eves", eves, "eavesdropper count (overrides L= in the config)");
  }

  auto* exp = app.add_subcommand("experiment", "run a built-in recipe or a JSON spec file");
  std::string target;
  std::string csv_path;
  std::optional<int> n_seeds;
  add_common(exp, common);
  exp->add_option("recipe", target, "one of fig3 fig4 fig5 fig6 fig8 fig9 fig10 fig11, or a spec file")->required();
  exp->add_option("--csv", csv_path, "CSV output path");
  exp->add_option("--seeds", n_seeds, "use seeds base .. base+n-1 (base from --seed, default 0)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (feas->parsed()) {
      const Resolved r = resolve(common);
      if (feas_json) {
        json j = {{"config", to_json(r.config)}, {"lm", json::array()}, {"meb", json::array()}};
        for (const auto& rep : necessary_condition_sweep(r.config, Scheme::kLeakageMin)) j["lm"].push_back(to_json(rep));
        for (const auto& rep : necessary_condition_sweep(r.config, Scheme::kMaxEigenmode))
          j["meb"].push_back(to_json(rep));
        j["flops"] = {to_json(estimate_flops(r.config, Scheme::kLeakageMin)),
                      to_json(estimate_flops(r.config, Scheme::kMaxEigenmode))};
        emit(common, j);
      } else {
        print_feasibility(r.config);
      }
    } else if (solve_lm->parsed() || solve_meb->parsed()) {
      const Scheme scheme = solve_lm->parsed() ? Scheme::kLeakageMin : Scheme::kMaxEigenmode;
      const Resolved r = resolve(common);
      const ChannelSet ch = generate_channels(r.config, r.seed);
      SolverSettings settings = solver_settings(common, r.seed, max_iterations);
      settings.record_history = with_history;
      const TransceiverSolution sol = solve(scheme, ch, r.config, settings);
      const CancellationCheck cc = detect_cancellation(ch, sol);
      emit(common, {{"config", format_config(r.config, r.seed)},
                    {"settings", to_json(settings)},
                    {"leakage", sol.final_leakage()},
                    {"aligned", sol.final_leakage() < settings.feasibility_tol},
                    {"gain", cc.gain},
                    {"cancelled", cc.cancelled},
                    {"solution", to_json(sol)}});
      std::fprintf(stderr, "%s: leakage %.3e after %d iterations, gain %.4g%s\n", to_string(scheme).c_str(),
                   sol.final_leakage(), sol.iterations, cc.gain, cc.cancelled ? " (cancelled)" : "");
    } else if (sop->parsed() || srm->parsed()) {
      Resolved r = resolve(common);
      if (eves) r.config.L = *eves;
      r.config.validate();
      std::optional<MebDesign> design;
      if (sop->parsed() || sigma2 <= 0.0) design = meb_design(r, common);
      const double s2 = sigma2 > 0.0 ? sigma2 : design->sigma2;

      json records = json::array();
      for (double pa : pa_db) {
        for (double pk : pk_db) {
          const SecrecyModel m = make_secrecy_model(r.config, s2, db_to_linear(pa), {db_to_linear(pk)}, eps_th);
          if (srm->parsed()) {
            json j = to_json(srm_solve(m));
            j["Pa_dB"] = pa;
            j["Pk_dB"] = pk;
            j["sigma2"] = s2;
            records.push_back(j);
            continue;
          }
          for (double theta : thetas) {
            std::vector<double> reds = redundancy;
            const double w = solve_w(theta, m);
            if (reds.empty()) reds.push_back(std::log2(1.0 + theta * w));
            for (double red : reds) {
              MonteCarloOptions opts;
              opts.all_eves = all_eves;
              const SopEstimate mc = sop_monte_carlo(m, design->solution, theta, red, common.samples,
                                                     derive_seed(r.seed, StreamTag::kExperiment), opts);
              records.push_back({{"Pa_dB", pa},
                                 {"Pk_dB", pk},
                                 {"theta", theta},
                                 {"w", w},
                                 {"Rs", std::max(0.0, rs_of_theta(theta, m))},
                                 {"redundancy", red},
                                 {"eps_closed", sop_from_redundancy(m, theta, red)},
                                 {"eps_mc", mc.eps},
                                 {"stderr", mc.std_error},
                                 {"samples", mc.samples}});
            }
          }
        }
      }
      emit(common, records);
    } else if (exp->parsed()) {
      const bool is_file = std::filesystem::exists(target) || target.ends_with(".json");
      ExperimentSpec spec = is_file ? load_spec(target) : recipe(target);
      if (n_seeds) {
        spec.seeds.clear();
        for (int i = 0; i < *n_seeds; ++i) spec.seeds.push_back(common.seed.value_or(0) + i);
      } else if (common.seed) {
        spec.seeds = {*common.seed};
      }
      spec.settings.restarts = common.restarts;
      if (!csv_path.empty()) spec.csv_path = csv_path;
      if (!common.out.empty()) spec.json_path = common.out;
      const auto records = run_experiment(spec);
      if (spec.csv_path.empty() && spec.json_path.empty()) std::cout << to_csv(records);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
