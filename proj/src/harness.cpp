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

#include "iasec/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "iasec/error.hpp"
#include "iasec/feasibility.hpp"
#include "iasec/serialize.hpp"

namespace iasec {

namespace {

const std::vector<std::string>& known_recipes() {
  static const std::vector<std::string> names = {"fig3", "fig4", "fig5", "fig6",
                                                 "fig8", "fig9", "fig10", "fig11"};
  return names;
}

bool is_alignment_recipe(const std::string& r) {
  return r == "fig3" || r == "fig4" || r == "fig5" || r == "fig6";
}

std::vector<int> range(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

std::vector<double> grid(double first, double last, double step) {
  std::vector<double> v;
  const int n = static_cast<int>(std::floor((last - first) / step + 0.5));
  for (int i = 0; i <= n; ++i) v.push_back(first + step * i);
  return v;
}

std::vector<std::uint64_t> seed_range(int n) {
  std::vector<std::uint64_t> s;
  for (int i = 0; i < n; ++i) s.push_back(static_cast<std::uint64_t>(i));
  return s;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Runs tasks on up to hardware_concurrency threads; results stay in task order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& task) {
  std::vector<T> out(n);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = task(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = task(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<int> sweep_da(const ExperimentSpec& spec, const NetworkConfig& config) {
  if (spec.da_values.empty()) return {config.da};
  std::vector<int> out;
  for (int da : spec.da_values)
    if (da <= config.Ma - 1) out.push_back(da);
  return out;
}

ResultRecord make_record(const ExperimentSpec& spec, std::string label, const std::string& config,
                         std::int64_t seed) {
  ResultRecord r;
  r.experiment = spec.name;
  r.label = std::move(label);
  r.config = config;
  r.seed = seed;
  r.created_utc = utc_now();
  return r;
}

// ---------------------------------------------------------------- alignment

struct AlignmentPoint {
  double leakage = 0.0;
  double gain = 0.0;
  double iterations = 0.0;
  double converged = 0.0;
  TransceiverSolution solution;
};

AlignmentPoint solve_point(const NetworkConfig& config, std::uint64_t seed, Scheme scheme,
                           const SolverSettings& base, bool keep_solution) {
  const ChannelSet ch = generate_channels(config, seed);
  SolverSettings settings = base;
  settings.seed = seed;
  TransceiverSolution sol = solve(scheme, ch, config, settings);
  AlignmentPoint p;
  p.leakage = sol.final_leakage();
  p.gain = detect_cancellation(ch, sol).gain;
  p.iterations = sol.iterations;
  p.converged = sol.converged ? 1.0 : 0.0;
  if (keep_solution) p.solution = std::move(sol);
  return p;
}

// Final leakage and gain versus da, per seed and as the median over seeds.
std::vector<ResultRecord> run_da_sweep(const ExperimentSpec& spec, bool with_analytic) {
  std::vector<ResultRecord> out;
  for (const auto& base : spec.configs) {
    const std::vector<int> das = sweep_da(spec, base);
    for (Scheme scheme : spec.schemes) {
      struct Task {
        std::size_t seed_idx, da_idx;
      };
      std::vector<Task> tasks;
      for (std::size_t s = 0; s < spec.seeds.size(); ++s)
        for (std::size_t d = 0; d < das.size(); ++d) tasks.push_back({s, d});
      auto points = parallel_map<AlignmentPoint>(tasks.size(), [&](std::size_t i) {
        return solve_point(base.with_da(das[tasks[i].da_idx]), spec.seeds[tasks[i].seed_idx], scheme,
                           spec.settings, false);
      });

      const std::string cfg = format_config(base);
      std::vector<double> da_col(das.begin(), das.end());
      std::vector<std::vector<double>> leak(das.size()), gain(das.size());
      for (std::size_t s = 0; s < spec.seeds.size(); ++s) {
        ResultRecord r = make_record(spec, to_string(scheme), cfg, static_cast<std::int64_t>(spec.seeds[s]));
        std::vector<double> l, g, it, conv;
        for (std::size_t d = 0; d < das.size(); ++d) {
          const AlignmentPoint& p = points[s * das.size() + d];
          l.push_back(p.leakage);
          g.push_back(p.gain);
          it.push_back(p.iterations);
          conv.push_back(p.converged);
          leak[d].push_back(p.leakage);
          gain[d].push_back(p.gain);
        }
        r.add("da", da_col);
        r.add("leakage", l);
        r.add("gain", g);
        r.add("iterations", it);
        r.add("converged", conv);
        out.push_back(std::move(r));
      }
      ResultRecord agg = make_record(spec, to_string(scheme) + "/median", cfg, -1);
      std::vector<double> ml, mg, minl;
      for (std::size_t d = 0; d < das.size(); ++d) {
        ml.push_back(median(leak[d]));
        mg.push_back(median(gain[d]));
        minl.push_back(*std::min_element(leak[d].begin(), leak[d].end()));
      }
      agg.add("da", da_col);
      agg.add("leakage", ml);
      agg.add("gain", mg);
      agg.add("leakage_min", minl);
      if (with_analytic) {
        std::vector<double> da_max, sat;
        for (int da : das) {
          const FeasibilityReport rep = necessary_condition(base.with_da(da), scheme);
          da_max.push_back(rep.da_max);
          sat.push_back(rep.satisfied ? 1.0 : 0.0);
        }
        agg.add("analytic_da_max", da_max);
        agg.add("analytic_satisfied", sat);
      }
      out.push_back(std::move(agg));
    }
  }
  return out;
}

// Per-iteration leakage and gain, or the singular values of M per iteration.
std::vector<ResultRecord> run_traces(const ExperimentSpec& spec, bool singular_values) {
  std::vector<ResultRecord> out;
  SolverSettings settings = spec.settings;
  settings.record_history = true;
  for (const auto& base : spec.configs) {
    for (Scheme scheme : spec.schemes) {
      for (int da : sweep_da(spec, base)) {
        const NetworkConfig config = base.with_da(da);
        auto points = parallel_map<AlignmentPoint>(spec.seeds.size(), [&](std::size_t i) {
          return solve_point(config, spec.seeds[i], scheme, settings, true);
        });
        for (std::size_t s = 0; s < spec.seeds.size(); ++s) {
          const TransceiverSolution& sol = points[s].solution;
          ResultRecord r = make_record(spec, to_string(scheme) + "/da=" + std::to_string(da),
                                       format_config(config), static_cast<std::int64_t>(spec.seeds[s]));
          std::vector<double> iter;
          for (std::size_t i = 0; i < sol.leakage_trace.size(); ++i) iter.push_back(static_cast<double>(i + 1));
          r.add("iteration", iter);
          if (singular_values) {
            const std::size_t n = sol.singular_value_trace.empty() ? 0 : sol.singular_value_trace.front().size();
            for (std::size_t j = 0; j < n; ++j) {
              std::vector<double> col;
              for (const auto& row : sol.singular_value_trace) col.push_back(row[j]);
              r.add("sv" + std::to_string(j + 1), col);
            }
          } else {
            r.add("leakage", sol.leakage_trace);
            r.add("gain", sol.gain_trace);
          }
          out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- secrecy

struct GainSource {
  double sigma2;
  std::int64_t seed;
};

std::vector<GainSource> gain_sources(const ExperimentSpec& spec) {
  if (spec.secrecy.sigma2 > 0.0) return {{spec.secrecy.sigma2, -1}};
  const NetworkConfig& config = spec.configs.front();
  return parallel_map<GainSource>(spec.seeds.size(), [&](std::size_t i) {
    const ChannelSet ch = generate_channels(config, spec.seeds[i]);
    SolverSettings settings = spec.settings;
    settings.seed = spec.seeds[i];
    const TransceiverSolution sol = meb_ia_solve(ch, config, settings);
    if (sol.final_leakage() >= settings.feasibility_tol)
      throw InfeasibleError("max-eigenmode alignment did not converge for " + format_config(config, spec.seeds[i]) +
                            "; rate analysis needs an aligned network");
    return GainSource{main_channel_gain(ch, sol), static_cast<std::int64_t>(spec.seeds[i])};
  });
}

SecrecyModel model_at(const ExperimentSpec& spec, double sigma2, double pa_db, double pk_db) {
  NetworkConfig config = spec.configs.front();
  config.L = spec.secrecy.L;
  const double Pa = db_to_linear(pa_db);
  const double Pk = spec.secrecy.pk_follows_pa ? Pa : db_to_linear(pk_db);
  return make_secrecy_model(config, sigma2, Pa, {Pk}, spec.secrecy.eps_th);
}

double first_or(const std::vector<double>& v, double fallback) { return v.empty() ? fallback : v.front(); }

std::vector<ResultRecord> run_rate_vs_theta(const ExperimentSpec& spec) {
  std::vector<ResultRecord> out;
  const std::string cfg = format_config(spec.configs.front());
  const int n = std::max(2, spec.secrecy.theta_points);
  for (const GainSource& src : gain_sources(spec)) {
    for (double pa_db : spec.secrecy.pa_db) {
      const SecrecyModel m = model_at(spec, src.sigma2, pa_db, first_or(spec.secrecy.pk_db, 10.0));
      std::vector<double> theta, rs;
      for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        theta.push_back(t);
        rs.push_back(std::max(0.0, rs_of_theta(t, m)));
      }
      std::ostringstream label;
      label << "Pa=" << pa_db << "dB";
      ResultRecord r = make_record(spec, label.str(), cfg, src.seed);
      r.add("theta", theta);
      r.add("Rs", rs);
      out.push_back(std::move(r));
    }
  }
  return out;
}

double branch_code(SrmBranch b) {
  switch (b) {
    case SrmBranch::kSuspend: return 0.0;
    case SrmBranch::kInterior: return 1.0;
    case SrmBranch::kFullPower: return 2.0;
  }
  return -1.0;
}

std::vector<ResultRecord> run_rate_vs_pa(const ExperimentSpec& spec) {
  std::vector<ResultRecord> out;
  const std::string cfg = format_config(spec.configs.front());
  const double theta_inf = theta_high_snr(spec.configs.front().da, spec.secrecy.L, spec.secrecy.eps_th);
  for (const GainSource& src : gain_sources(spec)) {
    for (double pk_db : spec.secrecy.pk_db.empty() ? std::vector<double>{10.0} : spec.secrecy.pk_db) {
      std::vector<double> pa, th, rs, approx, branch;
      for (double pa_db : spec.secrecy.pa_db) {
        const SrmSolution s = srm_solve(model_at(spec, src.sigma2, pa_db, pk_db));
        pa.push_back(pa_db);
        th.push_back(s.theta_star);
        rs.push_back(s.Rs_star);
        approx.push_back(theta_inf);
        branch.push_back(branch_code(s.branch));
      }
      std::ostringstream label;
      label << "P=" << pk_db << "dB";
      ResultRecord r = make_record(spec, label.str(), cfg, src.seed);
      r.add("Pa_dB", pa);
      r.add("theta_star", th);
      r.add("Rs_star", rs);
      r.add("theta_high_snr", approx);
      r.add("branch", branch);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<ResultRecord> run_rate_vs_p(const ExperimentSpec& spec) {
  std::vector<ResultRecord> out;
  const std::string cfg = format_config(spec.configs.front());
  for (const GainSource& src : gain_sources(spec)) {
    for (double pa_db : spec.secrecy.pa_db) {
      std::vector<double> p, th, rs, cap;
      for (double pk_db : spec.secrecy.pk_db) {
        const SecrecyModel m = model_at(spec, src.sigma2, pa_db, pk_db);
        const SrmSolution s = srm_solve(m);
        p.push_back(pk_db);
        th.push_back(s.theta_star);
        rs.push_back(s.Rs_star);
        cap.push_back(std::log1p(m.gamma_B()) / std::numbers::ln2);
      }
      std::ostringstream label;
      label << "Pa=" << pa_db << "dB";
      ResultRecord r = make_record(spec, label.str(), cfg, src.seed);
      r.add("P_dB", p);
      r.add("theta_star", th);
      r.add("Rs_star", rs);
      r.add("meb_capacity", cap);
      out.push_back(std::move(r));
    }
  }
  return out;
}

ResultRecord isotropic_record(const ExperimentSpec& spec, const GainSource& src) {
  std::vector<double> pa, opt, iso, th, th_iso, cap;
  for (double pa_db : spec.secrecy.pa_db) {
    const SecrecyModel m = model_at(spec, src.sigma2, pa_db, first_or(spec.secrecy.pk_db, pa_db));
    const SrmSolution s = srm_solve(m);
    const double t_iso = isotropic_theta(m);
    pa.push_back(pa_db);
    opt.push_back(s.Rs_star);
    iso.push_back(std::max(0.0, rs_of_theta(t_iso, m)));
    th.push_back(s.theta_star);
    th_iso.push_back(t_iso);
    cap.push_back(std::log1p(m.gamma_B()) / std::numbers::ln2);
  }
  ResultRecord r = make_record(spec, "optimal_vs_isotropic", format_config(spec.configs.front()), src.seed);
  r.add("Pa_dB", pa);
  r.add("Rs_opt", opt);
  r.add("Rs_iso", iso);
  r.add("theta_star", th);
  r.add("theta_iso", th_iso);
  r.add("meb_capacity", cap);
  return r;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

void ExperimentSpec::validate() const {
  if (seeds.empty()) throw ConfigError("experiment '" + name + "': seed list is empty");
  if (std::find(known_recipes().begin(), known_recipes().end(), recipe) == known_recipes().end())
    throw ConfigError("experiment '" + name + "': unknown recipe '" + recipe + "'");
  if (configs.empty()) throw ConfigError("experiment '" + name + "': no network configs");
  if (schemes.empty()) throw ConfigError("experiment '" + name + "': no schemes");
  settings.validate();
  for (const auto& c : configs) {
    const std::vector<int> das = sweep_da(*this, c);
    if (das.empty()) throw ConfigError("experiment '" + name + "': no admissible da for " + format_config(c));
    for (int da : das) c.with_da(da).validate();
  }
  if (!is_alignment_recipe(recipe)) {
    if (secrecy.pa_db.empty()) throw ConfigError("experiment '" + name + "': empty Pa grid");
    if (recipe == "fig10" && secrecy.pk_db.empty()) throw ConfigError("experiment '" + name + "': empty P grid");
    if (!(secrecy.eps_th > 0.0 && secrecy.eps_th < 1.0) || secrecy.L < 1)
      throw ConfigError("experiment '" + name + "': invalid secrecy settings");
  }
}

std::vector<std::string> recipe_names() { return known_recipes(); }

ExperimentSpec recipe(const std::string& name) {
  ExperimentSpec s;
  s.name = name;
  s.recipe = name;
  const NetworkConfig base = make_config(12, 2, 4, 4, 9, 4, 2, 16);
  s.configs = {base};
  if (name == "fig3") {
    s.da_values = range(1, 8);
    s.seeds = seed_range(10);
  } else if (name == "fig4") {
    s.da_values = {3, 4, 5, 6};
    s.seeds = {0};
  } else if (name == "fig5") {
    s.da_values = {4, 5};
    s.schemes = {Scheme::kLeakageMin};
    s.seeds = {0};
  } else if (name == "fig6") {
    s.configs = {make_config(12, 2, 1, 4, 9, 4, 2, 16), make_config(11, 2, 1, 4, 9, 4, 2, 16),
                 make_config(10, 2, 1, 4, 9, 4, 2, 16), make_config(11, 2, 1, 3, 9, 4, 2, 16),
                 make_config(10, 2, 1, 3, 9, 4, 2, 16)};
    s.da_values = range(1, 7);
    s.schemes = {Scheme::kMaxEigenmode};
    s.seeds = seed_range(10);
  } else if (name == "fig8") {
    s.secrecy.pa_db = {10.0, 20.0, 30.0};
    s.secrecy.pk_db = {10.0};
    s.seeds = {0};
  } else if (name == "fig9") {
    s.secrecy.pa_db = grid(0.0, 60.0, 2.0);
    s.secrecy.pk_db = {0.0, 10.0, 20.0};
    s.seeds = {0};
  } else if (name == "fig10") {
    s.secrecy.pa_db = {10.0, 20.0, 30.0};
    s.secrecy.pk_db = grid(0.0, 40.0, 2.0);
    s.seeds = {0};
  } else if (name == "fig11") {
    s.secrecy.pa_db = grid(0.0, 40.0, 2.0);
    s.secrecy.pk_db = {10.0};
    s.seeds = {0};
  } else {
    throw ConfigError("unknown recipe '" + name + "'");
  }
  return s;
}

ExperimentSpec spec_from_json(const nlohmann::json& j) {
  const std::string rec = j.at("recipe").get<std::string>();
  ExperimentSpec s = recipe(rec);
  s.name = j.value("name", rec);
  if (j.contains("configs")) {
    s.configs.clear();
    for (const auto& c : j["configs"]) s.configs.push_back(parse_config(c.get<std::string>()).config);
  }
  if (j.contains("da_values")) s.da_values = j["da_values"].get<std::vector<int>>();
  if (j.contains("schemes")) {
    s.schemes.clear();
    for (const auto& n : j["schemes"]) s.schemes.push_back(scheme_from_string(n.get<std::string>()));
  }
  if (j.contains("settings")) s.settings = settings_from_json(j["settings"]);
  if (j.contains("secrecy")) {
    const auto& q = j["secrecy"];
    s.secrecy.L = q.value("L", s.secrecy.L);
    s.secrecy.eps_th = q.value("eps_th", s.secrecy.eps_th);
    s.secrecy.sigma2 = q.value("sigma2", s.secrecy.sigma2);
    if (q.contains("pa_db")) s.secrecy.pa_db = q["pa_db"].get<std::vector<double>>();
    if (q.contains("pk_db")) s.secrecy.pk_db = q["pk_db"].get<std::vector<double>>();
    s.secrecy.pk_follows_pa = q.value("pk_follows_pa", s.secrecy.pk_follows_pa);
    s.secrecy.theta_points = q.value("theta_points", s.secrecy.theta_points);
  }
  if (j.contains("seeds")) s.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
  s.csv_path = j.value("csv", std::string());
  s.json_path = j.value("json", std::string());
  return s;
}

ExperimentSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open experiment spec '" + path + "'");
  try {
    return spec_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("experiment spec '" + path + "': " + e.what());
  }
}

std::size_t ResultRecord::rows() const { return series.empty() ? 0 : series.front().second.size(); }

const std::vector<double>& ResultRecord::at(const std::string& name) const {
  for (const auto& [n, v] : series)
    if (n == name) return v;
  throw ConfigError("record '" + label + "' has no series '" + name + "'");
}

bool ResultRecord::has(const std::string& name) const {
  for (const auto& s : series)
    if (s.first == name) return true;
  return false;
}

void ResultRecord::add(std::string name, std::vector<double> values) {
  if (!series.empty() && values.size() != rows())
    throw ShapeError("series '" + name + "' has " + std::to_string(values.size()) + " points, record has " +
                     std::to_string(rows()));
  series.emplace_back(std::move(name), std::move(values));
}

ResultRecord compare_isotropic(const ExperimentSpec& spec) {
  spec.validate();
  return isotropic_record(spec, gain_sources(spec).front());
}

std::vector<ResultRecord> run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<ResultRecord> records;
  const std::string& r = spec.recipe;
  if (r == "fig3")
    records = run_da_sweep(spec, false);
  else if (r == "fig6")
    records = run_da_sweep(spec, true);
  else if (r == "fig4")
    records = run_traces(spec, false);
  else if (r == "fig5")
    records = run_traces(spec, true);
  else if (r == "fig8")
    records = run_rate_vs_theta(spec);
  else if (r == "fig9")
    records = run_rate_vs_pa(spec);
  else if (r == "fig10")
    records = run_rate_vs_p(spec);
  else if (r == "fig11")
    for (const GainSource& src : gain_sources(spec)) records.push_back(isotropic_record(spec, src));

  if (!spec.csv_path.empty()) write_text_file(spec.csv_path, to_csv(records));
  if (!spec.json_path.empty()) write_text_file(spec.json_path, to_json(records).dump(2) + "\n");
  return records;
}

std::string to_csv(const std::vector<ResultRecord>& records) {
  std::vector<std::string> columns;
  std::set<std::string> seen;
  for (const auto& r : records)
    for (const auto& [name, values] : r.series)
      if (seen.insert(name).second) columns.push_back(name);

  std::ostringstream out;
  out << "experiment,label,config,seed";
  for (const auto& c : columns) out << ',' << csv_field(c);
  out << '\n';
  for (const auto& r : records) {
    std::map<std::string, const std::vector<double>*> by_name;
    for (const auto& [name, values] : r.series) by_name[name] = &values;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      out << csv_field(r.experiment) << ',' << csv_field(r.label) << ',' << csv_field(r.config) << ',' << r.seed;
      for (const auto& c : columns) {
        out << ',';
        auto it = by_name.find(c);
        if (it != by_name.end()) out << format_double((*it->second)[i]);
      }
      out << '\n';
    }
  }
  return out.str();
}

nlohmann::json to_json(const std::vector<ResultRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json series = nlohmann::json::array();
    for (const auto& [name, values] : r.series) series.push_back({{"name", name}, {"values", values}});
    arr.push_back({{"experiment", r.experiment},
                   {"label", r.label},
                   {"config", r.config},
                   {"seed", r.seed},
                   {"series", series},
                   {"created_utc", r.created_utc},
                   {"library_version", r.library_version}});
  }
  return arr;
}

std::vector<ResultRecord> records_from_json(const nlohmann::json& j) {
  std::vector<ResultRecord> out;
  for (const auto& e : j) {
    ResultRecord r;
    r.experiment = e.at("experiment").get<std::string>();
    r.label = e.at("label").get<std::string>();
    r.config = e.at("config").get<std::string>();
    r.seed = e.at("seed").get<std::int64_t>();
    r.created_utc = e.value("created_utc", std::string());
    r.library_version = e.value("library_version", std::string());
    for (const auto& s : e.at("series")) r.add(s.at("name").get<std::string>(), s.at("values").get<std::vector<double>>());
    out.push_back(std::move(r));
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace iasec
