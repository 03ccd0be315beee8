/* Copyright 2026 The Qtrack Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <CLI11.hpp>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "qtrack/config.hpp"
#include "qtrack/errors.hpp"
#include "qtrack/record_io.hpp"
#include "qtrack/simulator.hpp"
#include "qtrack/svg_plot.hpp"
#include "qtrack/units.hpp"
#include "qtrack/validation.hpp"

namespace {

using namespace qtrack;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitSimulationAbort = 3;

int worker_count(std::size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* cap = std::getenv("QTC_ROTOR_THREADS")) {
    const long requested = std::strtol(cap, nullptr, 10);
    if (requested >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(requested));
  }
  return static_cast<int>(std::min<std::size_t>(n, jobs));
}

std::string state_tag(const BasisState& s) {
  std::ostringstream os;
  os << "J" << s.j << "_K" << s.k << "_M" << s.m;
  return os.str();
}

bool parse_state_flag(const std::string& raw, BasisState& out) {
  std::istringstream is(raw);
  char c1 = 0, c2 = 0;
  if (!(is >> out.j >> c1 >> out.k >> c2 >> out.m) || c1 != ',' || c2 != ',') return false;
  std::string rest;
  return !(is >> rest);
}

bool parse_range_flag(const std::string& raw, int& lo, int& hi) {
  const auto colon = raw.find(':');
  if (colon == std::string::npos) return false;
  try {
    std::size_t used = 0;
    const std::string a = raw.substr(0, colon), b = raw.substr(colon + 1);
    lo = std::stoi(a, &used);
    if (used != a.size()) return false;
    hi = std::stoi(b, &used);
    if (used != b.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return lo <= hi;
}

int cmd_simulate(const std::string& config_path, const ConfigOverrides& overrides) {
  RunRequest request;
  try {
    request = parse_config_file(config_path);
    apply_overrides(request, overrides);
    for (const SimulationConfig& config : request.runs) {
      const BasisState& s = config.initial_state;
      if (config.rotor.kind == RotorKind::Linear && s.k != 0) {
        throw ConfigError(config_path, 0, "linear rotor: initial state must have K = 0");
      }
      if (s.j < 0 || s.j > config.rotor.jmax || std::abs(s.k) > s.j || std::abs(s.m) > s.j) {
        throw ConfigError(config_path, 0,
                          "initial state " + std::to_string(s.j) + "," + std::to_string(s.k) +
                              "," + std::to_string(s.m) + " is outside the jmax = " +
                              std::to_string(config.rotor.jmax) + " basis");
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  namespace fs = std::filesystem;
  fs::create_directories(request.output_dir);

  std::vector<SimulationRecord> records(request.runs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> hard_failure{false};
  std::mutex io_mutex;

  const auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= request.runs.size()) break;
      const SimulationConfig& config = request.runs[i];
      SimulationRecord record;
      try {
        record = (config.rotor.kind == RotorKind::Linear) ? run_linear(config) : run(config);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(io_mutex);
        std::cerr << "error [" << state_tag(config.initial_state) << "]: " << e.what() << "\n";
        hard_failure = true;
        continue;
      }

      const std::string tag = state_tag(config.initial_state);
      const std::string base = (fs::path(request.output_dir) /
                                (request.prefix + "_" + tag)).string();
      write_record_csv(base + ".csv", record);

      std::map<std::string, std::string> extras;
      extras["initial_state"] = std::to_string(config.initial_state.j) + "," +
                                std::to_string(config.initial_state.k) + "," +
                                std::to_string(config.initial_state.m);
      extras["jmax"] = std::to_string(config.rotor.jmax);
      extras["steps"] = std::to_string(config.steps);
      extras["horizon_b"] = std::to_string(config.horizon);
      if (request.b_cm1 > 0.0) {
        extras["b_cm1"] = std::to_string(request.b_cm1);
        extras["mu_debye"] = std::to_string(request.mu_debye);
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%.6e",
                      units::field_unit_volts_per_meter(request.b_cm1, request.mu_debye));
        extras["field_unit_V_per_m"] = buffer;
        std::snprintf(buffer, sizeof buffer, "%.6e", units::time_unit_seconds(request.b_cm1));
        extras["time_unit_s"] = buffer;
      }
      write_record_summary(base + "_summary.txt", record, extras);

      if (request.plots) {
        write_fields_svg(base + "_fields.svg", record, "control fields " + tag);
        write_orbit_svg(base + "_orbit.svg", record, "orientation track " + tag);
      }

      {
        std::lock_guard<std::mutex> lock(io_mutex);
        if (record.compatibility_warning) {
          std::cerr << "warning [" << tag << "]: designated track does not match the initial "
                       "state at t = 0 (offset persists; only accelerations are tracked)\n";
        }
        if (record.ok()) {
          std::cout << tag << ": ok, " << record.rows.size() << " rows, max tracking error "
                    << record.max_error.lpNorm<Eigen::Infinity>() << ", runtime "
                    << record.runtime_seconds << " s -> " << base << ".csv\n";
        } else {
          std::cout << tag << ": ABORTED at step " << record.failed_step << " ("
                    << record.failure_reason << "), partial record written -> " << base
                    << ".csv\n";
        }
      }
      records[i] = std::move(record);
    }
  };

  std::vector<std::thread> pool;
  const int workers = worker_count(request.runs.size());
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  if (hard_failure) return kExitSimulationAbort;
  for (const SimulationRecord& record : records) {
    if (!record.ok()) return kExitSimulationAbort;
  }
  return kExitOk;
}

int cmd_matrix_elements(int jmax, const std::string& axis_name, int k_fixed, bool use_k_fixed,
                        const std::string& j_range, const std::string& k_range,
                        const std::string& m_range) {
  Axis axis;
  if (axis_name == "x") axis = Axis::X;
  else if (axis_name == "y") axis = Axis::Y;
  else if (axis_name == "z") axis = Axis::Z;
  else {
    std::cerr << "invalid axis '" << axis_name << "' (expected x, y or z)\n";
    return kExitConfigError;
  }

  DumpFilter filter;
  if (!j_range.empty() && !parse_range_flag(j_range, filter.j_lo, filter.j_hi)) {
    std::cerr << "invalid --j-range (expected LO:HI)\n";
    return kExitConfigError;
  }
  if (!k_range.empty() && !parse_range_flag(k_range, filter.k_lo, filter.k_hi)) {
    std::cerr << "invalid --k-range (expected LO:HI)\n";
    return kExitConfigError;
  }
  if (!m_range.empty() && !parse_range_flag(m_range, filter.m_lo, filter.m_hi)) {
    std::cerr << "invalid --m-range (expected LO:HI)\n";
    return kExitConfigError;
  }

  try {
    const Basis basis = use_k_fixed ? Basis::enumerate(jmax, k_fixed) : Basis::enumerate(jmax);
    const OperatorMatrix op = position_matrix(axis, basis);
    dump_matrix_elements(std::cout, op, basis, filter);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitOk;
}

int cmd_validate(int jmax) {
  bool all_pass = true;
  for (const CheckResult& check : run_validation_suite(jmax)) {
    std::printf("[%s] %-26s %s\n", check.pass ? "PASS" : "FAIL", check.name.c_str(),
                check.detail.c_str());
    all_pass = all_pass && check.pass;
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qtrack: tracking control of rigid-rotor orientation"};
  app.require_subcommand(1);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run the tracking loop from a config file");
  std::string config_path;
  std::string initial_raw, out_dir;
  int jmax_override = -1, steps_override = -1;
  bool no_plots = false;
  simulate->add_option("--config", config_path, "config file path")->required();
  simulate->add_option("--jmax", jmax_override, "override basis truncation");
  simulate->add_option("--steps", steps_override, "override grid point count");
  simulate->add_option("--initial", initial_raw, "override initial state J,K,M");
  simulate->add_option("--out", out_dir, "override output directory");
  simulate->add_flag("--no-plots", no_plots, "skip SVG plot output");

  // matrix-elements
  auto* matrix = app.add_subcommand("matrix-elements", "dump position-operator elements");
  int me_jmax = 3, me_k_fixed = 0;
  std::string me_axis = "z", me_j_range, me_k_range, me_m_range;
  matrix->add_option("--jmax", me_jmax, "basis truncation")->required();
  matrix->add_option("--axis", me_axis, "x, y or z")->required();
  auto* k_fixed_option = matrix->add_option("--k-fixed", me_k_fixed, "restrict to one K block");
  matrix->add_option("--j-range", me_j_range, "filter J to LO:HI (bra and ket)");
  matrix->add_option("--k-range", me_k_range, "filter K to LO:HI");
  matrix->add_option("--m-range", me_m_range, "filter M to LO:HI");

  // validate
  auto* validate = app.add_subcommand("validate", "run the fast invariant suite");
  int validate_jmax = 6;
  validate->add_option("--jmax", validate_jmax, "basis truncation for the checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (simulate->parsed()) {
      ConfigOverrides overrides;
      overrides.jmax = jmax_override;
      overrides.steps = steps_override;
      overrides.output_dir = out_dir;
      overrides.no_plots = no_plots;
      if (!initial_raw.empty()) {
        BasisState s;
        if (!parse_state_flag(initial_raw, s)) {
          std::cerr << "invalid --initial (expected J,K,M)\n";
          return kExitConfigError;
        }
        overrides.initials = {s};
      }
      return cmd_simulate(config_path, overrides);
    }
    if (matrix->parsed()) {
      return cmd_matrix_elements(me_jmax, me_axis, me_k_fixed, k_fixed_option->count() > 0,
                                 me_j_range, me_k_range, me_m_range);
    }
    if (validate->parsed()) {
      return cmd_validate(validate_jmax);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return kExitSimulationAbort;
  }
  return kExitOk;
}
