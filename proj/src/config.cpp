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

#include "qtrack/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qtrack/errors.hpp"

namespace qtrack {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

using Section = std::map<std::string, Entry>;

struct IniFile {
  std::string path;
  std::map<std::string, Section> sections;
  std::map<std::string, int> section_lines;
};

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

IniFile read_ini(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open config file");

  IniFile ini;
  ini.path = path;
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(path, lineno, "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw ConfigError(path, lineno, "empty section name");
      if (ini.sections.contains(section)) {
        throw ConfigError(path, lineno, "duplicate section [" + section + "]");
      }
      ini.sections[section] = {};
      ini.section_lines[section] = lineno;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path, lineno, "expected key = value");
    if (section.empty()) throw ConfigError(path, lineno, "key outside any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(path, lineno, "empty key");
    auto& sec = ini.sections[section];
    if (sec.contains(key)) throw ConfigError(path, lineno, "duplicate key '" + key + "'");
    sec[key] = Entry{value, lineno, false};
  }
  return ini;
}

class SectionReader {
 public:
  SectionReader(IniFile& ini, const std::string& name) : ini_(ini), name_(name) {
    auto it = ini.sections.find(name);
    section_ = (it != ini.sections.end()) ? &it->second : nullptr;
  }

  bool present() const { return section_ != nullptr; }

  std::optional<std::string> get(const std::string& key) {
    if (!section_) return std::nullopt;
    auto it = section_->find(key);
    if (it == section_->end()) return std::nullopt;
    it->second.used = true;
    return it->second.value;
  }

  std::string require(const std::string& key) {
    auto v = get(key);
    if (!v) {
      throw ConfigError(ini_.path, present() ? ini_.section_lines[name_] : 0,
                        "[" + name_ + "] missing required key '" + key + "'");
    }
    return *v;
  }

  double get_double(const std::string& key, double fallback) {
    auto v = get(key);
    return v ? parse_double(key, *v) : fallback;
  }

  double require_double(const std::string& key) { return parse_double(key, require(key)); }

  int get_int(const std::string& key, int fallback) {
    auto v = get(key);
    return v ? parse_int(key, *v) : fallback;
  }

  bool get_bool(const std::string& key, bool fallback) {
    auto v = get(key);
    if (!v) return fallback;
    std::string s = *v;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    throw ConfigError(ini_.path, line_of(key), "boolean expected for '" + key + "'");
  }

  int line_of(const std::string& key) {
    if (!section_) return 0;
    auto it = section_->find(key);
    return it != section_->end() ? it->second.line : ini_.section_lines[name_];
  }

 private:
  double parse_double(const std::string& key, const std::string& raw) {
    std::size_t consumed = 0;
    double v = 0;
    try {
      v = std::stod(raw, &consumed);
    } catch (const std::exception&) {
      throw ConfigError(ini_.path, line_of(key), "number expected for '" + key + "'");
    }
    if (consumed != raw.size()) {
      throw ConfigError(ini_.path, line_of(key), "trailing junk in '" + key + "'");
    }
    return v;
  }

  int parse_int(const std::string& key, const std::string& raw) {
    std::size_t consumed = 0;
    int v = 0;
    try {
      v = std::stoi(raw, &consumed);
    } catch (const std::exception&) {
      throw ConfigError(ini_.path, line_of(key), "integer expected for '" + key + "'");
    }
    if (consumed != raw.size()) {
      throw ConfigError(ini_.path, line_of(key), "trailing junk in '" + key + "'");
    }
    return v;
  }

  IniFile& ini_;
  std::string name_;
  Section* section_;
};

BasisState parse_state(const IniFile& ini, int line, const std::string& raw) {
  std::istringstream is(raw);
  int j, k, m;
  char c1, c2;
  if (!(is >> j >> c1 >> k >> c2 >> m) || c1 != ',' || c2 != ',') {
    throw ConfigError(ini.path, line, "initial state must be J,K,M");
  }
  std::string rest;
  if (is >> rest) throw ConfigError(ini.path, line, "trailing junk in initial state");
  return BasisState{j, k, m};
}

TrigKind parse_trig(const IniFile& ini, int line, const std::string& raw) {
  if (raw == "sin") return TrigKind::Sin;
  if (raw == "cos") return TrigKind::Cos;
  throw ConfigError(ini.path, line, "phase must be 'sin' or 'cos'");
}

// Whitelist pass, run before any value is consumed so a typo is reported as
// the typo rather than as a missing required key.
void validate_known_keys(const IniFile& ini) {
  static const std::map<std::string, std::set<std::string>> known = {
      {"molecule", {"kind", "b_cm1", "c_cm1", "mu_debye"}},
      {"basis", {"jmax", "full_basis"}},
      {"initial", {"state", "states"}},
      {"tracks",
       {"kind", "amplitude", "width_fraction", "omega_b", "x_center_fraction",
        "y_center_fraction", "z_center_fraction", "x_phase", "y_phase", "z_phase", "x_file",
        "y_file", "z_file"}},
      {"grid", {"horizon_b", "steps", "guard", "boundary_tol", "compat_tol", "step_tol"}},
      {"output", {"dir", "prefix", "plots"}},
  };
  for (const auto& [name, section] : ini.sections) {
    const auto it = known.find(name);
    if (it == known.end()) {
      throw ConfigError(ini.path, ini.section_lines.at(name), "unknown section [" + name + "]");
    }
    for (const auto& [key, entry] : section) {
      if (!it->second.contains(key)) {
        throw ConfigError(ini.path, entry.line, "unknown key '" + key + "' in [" + name + "]");
      }
    }
  }
}

// Keys that are recognized but inapplicable to the chosen mode (e.g. a track
// file under the analytic track kind) are also rejected.
void reject_unused(const IniFile& ini) {
  for (const auto& [name, section] : ini.sections) {
    for (const auto& [key, entry] : section) {
      if (!entry.used) {
        throw ConfigError(ini.path, entry.line,
                          "key '" + key + "' does not apply here in [" + name + "]");
      }
    }
  }
}

}  // namespace

RunRequest parse_config_file(const std::string& path) {
  IniFile ini = read_ini(path);
  validate_known_keys(ini);
  RunRequest request;

  // [molecule]
  SectionReader molecule(ini, "molecule");
  RotorSpec rotor;
  if (!molecule.present()) throw ConfigError(path, 0, "missing [molecule] section");
  {
    const std::string kind = molecule.get("kind").value_or("symmetric_top");
    if (kind == "symmetric_top") {
      rotor.kind = RotorKind::SymmetricTop;
    } else if (kind == "linear") {
      rotor.kind = RotorKind::Linear;
    } else {
      throw ConfigError(path, molecule.line_of("kind"), "kind must be symmetric_top or linear");
    }
    request.b_cm1 = molecule.require_double("b_cm1");
    if (!(request.b_cm1 > 0.0)) {
      throw ConfigError(path, molecule.line_of("b_cm1"), "b_cm1 must be positive");
    }
    request.mu_debye = molecule.require_double("mu_debye");
    if (!(request.mu_debye > 0.0)) {
      throw ConfigError(path, molecule.line_of("mu_debye"), "mu_debye must be positive");
    }
    // Nondimensionalization boundary: energies in units of b, dipole in mu.
    rotor.b = 1.0;
    rotor.mu = 1.0;
    if (rotor.kind == RotorKind::SymmetricTop) {
      request.c_cm1 = molecule.require_double("c_cm1");
      rotor.c = request.c_cm1 / request.b_cm1;
    } else {
      request.c_cm1 = molecule.get_double("c_cm1", 0.0);  // tolerated, ignored
      rotor.c = 1.0;
    }
  }

  // [basis]
  SectionReader basis(ini, "basis");
  rotor.jmax = basis.get_int("jmax", 12);
  const bool full_basis = basis.get_bool("full_basis", false);
  if (rotor.jmax < 1) throw ConfigError(path, basis.line_of("jmax"), "jmax must be >= 1");

  // [initial]
  SectionReader initial(ini, "initial");
  if (auto one = initial.get("state")) {
    request.initial_states.push_back(parse_state(ini, initial.line_of("state"), *one));
  }
  if (auto many = initial.get("states")) {
    std::istringstream is(*many);
    std::string item;
    while (std::getline(is, item, ';')) {
      item = trim(item);
      if (item.empty()) continue;
      request.initial_states.push_back(parse_state(ini, initial.line_of("states"), item));
    }
  }
  if (request.initial_states.empty()) {
    throw ConfigError(path, 0, "[initial] must define 'state' or 'states'");
  }

  // [grid]
  SectionReader grid(ini, "grid");
  const double horizon = grid.get_double("horizon_b", 5.0);
  const int steps = grid.get_int("steps", 10000);
  const double guard = grid.get_double("guard", 1e8);
  const double boundary_tol = grid.get_double("boundary_tol", 1e-8);
  const double compat_tol = grid.get_double("compat_tol", 1e-3);
  const double step_tol = grid.get_double("step_tol", 1e-10);

  // [tracks]
  SectionReader tracks(ini, "tracks");
  TrackSet track_set;
  {
    const std::string kind = tracks.get("kind").value_or("gaussian_sinusoid");
    if (kind == "gaussian_sinusoid") {
      const double amplitude = tracks.get_double("amplitude", 0.2);
      const double width = tracks.get_double("width_fraction", 0.125) * horizon;
      const double omega = tracks.get_double("omega_b", 8.0);
      const double cx = tracks.get_double("x_center_fraction", 0.8) * horizon;
      const double cy = tracks.get_double("y_center_fraction", 0.8) * horizon;
      const double cz = tracks.get_double("z_center_fraction", 1.0) * horizon;
      const TrigKind px =
          parse_trig(ini, tracks.line_of("x_phase"), tracks.get("x_phase").value_or("sin"));
      const TrigKind py =
          parse_trig(ini, tracks.line_of("y_phase"), tracks.get("y_phase").value_or("cos"));
      const TrigKind pz =
          parse_trig(ini, tracks.line_of("z_phase"), tracks.get("z_phase").value_or("cos"));
      if (!(width > 0.0)) {
        throw ConfigError(path, tracks.line_of("width_fraction"), "track width must be positive");
      }
      track_set.x = gaussian_sinusoid_track(amplitude, cx, width, omega, px);
      track_set.y = gaussian_sinusoid_track(amplitude, cy, width, omega, py);
      track_set.z = gaussian_sinusoid_track(amplitude, cz, width, omega, pz);
    } else if (kind == "tabulated") {
      const std::string fx = tracks.require("x_file");
      const std::string fy = tracks.require("y_file");
      const std::string fz = tracks.require("z_file");
      try {
        track_set.x = tabulated_track(read_track_samples(fx));
        track_set.y = tabulated_track(read_track_samples(fy));
        track_set.z = tabulated_track(read_track_samples(fz));
      } catch (const DomainError& e) {
        throw ConfigError(path, tracks.line_of("kind"), e.what());
      }
    } else {
      throw ConfigError(path, tracks.line_of("kind"),
                        "track kind must be gaussian_sinusoid or tabulated");
    }
  }

  // [output]
  SectionReader output(ini, "output");
  request.output_dir = output.get("dir").value_or("out");
  request.prefix = output.get("prefix").value_or("run");
  request.plots = output.get_bool("plots", true);

  reject_unused(ini);

  for (const BasisState& s : request.initial_states) {
    SimulationConfig config;
    config.rotor = rotor;
    config.initial_state = s;
    config.tracks = track_set;
    config.horizon = horizon;
    config.steps = steps;
    config.guard = guard;
    config.boundary_tol = boundary_tol;
    config.compat_tol = compat_tol;
    config.step_tol = step_tol;
    config.restrict_k_block = !full_basis;
    request.runs.push_back(std::move(config));
  }
  return request;
}

void apply_overrides(RunRequest& request, const ConfigOverrides& overrides) {
  if (!overrides.initials.empty()) {
    request.initial_states = overrides.initials;
    std::vector<SimulationConfig> runs;
    for (const BasisState& s : overrides.initials) {
      SimulationConfig config = request.runs.front();
      config.initial_state = s;
      runs.push_back(std::move(config));
    }
    request.runs = std::move(runs);
  }
  for (SimulationConfig& config : request.runs) {
    if (overrides.jmax > 0) config.rotor.jmax = overrides.jmax;
    if (overrides.steps > 0) config.steps = overrides.steps;
  }
  if (!overrides.output_dir.empty()) request.output_dir = overrides.output_dir;
  if (overrides.no_plots) request.plots = false;
}

}  // namespace qtrack
