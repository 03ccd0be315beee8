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

#pragma once

#include <string>
#include <vector>

#include "qtrack/simulator.hpp"

namespace qtrack {

/// Fully parsed run request: physical constants already nondimensionalized
/// (energies/b, time*b, fields*mu/b), one engine config per initial state.
struct RunRequest {
  std::vector<SimulationConfig> runs;
  std::vector<BasisState> initial_states;

  // Boundary-units bookkeeping for the summary sidecars.
  double b_cm1 = 0;
  double c_cm1 = 0;
  double mu_debye = 0;

  std::string output_dir = "out";
  std::string prefix = "run";
  bool plots = true;
};

/// Parses the sectioned key = value config format. Sections: [molecule],
/// [basis], [initial], [tracks], [grid], [output]. Unknown sections or keys
/// raise ConfigError with a file:line diagnostic; no silent typos.
RunRequest parse_config_file(const std::string& path);

/// CLI override hooks, applied after parsing.
struct ConfigOverrides {
  int jmax = -1;                      // <= 0: keep
  int steps = -1;                     // <= 0: keep
  std::vector<BasisState> initials;   // empty: keep
  std::string output_dir;             // empty: keep
  bool no_plots = false;
};

void apply_overrides(RunRequest& request, const ConfigOverrides& overrides);

}  // namespace qtrack
