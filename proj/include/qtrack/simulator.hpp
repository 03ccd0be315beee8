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

#include <span>
#include <string>
#include <vector>

#include "qtrack/propagator.hpp"
#include "qtrack/qtc.hpp"
#include "qtrack/rotor.hpp"
#include "qtrack/tracks.hpp"

namespace qtrack {

struct SimulationConfig {
  RotorSpec rotor;
  BasisState initial_state;
  TrackSet tracks;
  double horizon = 5.0;  // internal time units (b * t)
  int steps = 10000;     // grid points over [0, horizon]
  double guard = 1e8;            // condition-number abort threshold
  double boundary_tol = 1e-8;    // truncation-shell population threshold
  double compat_tol = 1e-3;      // initial value/slope mismatch warning level
  double step_tol = 1e-10;       // per-step exponential accuracy
  bool restrict_k_block = true;  // simulate only the initial state's K block
};

/// One grid point of a run; matches the CSV column order exactly.
struct StepRecord {
  double t = 0;
  double eps_x = 0, eps_y = 0, eps_z = 0;
  double x = 0, y = 0, z = 0;
  double x_d = 0, y_d = 0, z_d = 0;
  double det_a = 0, cond_a = 0;
  double norm = 0;
  double boundary_pop = 0;
};

enum class RunStatus { Ok, SingularityAbort, TruncationAbort, PropagationAbort };

struct SimulationRecord {
  std::vector<StepRecord> rows;
  RunStatus status = RunStatus::Ok;
  std::string failure_reason;  // empty on success
  int failed_step = -1;

  Eigen::Vector3d max_error = Eigen::Vector3d::Zero();  // per-axis max |<R> - <R>_d|
  Eigen::Vector3d rms_error = Eigen::Vector3d::Zero();
  double runtime_seconds = 0;
  double norm_drift_max = 0;      // max |norm - 1| over the run
  double k_leakage_max = 0;       // population outside the initial K block
  double min_det = 0;
  double max_boundary_pop = 0;
  double trace_defect_max = 0;    // max |trace(A)/(4 mu b) - 1| over the run
  CompatibilityReport compatibility;
  bool compatibility_warning = false;

  bool ok() const { return status == RunStatus::Ok; }

  std::vector<FieldSample> field_samples() const;
};

/// Runs the tracking loop: fields at grid point k are solved from the state
/// at k, then held constant while propagating to k+1. Aborts cleanly on
/// singularity, truncation or propagation failures, keeping the partial
/// record with the failure diagnostics.
SimulationRecord run(const SimulationConfig& config);

/// Linear-rotor mode: the K = 0 block with H0 = B*J(J+1). The initial state
/// must have K = 0 and the rotor kind must be Linear.
SimulationRecord run_linear(const SimulationConfig& config);

/// Forward-only re-simulation with prescribed fields (no inversion); used to
/// confirm that the tracking loop and the forward model agree.
SimulationRecord replay(const SimulationConfig& config, std::span<const FieldSample> fields);

}  // namespace qtrack
