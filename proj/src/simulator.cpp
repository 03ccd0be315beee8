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

#include "qtrack/simulator.hpp"

#include <chrono>
#include <cmath>
#include <optional>

#include "qtrack/errors.hpp"

namespace qtrack {

namespace {

void validate_config(const SimulationConfig& config) {
  const RotorSpec& r = config.rotor;
  if (!(r.b > 0.0) || !(r.mu > 0.0)) throw DomainError("rotor: b and mu must be positive");
  if (r.jmax < 1) throw DomainError("rotor: jmax must be >= 1");
  if (config.steps < 2) throw DomainError("grid: steps must be >= 2");
  if (!(config.horizon > 0.0)) throw DomainError("grid: horizon must be positive");
  const BasisState& s = config.initial_state;
  if (s.j < 0 || s.j > r.jmax || std::abs(s.k) > s.j || std::abs(s.m) > s.j) {
    throw DomainError("initial state outside the basis");
  }
  if (r.kind == RotorKind::Linear && s.k != 0) {
    throw DomainError("linear rotor: initial state must have K = 0");
  }
}

struct LoopMode {
  bool invert = true;                       // false: fields come from `given`
  std::span<const FieldSample> given = {};  // replay input
};

SimulationRecord run_loop(const SimulationConfig& config, const LoopMode& mode) {
  validate_config(config);
  const auto t_start = std::chrono::steady_clock::now();

  const std::optional<int> k_block =
      config.restrict_k_block ? std::optional<int>(config.initial_state.k) : std::nullopt;
  const Basis basis = Basis::enumerate(config.rotor.jmax, k_block);
  const OperatorSet ops = build_operator_set(config.rotor, basis);

  WaveFunction psi = WaveFunction::unit_state(basis, config.initial_state);

  SimulationRecord record;
  record.compatibility = compatibility_report(config.tracks, psi, ops);
  record.compatibility_warning = !record.compatibility.within(config.compat_tol);
  record.min_det = std::numeric_limits<double>::infinity();

  const int n = config.steps;
  const double dt = config.horizon / (n - 1);
  record.rows.reserve(static_cast<std::size_t>(n));

  Eigen::Vector3d sum_sq = Eigen::Vector3d::Zero();
  FieldSample current_fields;

  for (int k = 0; k < n; ++k) {
    const double t = k * dt;
    StepRecord row;
    row.t = t;

    try {
      const StateObservables obs = observe(psi, ops, config.boundary_tol);
      row.norm = obs.norm;
      row.boundary_pop = obs.quad.boundary_pop;

      const Eigen::Vector3d designated = config.tracks.value(t);
      row.x = obs.position[0];
      row.y = obs.position[1];
      row.z = obs.position[2];
      row.x_d = designated[0];
      row.y_d = designated[1];
      row.z_d = designated[2];

      const TrackingMatrix a = build_tracking_matrix(obs.quad, config.rotor.mu, config.rotor.b);
      record.trace_defect_max =
          std::max(record.trace_defect_max,
                   std::abs(a.a.trace() / (4.0 * config.rotor.mu * config.rotor.b) - 1.0));
      if (mode.invert) {
        const TrackingVector b =
            build_tracking_vector(config.tracks.d2(t), obs.free_accel, obs.free_accel_max_imag);
        const FieldSolution solution = solve_fields(a, b, t, config.guard);
        current_fields = solution.fields;
        row.det_a = solution.det;
        row.cond_a = solution.cond;
      } else {
        current_fields = mode.given[static_cast<std::size_t>(k)];
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig;
        eig.computeDirect(a.a, Eigen::EigenvaluesOnly);
        const double lo = eig.eigenvalues().minCoeff();
        row.det_a = a.a.determinant();
        row.cond_a = (lo > 0.0) ? eig.eigenvalues().maxCoeff() / lo
                                : std::numeric_limits<double>::infinity();
      }
      row.eps_x = current_fields.eps_x;
      row.eps_y = current_fields.eps_y;
      row.eps_z = current_fields.eps_z;

      record.rows.push_back(row);
      record.norm_drift_max = std::max(record.norm_drift_max, std::abs(obs.norm - 1.0));
      record.min_det = std::min(record.min_det, row.det_a);
      record.max_boundary_pop = std::max(record.max_boundary_pop, row.boundary_pop);
      if (!basis.k_fixed()) {
        record.k_leakage_max = std::max(
            record.k_leakage_max, off_block_population(psi, basis, config.initial_state.k));
      }

      const Eigen::Vector3d err = (obs.position - designated).cwiseAbs();
      record.max_error = record.max_error.cwiseMax(err);
      sum_sq += err.cwiseProduct(err);

      if (k + 1 < n) {
        const HamiltonianOperator h{&ops, config.rotor.mu, current_fields};
        psi = step(psi, h, dt, config.step_tol);
      }
    } catch (const SingularityError& e) {
      record.status = RunStatus::SingularityAbort;
      record.failure_reason = e.what();
      record.failed_step = k;
      break;
    } catch (const TruncationError& e) {
      record.status = RunStatus::TruncationAbort;
      record.failure_reason = e.what();
      record.failed_step = k;
      break;
    } catch (const PropagationError& e) {
      record.status = RunStatus::PropagationAbort;
      record.failure_reason = e.what();
      record.failed_step = k;
      break;
    }
  }

  if (!record.rows.empty()) {
    record.rms_error = (sum_sq / static_cast<double>(record.rows.size())).cwiseSqrt();
  }
  if (record.min_det == std::numeric_limits<double>::infinity()) record.min_det = 0.0;
  record.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return record;
}

}  // namespace

std::vector<FieldSample> SimulationRecord::field_samples() const {
  std::vector<FieldSample> fields;
  fields.reserve(rows.size());
  for (const StepRecord& row : rows) {
    fields.push_back(FieldSample{row.eps_x, row.eps_y, row.eps_z, row.t});
  }
  return fields;
}

SimulationRecord run(const SimulationConfig& config) { return run_loop(config, LoopMode{}); }

SimulationRecord run_linear(const SimulationConfig& config) {
  if (config.rotor.kind != RotorKind::Linear) {
    throw DomainError("run_linear: rotor kind must be linear");
  }
  if (config.initial_state.k != 0) {
    throw DomainError("run_linear: initial state must have K = 0");
  }
  if (!config.restrict_k_block) {
    // A linear rotor has no K degree of freedom at all.
    SimulationConfig restricted = config;
    restricted.restrict_k_block = true;
    return run_loop(restricted, LoopMode{});
  }
  return run_loop(config, LoopMode{});
}

SimulationRecord replay(const SimulationConfig& config, std::span<const FieldSample> fields) {
  if (static_cast<int>(fields.size()) < config.steps) {
    throw DomainError("replay: need one field sample per grid point");
  }
  return run_loop(config, LoopMode{false, fields});
}

}  // namespace qtrack
