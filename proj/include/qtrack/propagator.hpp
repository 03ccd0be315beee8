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

#include <Eigen/Dense>

#include "qtrack/operators.hpp"
#include "qtrack/qtc.hpp"
#include "qtrack/state.hpp"

namespace qtrack {

/// H = diag(h0) - mu * (eps_x X + eps_y Y + eps_z Z), applied matrix-free.
/// Holds a reference to the operator set; fields are per-step values.
struct HamiltonianOperator {
  const OperatorSet* ops = nullptr;
  double mu = 1.0;
  FieldSample fields;

  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
  Eigen::MatrixXcd dense() const;
};

HamiltonianOperator assemble_hamiltonian(const RotorSpec& rotor, const OperatorSet& ops,
                                         const FieldSample& fields);

/// Action of exp(-i H dt) on psi to `tol` in 2-norm, via a Lanczos subspace
/// with full reorthogonalization; the fields in H are held constant over the
/// step. Throws PropagationError with the achieved residual estimate if the
/// subspace cap is reached without convergence.
WaveFunction step(const WaveFunction& psi, const HamiltonianOperator& h, double dt,
                  double tol = 1e-10, int max_krylov = 64);

}  // namespace qtrack
