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
#include "qtrack/state.hpp"

namespace qtrack {

/// Symmetric 3x3 observable-dynamics matrix, entries in units of mu*b.
struct TrackingMatrix {
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
};

/// Right-hand side combining the designated track acceleration with the
/// free-evolution double-commutator expectation.
struct TrackingVector {
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
};

/// Instantaneous values of the three orthogonal control fields, in units of
/// b/mu, tagged with their grid time.
struct FieldSample {
  double eps_x = 0, eps_y = 0, eps_z = 0;
  double t = 0;

  Eigen::Vector3d vec() const { return {eps_x, eps_y, eps_z}; }
};

/// Diagonal entries 2*mu*b*<beta^2 + gamma^2>, off-diagonal -2*mu*b*<beta*gamma>.
TrackingMatrix build_tracking_matrix(const QuadraticExpectations& quad, double mu, double b);
TrackingMatrix build_tracking_matrix(const WaveFunction& psi, const OperatorSet& ops,
                                     double mu, double boundary_threshold = 1e-8);

/// b = designated acceleration + <[H0,[H0,R]]>. The commutator expectation
/// must be real; an imaginary part above 1e-10 trips a contract violation.
TrackingVector build_tracking_vector(const Eigen::Vector3d& track_accel,
                                     const Eigen::Vector3d& free_accel,
                                     double max_imag = 0.0);
TrackingVector build_tracking_vector(const WaveFunction& psi, const Eigen::Vector3d& track_accel,
                                     const OperatorSet& ops);

struct FieldSolution {
  FieldSample fields;
  double det = 0;   // det(A)
  double cond = 0;  // spectral condition estimate of A
};

/// Solves A*eps = b through a symmetric-positive-definite factorization.
/// Throws SingularityError (carrying t, det, cond) when det(A) <= 0, the
/// condition estimate exceeds the guard, or the solve residual is not small;
/// callers must abort rather than emit such fields.
FieldSolution solve_fields(const TrackingMatrix& a, const TrackingVector& b, double t,
                           double guard = 1e8);

}  // namespace qtrack
