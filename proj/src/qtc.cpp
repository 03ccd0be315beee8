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

#include "qtrack/qtc.hpp"

#include <cmath>

#include "qtrack/errors.hpp"

namespace qtrack {

namespace {
constexpr double kMaxCommutatorImag = 1e-10;
constexpr double kResidualSlack = 1e-10;
}  // namespace

TrackingMatrix build_tracking_matrix(const QuadraticExpectations& q, double mu, double b) {
  const double s = 2.0 * mu * b;
  TrackingMatrix m;
  m.a(0, 0) = s * (q.yy + q.zz);
  m.a(1, 1) = s * (q.zz + q.xx);
  m.a(2, 2) = s * (q.xx + q.yy);
  m.a(0, 1) = m.a(1, 0) = -s * q.xy;
  m.a(1, 2) = m.a(2, 1) = -s * q.yz;
  m.a(2, 0) = m.a(0, 2) = -s * q.zx;
  return m;
}

TrackingMatrix build_tracking_matrix(const WaveFunction& psi, const OperatorSet& ops,
                                     double mu, double boundary_threshold) {
  return build_tracking_matrix(quadratic_expectations(psi, ops, boundary_threshold), mu, ops.b);
}

TrackingVector build_tracking_vector(const Eigen::Vector3d& track_accel,
                                     const Eigen::Vector3d& free_accel, double max_imag) {
  if (max_imag > kMaxCommutatorImag) {
    throw ContractViolation("tracking vector: commutator expectation has imaginary part " +
                            std::to_string(max_imag));
  }
  TrackingVector v;
  v.b = track_accel + free_accel;
  return v;
}

TrackingVector build_tracking_vector(const WaveFunction& psi, const Eigen::Vector3d& track_accel,
                                     const OperatorSet& ops) {
  const OperatorMatrix* triples[3] = {&ops.triple_x, &ops.triple_y, &ops.triple_z};
  Eigen::Vector3d free_accel;
  double max_imag = 0.0;
  for (int a = 0; a < 3; ++a) {
    const std::complex<double> v = psi.amplitudes.dot(triples[a]->entries * psi.amplitudes);
    free_accel[a] = v.real();
    max_imag = std::max(max_imag, std::abs(v.imag()));
  }
  return build_tracking_vector(track_accel, free_accel, max_imag);
}

FieldSolution solve_fields(const TrackingMatrix& a, const TrackingVector& b, double t,
                           double guard) {
  if (guard <= 1.0) throw DomainError("solve_fields: guard must exceed 1");

  FieldSolution out;
  out.det = a.a.determinant();

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig;
  eig.computeDirect(a.a, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  out.cond = (lo > 0.0) ? hi / lo : std::numeric_limits<double>::infinity();

  if (!(out.det > 0.0) || out.cond > guard) {
    throw SingularityError(t, out.det, out.cond);
  }

  const Eigen::Vector3d eps = a.a.ldlt().solve(b.b);
  const double residual = (a.a * eps - b.b).lpNorm<Eigen::Infinity>();
  const double scale = std::max(b.b.lpNorm<Eigen::Infinity>(), 1.0);
  if (!eps.allFinite() || residual > kResidualSlack * scale) {
    throw SingularityError(t, out.det, out.cond);
  }

  out.fields = FieldSample{eps[0], eps[1], eps[2], t};
  return out;
}

}  // namespace qtrack
