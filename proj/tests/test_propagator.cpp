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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qtrack/errors.hpp"
#include "qtrack/propagator.hpp"
#include "qtrack/validation.hpp"

using namespace qtrack;

namespace {

RotorSpec test_rotor(int jmax, double c = 0.37) {
  RotorSpec r;
  r.jmax = jmax;
  r.c = c;
  return r;
}

}  // namespace

TEST_SUITE("propagator") {

TEST_CASE("field-free hamiltonian is the eigenvalue diagonal") {
  const RotorSpec rotor = test_rotor(3);
  const Basis basis = Basis::enumerate(3);
  const OperatorSet ops = build_operator_set(rotor, basis);
  const HamiltonianOperator h = assemble_hamiltonian(rotor, ops, FieldSample{});
  const Eigen::MatrixXcd dense = h.dense();
  for (int i = 0; i < basis.dim(); ++i) {
    const BasisState& s = basis.state(i);
    CHECK(dense(i, i).real() ==
          doctest::Approx(h0_eigenvalue(s.j, s.k, rotor.b, rotor.c)).epsilon(1e-14));
  }
  CHECK((dense - Eigen::MatrixXcd(dense.diagonal().asDiagonal())).norm() == 0.0);
}

TEST_CASE("z-coupled block at jmax 1") {
  const RotorSpec rotor = test_rotor(1);
  const Basis basis = Basis::enumerate(1, 0);
  const OperatorSet ops = build_operator_set(rotor, basis);
  const double eps = 0.8;
  const HamiltonianOperator h = assemble_hamiltonian(rotor, ops, FieldSample{0, 0, eps, 0});
  const Eigen::MatrixXcd dense = h.dense();
  REQUIRE(basis.dim() == 4);
  const int i00 = basis.index_of({0, 0, 0});
  const int i10 = basis.index_of({1, 0, 0});
  CHECK(dense(i00, i10).real() ==
        doctest::Approx(-rotor.mu * eps / std::sqrt(3.0)).epsilon(1e-13));
  CHECK((dense - dense.adjoint()).norm() < 1e-14);
}

TEST_CASE("assembled hamiltonian is hermitian for random fields") {
  const RotorSpec rotor = test_rotor(3);
  const OperatorSet ops = build_operator_set(rotor, Basis::enumerate(3));
  const HamiltonianOperator h =
      assemble_hamiltonian(rotor, ops, FieldSample{0.7, -1.3, 0.25, 0.0});
  const Eigen::MatrixXcd dense = h.dense();
  CHECK((dense - dense.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("rotor/operator-set mismatch is a contract violation") {
  const RotorSpec rotor = test_rotor(3);
  const OperatorSet ops = build_operator_set(rotor, Basis::enumerate(3));
  RotorSpec other = rotor;
  other.jmax = 4;
  CHECK_THROWS_AS(assemble_hamiltonian(other, ops, FieldSample{}), ContractViolation);
}

TEST_CASE("eigenstate picks up only a global phase") {
  const RotorSpec rotor = test_rotor(4);
  const Basis basis = Basis::enumerate(4);
  const OperatorSet ops = build_operator_set(rotor, basis);
  const WaveFunction psi = WaveFunction::unit_state(basis, {1, 0, 0});
  const HamiltonianOperator h = assemble_hamiltonian(rotor, ops, FieldSample{});

  const double dt = 0.731;
  const WaveFunction out = step(psi, h, dt);
  const std::complex<double> expected =
      std::exp(std::complex<double>(0.0, -2.0 * rotor.b * dt));
  const int idx = basis.index_of({1, 0, 0});
  CHECK(std::abs(out.amplitudes[idx] - expected) < 1e-12);
  CHECK(std::abs(out.norm() - 1.0) < 1e-13);
}

TEST_CASE("unitarity for random driven steps") {
  const RotorSpec rotor = test_rotor(5);
  const OperatorSet ops = build_operator_set(rotor, Basis::enumerate(5));
  WaveFunction psi = random_state(ops.basis, 99);
  const HamiltonianOperator h =
      assemble_hamiltonian(rotor, ops, FieldSample{2.0, 1.0, -3.0, 0.0});
  for (int i = 0; i < 20; ++i) psi = step(psi, h, 0.05);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}

TEST_CASE("two half steps equal one full step") {
  const RotorSpec rotor = test_rotor(4);
  const OperatorSet ops = build_operator_set(rotor, Basis::enumerate(4));
  const WaveFunction psi = random_state(ops.basis, 7);
  const HamiltonianOperator h =
      assemble_hamiltonian(rotor, ops, FieldSample{1.1, -0.4, 0.9, 0.0});

  const double dt = 0.2;
  const WaveFunction full = step(psi, h, dt);
  const WaveFunction halves = step(step(psi, h, dt / 2.0), h, dt / 2.0);
  CHECK((full.amplitudes - halves.amplitudes).norm() < 1e-10);
}

TEST_CASE("matches dense matrix exponential via eigendecomposition") {
  const RotorSpec rotor = test_rotor(3);
  const OperatorSet ops = build_operator_set(rotor, Basis::enumerate(3));
  const WaveFunction psi = random_state(ops.basis, 5);
  const HamiltonianOperator h =
      assemble_hamiltonian(rotor, ops, FieldSample{0.6, 1.7, -0.8, 0.0});

  const double dt = 0.37;
  const Eigen::MatrixXcd dense = h.dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(dense);
  Eigen::VectorXcd phases(eig.eigenvalues().size());
  for (int i = 0; i < phases.size(); ++i) {
    phases[i] = std::exp(std::complex<double>(0.0, -dt * eig.eigenvalues()[i]));
  }
  const Eigen::VectorXcd exact =
      eig.eigenvectors() * (phases.asDiagonal() * (eig.eigenvectors().adjoint() * psi.amplitudes));

  const WaveFunction out = step(psi, h, dt);
  CHECK((out.amplitudes - exact).norm() < 1e-11);
}

TEST_CASE("500 driven steps agree with the RK4 oracle at jmax 4") {
  const RotorSpec rotor = test_rotor(4);
  const Basis basis = Basis::enumerate(4, 0);
  const OperatorSet ops = build_operator_set(rotor, basis);

  WaveFunction psi = WaveFunction::unit_state(basis, {0, 0, 0});
  Eigen::VectorXcd reference = psi.amplitudes;

  const double dt = 1e-3;
  for (int k = 0; k < 500; ++k) {
    // Piecewise-constant fields that vary from step to step.
    const double t = k * dt;
    const FieldSample fields{4.0 * std::sin(3.0 * t), 4.0 * std::cos(5.0 * t),
                             4.0 * std::sin(7.0 * t + 0.3), t};
    const HamiltonianOperator h = assemble_hamiltonian(rotor, ops, fields);
    psi = step(psi, h, dt);
    reference = oracle::rk4_schrodinger(h.dense(), reference, dt, 20);
  }
  CHECK((psi.amplitudes - reference).norm() < 1e-6);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}

TEST_CASE("free evolution conserves energy") {
  const RotorSpec rotor = test_rotor(4);
  const OperatorSet ops = build_operator_set(rotor, Basis::enumerate(4));
  WaveFunction psi = random_state(ops.basis, 11);
  const HamiltonianOperator h = assemble_hamiltonian(rotor, ops, FieldSample{});
  const auto energy = [&](const WaveFunction& p) {
    return p.amplitudes.dot(ops.h0.asDiagonal() * p.amplitudes).real();
  };
  const double e0 = energy(psi);
  for (int i = 0; i < 200; ++i) psi = step(psi, h, 0.05);
  CHECK(std::abs(energy(psi) - e0) < 1e-10);
}

TEST_CASE("invalid dt") {
  const RotorSpec rotor = test_rotor(2);
  const OperatorSet ops = build_operator_set(rotor, Basis::enumerate(2));
  const WaveFunction psi = WaveFunction::unit_state(ops.basis, {0, 0, 0});
  const HamiltonianOperator h = assemble_hamiltonian(rotor, ops, FieldSample{});
  CHECK_THROWS_AS(step(psi, h, 0.0), DomainError);
  CHECK_THROWS_AS(step(psi, h, -0.1), DomainError);
}

TEST_CASE("subspace cap exhaustion reports the achieved residual") {
  const RotorSpec rotor = test_rotor(8);
  const OperatorSet ops = build_operator_set(rotor, Basis::enumerate(8));
  const WaveFunction psi = random_state(ops.basis, 3);
  const HamiltonianOperator h =
      assemble_hamiltonian(rotor, ops, FieldSample{5.0, -4.0, 3.0, 0.0});
  // A long step cannot converge in a 3-vector subspace.
  CHECK_THROWS_AS(step(psi, h, 2.0, 1e-10, 3), PropagationError);
  try {
    step(psi, h, 2.0, 1e-10, 3);
  } catch (const PropagationError& e) {
    CHECK(e.residual > e.tolerance);
  }
}

}  // TEST_SUITE
